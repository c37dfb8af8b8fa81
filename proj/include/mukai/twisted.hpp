#pragma once

#include "mukai/lattice.hpp"

namespace mukai {

/* Twisting object G with rk G > 0, carried by its Mukai vector. */
struct TwistData {
    MukaiVector g;

    explicit TwistData(MukaiVector gv) : g(std::move(gv)) {
        if (g.r <= 0) throw std::invalid_argument("TwistData: rank of the twist must be positive");
    }

    /* Structure sheaf twist (1, 0, epsilon): recovers the untwisted
     * invariants. */
    static TwistData trivial(const NSLattice& lat, Surface kind) {
        return TwistData(structure_sheaf_vector(lat, kind));
    }
};

/* rk_G(x) = rk(G) rk(x). */
Rat rk_twisted(const TwistData& G, const MukaiVector& x);

/* deg_G(x) = rk(G)(c1(x),H) - rk(x)(c1(G),H). */
Rat deg_twisted(const TwistData& G, const MukaiVector& x, const NSLattice& lat);

/* chi_G(x) = chi(G^v ox x) = -< tensor(dual(g), x), (1,0,epsilon) >;
 * equal to -<g, x>. */
Rat chi_twisted(const TwistData& G, const MukaiVector& x, const NSLattice& lat, Surface kind);

enum class Order { Less, Equal, Greater };

inline const char* to_string(Order o) {
    switch (o) {
        case Order::Less: return "less";
        case Order::Equal: return "equal";
        default: return "greater";
    }
}

/* Exact comparison of the reduced twisted Hilbert polynomials
 * p(m) = chi_G(. ox e^{mH}) / rk_G(.), coefficient by coefficient from the
 * top.  Both twisted ranks must be nonzero. */
Order hilbert_compare(const TwistData& G, const MukaiVector& f, const MukaiVector& e, const NSLattice& lat,
                      Surface kind);

/* Slope order alone: deg/rk, exact. */
Order mu_compare(const MukaiVector& f, const MukaiVector& e, const NSLattice& lat);

/* Floor for the self-pairing of a semistable class with coordinates (a, l):
 * -2 epsilon g^2 with g = gcd(a r0, l r0).  Demands a r0, l r0 integral. */
Rat bogomolov_floor(const Rat& a, const Rat& l, const Int& r0, Surface kind);

bool respects_bogomolov_floor(const Rat& square, const Rat& a, const Rat& l, const Int& r0, Surface kind);

}  // namespace mukai
