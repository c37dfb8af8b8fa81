#include "mukai/twisted.hpp"

namespace mukai {

Rat rk_twisted(const TwistData& G, const MukaiVector& x) { return Rat(G.g.r * x.r); }

Rat deg_twisted(const TwistData& G, const MukaiVector& x, const NSLattice& lat) {
    return Rat(G.g.r * lat.deg(x.c1) - x.r * lat.deg(G.g.c1));
}

Rat chi_twisted(const TwistData& G, const MukaiVector& x, const NSLattice& lat, Surface kind) {
    MukaiVector t = mukai_tensor(dual(G.g), x, lat, kind);
    return Rat(-pairing(t, structure_sheaf_vector(lat, kind), lat));
}

namespace {

Order cmp(const Rat& a, const Rat& b) {
    if (a < b) return Order::Less;
    if (a > b) return Order::Greater;
    return Order::Equal;
}

}  // namespace

Order hilbert_compare(const TwistData& G, const MukaiVector& f, const MukaiVector& e, const NSLattice& lat,
                      Surface kind) {
    Rat rkf = rk_twisted(G, f);
    Rat rke = rk_twisted(G, e);
    if (rkf == 0 || rke == 0) throw std::domain_error("hilbert_compare: twisted rank is zero");
    /* p(m) = n m^2 + (deg_G/rk_G) m + chi_G/rk_G; the leading terms agree, so
     * the order is decided by the two lower coefficients. */
    Order mid = cmp(Rat(deg_twisted(G, f, lat) / rkf), Rat(deg_twisted(G, e, lat) / rke));
    if (mid != Order::Equal) return mid;
    return cmp(Rat(chi_twisted(G, f, lat, kind) / rkf), Rat(chi_twisted(G, e, lat, kind) / rke));
}

Order mu_compare(const MukaiVector& f, const MukaiVector& e, const NSLattice& lat) {
    if (f.r == 0 || e.r == 0) throw std::domain_error("mu_compare: rank is zero");
    return cmp(Rat(lat.deg(f.c1) / f.r), Rat(lat.deg(e.c1) / e.r));
}

Rat bogomolov_floor(const Rat& a, const Rat& l, const Int& r0, Surface kind) {
    if (r0 <= 0) throw std::invalid_argument("bogomolov_floor: r0 must be positive");
    Rat ar = Rat(a * r0);
    Rat lr = Rat(l * r0);
    if (!is_integer(ar) || !is_integer(lr))
        throw std::invalid_argument("bogomolov_floor: a*r0 and l*r0 must be integers");
    Int g = gcd_int(ar.get_num(), lr.get_num());
    return Rat(Rat(-2 * epsilon(kind)) * g * g);
}

bool respects_bogomolov_floor(const Rat& square, const Rat& a, const Rat& l, const Int& r0, Surface kind) {
    return square >= bogomolov_floor(a, l, r0, kind);
}

}  // namespace mukai
