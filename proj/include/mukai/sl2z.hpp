#pragma once

#include <string>
#include <vector>

#include "mukai/rational.hpp"

namespace mukai {

/* Integer coordinates (r, d, a) in Z + ZH + Z rho for NS = ZH with
 * (H,H) = 2n. */
struct AlgVector {
    Int r, d, a;

    bool operator==(const AlgVector& o) const { return r == o.r && d == o.d && a == o.a; }
    bool operator!=(const AlgVector& o) const { return !(*this == o); }
};

std::string to_string(const AlgVector& v);

/* <x, y> = 2n dx dy - rx ay - ax ry; the square is 2n d^2 - 2ra. */
Int alg_pairing(const AlgVector& x, const AlgVector& y, const Int& n);
Int alg_square(const AlgVector& v, const Int& n);

/* Generators: S the covariant transform (swap, principal polarization
 * only), T tensoring by O(H), Tinv by O(-H). */
enum class Gen { S, T, Tinv };

/* Letters: 'S', 'T', 't' (= T^{-1}); whitespace ignored. */
std::vector<Gen> parse_word(const std::string& word);

AlgVector apply_gen(Gen g, const AlgVector& v, const Int& n, bool allow_nonprincipal = false);

/* Functional composition order: the rightmost letter acts first, so
 * "ST" sends v to S(T(v)). */
AlgVector sl2z_apply(const std::vector<Gen>& word, const AlgVector& v, const Int& n,
                     bool allow_nonprincipal = false);

/* v or -v, whichever is positive: r > 0, or r = 0 and d > 0, or
 * r = d = 0 and a > 0.  Errors on v = 0. */
struct Normalized {
    AlgVector v;
    int sign;  // +1 or -1
};
Normalized positive_normalize(const AlgVector& v);

/* The birational-correspondence move: for r, d > 0 the moduli space of v
 * maps to the moduli space of the target under the named functor; the
 * companion (r, -d, a) is always birational to v. */
struct BiratTarget {
    AlgVector target;
    std::string functor;  // "G_P" | "F_P" | "G_P isomorphism"
    AlgVector companion;
};
BiratTarget birat_target(const AlgVector& v, const Int& n);

}  // namespace mukai
