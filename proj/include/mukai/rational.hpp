#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mukai {

using Int = mpz_class;
using Rat = mpq_class;

/* mpq_class(num, den) does not reduce; every construction from a
 * numerator/denominator pair must go through here. */
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int int_part(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("int_part: " + q.get_str() + " is not an integer");
    return q.get_num();
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/* Canonical text form: "p" when the denominator is 1, else "p/q". */
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::string int_str(const Int& z) { return z.get_str(); }

/* Accepts "p" or "p/q" with optional sign; rejects everything else. */
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rat max_rat(const Rat& a, const Rat& b) { return a >= b ? a : b; }
inline Rat min_rat(const Rat& a, const Rat& b) { return a <= b ? a : b; }

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace mukai
