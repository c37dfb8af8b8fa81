#include "mukai/sl2z.hpp"

#include <stdexcept>

namespace mukai {

std::string to_string(const AlgVector& v) {
    return "(" + int_str(v.r) + ", " + int_str(v.d) + ", " + int_str(v.a) + ")";
}

Int alg_pairing(const AlgVector& x, const AlgVector& y, const Int& n) {
    return 2 * n * x.d * y.d - x.r * y.a - x.a * y.r;
}

Int alg_square(const AlgVector& v, const Int& n) { return alg_pairing(v, v, n); }

std::vector<Gen> parse_word(const std::string& word) {
    std::vector<Gen> out;
    for (char ch : word) {
        switch (ch) {
            case 'S': out.push_back(Gen::S); break;
            case 'T': out.push_back(Gen::T); break;
            case 't': out.push_back(Gen::Tinv); break;
            case ' ':
            case '\t': break;
            default: throw std::invalid_argument(std::string("parse_word: unknown letter '") + ch + "'");
        }
    }
    return out;
}

AlgVector apply_gen(Gen g, const AlgVector& v, const Int& n, bool allow_nonprincipal) {
    if (n <= 0) throw std::invalid_argument("apply_gen: n must be positive");
    switch (g) {
        case Gen::S:
            if (n != 1 && !allow_nonprincipal)
                throw std::invalid_argument("the swap generator requires a principal polarization (n = 1)");
            return AlgVector{v.a, -v.d, v.r};
        case Gen::T: return AlgVector{v.r, v.d + v.r, v.a + 2 * n * v.d + n * v.r};
        default: return AlgVector{v.r, v.d - v.r, v.a - 2 * n * v.d + n * v.r};
    }
}

AlgVector sl2z_apply(const std::vector<Gen>& word, const AlgVector& v, const Int& n, bool allow_nonprincipal) {
    AlgVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_gen(*it, out, n, allow_nonprincipal);
    return out;
}

Normalized positive_normalize(const AlgVector& v) {
    const auto positive = [](const AlgVector& x) {
        if (x.r != 0) return x.r > 0;
        if (x.d != 0) return x.d > 0;
        return x.a > 0;
    };
    if (v.r == 0 && v.d == 0 && v.a == 0) throw std::invalid_argument("positive_normalize: zero vector");
    if (positive(v)) return Normalized{v, +1};
    return Normalized{AlgVector{-v.r, -v.d, -v.a}, -1};
}

BiratTarget birat_target(const AlgVector& v, const Int& n) {
    if (n <= 0) throw std::invalid_argument("birat_target: n must be positive");
    BiratTarget out;
    out.companion = AlgVector{v.r, -v.d, v.a};
    if (v.r > 0 && v.d > 0) {
        if (v.a > 0) {
            out.target = AlgVector{v.a, v.d, v.r};
            out.functor = "G_P";
        } else {
            out.target = positive_normalize(AlgVector{-v.a, v.d, -v.r}).v;
            out.functor = "F_P";
        }
        return out;
    }
    if (v.r > 0 && v.d == 0 && v.a < 0) {
        out.target = AlgVector{-v.a, 0, -v.r};
        out.functor = "G_P isomorphism";
        return out;
    }
    throw std::invalid_argument("birat_target: no stated branch covers " + to_string(v));
}

}  // namespace mukai
