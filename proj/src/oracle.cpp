#include "mukai/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mukai {

std::string to_string(KeyClaim c) {
    switch (c) {
        case KeyClaim::KeyPart1: return "KeyPart1";
        case KeyClaim::KeyPart2: return "KeyPart2";
        case KeyClaim::KeyRem1: return "KeyRem1";
        case KeyClaim::KeyRem2: return "KeyRem2";
        case KeyClaim::Key0Part1: return "Key0Part1";
        case KeyClaim::Key0Part2: return "Key0Part2";
        case KeyClaim::Key0Rem1: return "Key0Rem1";
        default: return "Key0Rem2";
    }
}

namespace {

bool candidate_less(const CandidateVector& x, const CandidateVector& y) {
    if (x.d1 != y.d1) return x.d1 < y.d1;
    if (x.a1 != y.a1) return x.a1 < y.a1;
    if (x.l1 != y.l1) return x.l1 < y.l1;
    return std::lexicographical_compare(x.D1.coords.begin(), x.D1.coords.end(), y.D1.coords.begin(),
                                        y.D1.coords.end());
}

struct SweepPlan {
    Rat quantum;       // 1/(2 n r0)
    Rat floor;         // minimum admissible square
    Int cap_a;         // a1 <= cap_a
    Int cap_l;         // |l1| <= cap_l
    bool certified;    // caps cover every candidate that could break a claim
    std::vector<NSClass> d1_classes;
    std::vector<Rat> d1_squares;
};

Int derived_cap(const FMContext& ctx, const FMCoordinates& c, const Rat& floor) {
    // Any candidate that can break a claim has l1 >= 1/r0 and a1 >= 1/r0, so
    // 2 r0 l1 a1 <= 2 n d1^2 + (D1^2) - floor <= 2 n d^2 - floor bounds both
    // coordinates by (2 n d^2 - floor) / 2.
    const Rat bound = (2 * Rat(ctx.n()) * c.d * c.d - floor) / 2;
    Int cap = rat_ceil(bound);
    if (cap < 1) cap = 1;
    return cap;
}

SweepPlan make_plan(const FMContext& ctx, const FMCoordinates& c, const EnumConstraints& constraints) {
    if (!(c.d > 0)) throw std::invalid_argument("candidate sweep requires d > 0");
    if (!(c.a > 0)) throw std::invalid_argument("candidate sweep requires a > 0");
    if (constraints.caps.a1 < 0 || constraints.caps.l1 < 0)
        throw std::invalid_argument("candidate caps must be nonnegative");

    SweepPlan plan;
    plan.quantum = ctx.d_quantum();
    plan.floor = constraints.stable_floor.value_or(Rat(-2 * epsilon(ctx.kind())));

    const Int derived = derived_cap(ctx, c, plan.floor);
    plan.cap_a = constraints.caps.a1 == 0 ? derived : constraints.caps.a1;
    plan.cap_l = constraints.caps.l1 == 0 ? derived : constraints.caps.l1;
    plan.certified = plan.cap_a >= derived && plan.cap_l >= derived;

    if (constraints.D1_list.empty()) {
        plan.d1_classes.push_back(NSClass::zero(ctx.ns_y().rank()));
    } else {
        plan.d1_classes = constraints.D1_list;
    }
    for (const NSClass& D1 : plan.d1_classes) {
        if (D1.rank() != ctx.ns_y().rank())
            throw std::invalid_argument("candidate D1 class has the wrong rank");
        if (ctx.ns_y().pair(D1, ctx.ns_y().ample()) != 0)
            throw std::invalid_argument("candidate D1 class must be orthogonal to the polarization");
        plan.d1_squares.push_back(ctx.ns_y().square(D1));
    }
    return plan;
}

/* Stream the candidates of one d1 slice in canonical (a1, l1, D1-list)
 * order.  Emits exactly the region: a1 > 0, a1 >= a d1 / d, square >= floor,
 * a1 <= cap_a, |l1| <= cap_l. */
template <typename Fn>
void sweep_slice(const FMContext& ctx, const FMCoordinates& c, const SweepPlan& plan, const Rat& d1, Fn&& emit) {
    const Int& r0 = ctx.r0();
    const Rat two_n_d1sq = 2 * Rat(ctx.n()) * d1 * d1;
    const Int A_hi = r0 * plan.cap_a;
    Int A_lo = rat_ceil(Rat(r0) * c.a * d1 / c.d);
    if (A_lo < 1) A_lo = 1;
    const Int L_cap = r0 * plan.cap_l;
    for (Int A = A_lo; A <= A_hi; ++A) {
        const Rat a1 = make_rat(A, r0);
        for (size_t di = 0; di < plan.d1_classes.size(); ++di) {
            // square = 2 n d1^2 + (D1^2) - 2 L A / r0 >= floor bounds L above.
            const Rat S0 = two_n_d1sq + plan.d1_squares[di] - plan.floor;
            Int L_hi = rat_floor(S0 * Rat(r0) / (2 * a1 * Rat(r0)));
            if (L_hi > L_cap) L_hi = L_cap;
            for (Int L = -L_cap; L <= L_hi; ++L) {
                CandidateVector cand;
                cand.a1 = a1;
                cand.l1 = make_rat(L, r0);
                cand.d1 = d1;
                cand.D1 = plan.d1_classes[di];
                cand.square = two_n_d1sq + plan.d1_squares[di] - 2 * make_rat(L * A, r0);
                emit(cand);
            }
        }
    }
}

template <typename Fn>
long sweep_all(const FMContext& ctx, const FMCoordinates& c, const SweepPlan& plan, bool include_d_equal,
               Fn&& emit) {
    long count = 0;
    auto counted = [&](const CandidateVector& cand) {
        ++count;
        emit(cand);
    };
    // Main slice: d1 = j q for j = 1 .. (d - q)/q.
    const Int j_hi = rat_floor((c.d - plan.quantum) / plan.quantum);
    for (Int j = 1; j <= j_hi; ++j) sweep_slice(ctx, c, plan, Rat(j) * plan.quantum, counted);
    if (include_d_equal) sweep_slice(ctx, c, plan, c.d, counted);
    return count;
}

}  // namespace

OracleCaps certified_caps(const FMContext& ctx, const FMCoordinates& c) {
    if (!(c.d > 0)) throw std::invalid_argument("candidate sweep requires d > 0");
    const Rat floor(-2 * epsilon(ctx.kind()));
    const Int cap = derived_cap(ctx, c, floor);
    OracleCaps caps;
    caps.a1 = cap;
    caps.l1 = cap;
    return caps;
}

std::vector<CandidateVector> enumerate_candidates(const FMContext& ctx, const FMCoordinates& c,
                                                  const EnumConstraints& constraints) {
    const SweepPlan plan = make_plan(ctx, c, constraints);
    std::vector<CandidateVector> out;
    sweep_all(ctx, c, plan, constraints.include_d_equal, [&](const CandidateVector& cand) { out.push_back(cand); });
    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

KeyClaimsResult verify_key_claims(const FMContext& ctx, const FMCoordinates& c, const OracleCaps& caps) {
    if (c.l < 0) throw std::invalid_argument("verify_key_claims requires l >= 0");
    EnumConstraints constraints;
    constraints.caps = caps;
    constraints.include_d_equal = true;
    const SweepPlan plan = make_plan(ctx, c, constraints);

    KeyClaimsResult res;
    res.rank0 = c.l == 0;
    res.caps_used.a1 = plan.cap_a;
    res.caps_used.l1 = plan.cap_l;
    res.certified = plan.certified;

    const Rat r0(ctx.r0());
    const Rat sq_minus_dsq = 2 * Rat(ctx.n()) * c.d * c.d - 2 * r0 * c.l * c.a;  // <v^2> - (D^2)
    if (res.rank0) {
        res.threshold_N = max_rat(sq_minus_dsq / 2, Rat(2 * ctx.r0() + 1));
        res.pre_main = c.a > res.threshold_N;
        res.pre_rem = c.a > res.threshold_N + 1;
    } else {
        res.threshold_N =
            max_rat(4 * r0 * r0 * r0 * c.l * c.l + make_rat(1, 2 * ctx.n()), 2 * r0 * r0 * c.l * sq_minus_dsq);
        res.pre_main = c.d > res.threshold_N;
        res.pre_rem = res.pre_main;
    }

    auto record = [&](const CandidateVector& cand, KeyClaim claim, const std::string& detail) {
        res.violations.push_back(ViolationRecord{cand, claim, detail});
    };
    auto inspect = [&](const CandidateVector& cand) {
        const bool rem = cand.d1 == c.d;
        if (res.rank0) {
            if (cand.l1 > 0) {
                const std::string detail = "l1 = " + rat_str(cand.l1) + " > 0 inside the slope region";
                record(cand, rem ? KeyClaim::Key0Rem1 : KeyClaim::Key0Part1, detail);
                record(cand, rem ? KeyClaim::Key0Rem2 : KeyClaim::Key0Part2,
                       "a1/d1 = " + rat_str(cand.a1 / cand.d1) + " >= a/d = " + rat_str(c.a / c.d) +
                           " with l1 > 0");
            }
            return;
        }
        const Rat limit = rem ? c.l : c.l * cand.d1 / c.d;
        if (cand.l1 > limit) {
            const std::string rhs = rem ? "l" : "l*d1/d";
            record(cand, rem ? KeyClaim::KeyRem1 : KeyClaim::KeyPart1,
                   "l1 = " + rat_str(cand.l1) + " > " + rhs + " = " + rat_str(limit));
            record(cand, rem ? KeyClaim::KeyRem2 : KeyClaim::KeyPart2,
                   "a1 = " + rat_str(cand.a1) + " >= " + (rem ? "a" : "a*d1/d") + " = " +
                       rat_str(rem ? c.a : c.a * cand.d1 / c.d) + " with d1/l1 < d/l");
        }
    };
    res.candidate_count = sweep_all(ctx, c, plan, /*include_d_equal=*/true, inspect);
    std::stable_sort(res.violations.begin(), res.violations.end(),
                     [](const ViolationRecord& x, const ViolationRecord& y) {
                         if (candidate_less(x.candidate, y.candidate)) return true;
                         if (candidate_less(y.candidate, x.candidate)) return false;
                         return static_cast<int>(x.claim) < static_cast<int>(y.claim);
                     });
    return res;
}

bool jhf_identity_check(const std::vector<std::array<Rat, 3>>& parts_lda, const Int& r0, const Int& n, const Rat& l,
                        const Rat& d, const Rat& a) {
    if (parts_lda.empty()) throw std::invalid_argument("jhf_identity_check: empty partition");
    if (!(l > 0)) throw std::invalid_argument("jhf_identity_check: l must be positive");
    Rat sum_l(0), sum_d(0), sum_a(0);
    for (const auto& p : parts_lda) {
        if (!(p[0] > 0)) throw std::invalid_argument("jhf_identity_check: every part needs l_i > 0");
        if (p[0] * d != p[1] * l) throw std::invalid_argument("jhf_identity_check: parts must satisfy l_i/l = d_i/d");
        sum_l += p[0];
        sum_d += p[1];
        sum_a += p[2];
    }
    if (sum_l != l || sum_d != d || sum_a != a)
        throw std::invalid_argument("jhf_identity_check: parts must sum to (l, d, a)");

    const Rat two_n(2 * n);
    const Rat two_r0(2 * r0);
    Rat lhs(0);
    for (const auto& p : parts_lda) lhs += (two_n * p[1] * p[1] - two_r0 * p[0] * p[2]) / p[0];
    const Rat rhs = (two_n * d * d - two_r0 * l * a) / l;
    return lhs == rhs;
}

std::optional<Rat> shortest_Hperp(const NSLattice& lat, const Int& cap) {
    const int r = lat.rank();
    if (r <= 1) return std::nullopt;
    if (cap <= 0) throw std::invalid_argument("shortest_Hperp: cap must be positive");

    // w = Gram * H: the linear form x -> (x, H) on coordinates.
    std::vector<Int> w(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        Int s = 0;
        for (int j = 0; j < r; ++j) s += lat.gram()[static_cast<size_t>(i) * r + j] * lat.ample_coords()[static_cast<size_t>(j)];
        w[static_cast<size_t>(i)] = s;
    }

    // Column operations making the form vanish on all but the first column;
    // U stays unimodular, so the later columns are a basis of the integral
    // kernel of (., H).
    std::vector<Int> U(static_cast<size_t>(r) * r, 0);
    for (int i = 0; i < r; ++i) U[static_cast<size_t>(i) * r + i] = 1;
    std::vector<Int> t = w;
    auto column = [&](int j) {
        std::vector<Int> col(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) col[static_cast<size_t>(i)] = U[static_cast<size_t>(i) * r + j];
        return col;
    };
    for (int i = 1; i < r; ++i) {
        if (t[static_cast<size_t>(i)] == 0) continue;
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), t[0].get_mpz_t(), t[static_cast<size_t>(i)].get_mpz_t());
        const std::vector<Int> c0 = column(0);
        const std::vector<Int> ci = column(i);
        const Int u = t[0] / g;
        const Int v = t[static_cast<size_t>(i)] / g;
        for (int row = 0; row < r; ++row) {
            U[static_cast<size_t>(row) * r + 0] = x * c0[static_cast<size_t>(row)] + y * ci[static_cast<size_t>(row)];
            U[static_cast<size_t>(row) * r + i] = -v * c0[static_cast<size_t>(row)] + u * ci[static_cast<size_t>(row)];
        }
        t[0] = g;
        t[static_cast<size_t>(i)] = 0;
    }

    // M = -B^T Gram B on the kernel basis B = columns 1..r-1 of U.
    const int m = r - 1;
    std::vector<Int> M(static_cast<size_t>(m) * m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            Int s = 0;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    s += U[static_cast<size_t>(i) * r + (p + 1)] * lat.gram()[static_cast<size_t>(i) * r + j] *
                         U[static_cast<size_t>(j) * r + (q + 1)];
            M[static_cast<size_t>(p) * m + q] = -s;
        }

    // Rational LDL^T; failure of positivity means H-perp is not negative
    // definite and no finite minimum is certified.
    std::vector<Rat> diag(static_cast<size_t>(m));
    std::vector<Rat> mu(static_cast<size_t>(m) * m, Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat di(M[static_cast<size_t>(i) * m + i]);
        for (int k = 0; k < i; ++k) di -= diag[static_cast<size_t>(k)] * mu[static_cast<size_t>(k) * m + i] * mu[static_cast<size_t>(k) * m + i];
        if (!(di > 0)) throw std::domain_error("shortest_Hperp: H-perp is not negative definite");
        diag[static_cast<size_t>(i)] = di;
        for (int j = i + 1; j < m; ++j) {
            Rat mij(M[static_cast<size_t>(i) * m + j]);
            for (int k = 0; k < i; ++k)
                mij -= diag[static_cast<size_t>(k)] * mu[static_cast<size_t>(k) * m + i] * mu[static_cast<size_t>(k) * m + j];
            mu[static_cast<size_t>(i) * m + j] = mij / di;
        }
    }

    // Best starts at the smallest basis-vector norm (an achieved value), then
    // a depth-first sweep over Q(x) = sum_i diag_i (x_i + c_i)^2 <= best
    // looks for anything smaller.  All range tests are exact.
    Rat best(M[0]);
    for (int i = 1; i < m; ++i) {
        const Rat cand(M[static_cast<size_t>(i) * m + i]);
        if (cand < best) best = cand;
    }
    std::vector<Int> x(static_cast<size_t>(m), 0);
    std::function<void(int, const Rat&)> descend = [&](int i, const Rat& used) {
        if (i < 0) {
            bool zero = true;
            for (const Int& xi : x)
                if (xi != 0) {
                    zero = false;
                    break;
                }
            if (!zero && used < best) best = used;
            return;
        }
        Rat ci(0);
        for (int j = i + 1; j < m; ++j) ci += mu[static_cast<size_t>(i) * m + j] * Rat(x[static_cast<size_t>(j)]);
        const Rat budget = best - used;
        auto try_coord = [&](const Int& v) {
            const Rat off = Rat(v) + ci;
            const Rat cost = diag[static_cast<size_t>(i)] * off * off;
            if (cost > budget) return false;
            if (v > cap || -v > cap) throw std::domain_error("shortest_Hperp: coordinate cap exceeded");
            x[static_cast<size_t>(i)] = v;
            descend(i - 1, used + cost);
            return true;
        };
        const Int start = rat_floor(-ci);
        for (Int v = start;; --v)
            if (!try_coord(v)) break;
        for (Int v = start + 1;; ++v)
            if (!try_coord(v)) break;
        x[static_cast<size_t>(i)] = 0;
    };
    descend(m - 1, Rat(0));
    return best;
}

}  // namespace mukai
