#include "mukai/criteria.hpp"

#include <stdexcept>

#include "mukai/oracle.hpp"

namespace mukai {

namespace {

struct TagRow {
    CriterionKind kind;
    const char* tag;
};

constexpr TagRow kTags[] = {
    {CriterionKind::LemmaKey, "LemmaKey"},
    {CriterionKind::LemmaKey0, "LemmaKey0"},
    {CriterionKind::PropWIT2, "PropWIT2"},
    {CriterionKind::PropIT0, "PropIT0"},
    {CriterionKind::CorIT0_1, "CorIT0_1"},
    {CriterionKind::CorIT0_2, "CorIT0_2"},
    {CriterionKind::PropIT0_2, "PropIT0_2"},
    {CriterionKind::PropRk0, "PropRk0"},
    {CriterionKind::ThmAsymptotic, "ThmAsymptotic"},
    {CriterionKind::PropAsymptotic3, "PropAsymptotic3"},
    {CriterionKind::ThmAsymptotic2, "ThmAsymptotic2"},
    {CriterionKind::PropKeySpecial, "PropKeySpecial"},
    {CriterionKind::ThmAsymptoticSpecial, "ThmAsymptoticSpecial"},
    {CriterionKind::RemarkRank3, "RemarkRank3"},
    {CriterionKind::RemarkT1, "RemarkT1"},
    {CriterionKind::Rank0LemmaG, "Rank0LemmaG"},
    {CriterionKind::Rank0LemmaF, "Rank0LemmaF"},
    {CriterionKind::LemmaCounterDomain, "LemmaCounterDomain"},
    {CriterionKind::PropWitBirat, "PropWitBirat"},
    {CriterionKind::RemarkGeneral, "RemarkGeneral"},
    {CriterionKind::Star1, "Star1"},
};

CriterionReport not_applicable(CriterionReport rep, const std::string& why) {
    rep.applicable = false;
    rep.satisfied = false;
    rep.notes.push_back(why);
    return rep;
}

/* The results of the rank-1 abelian section require NS(X) = ZH and the
 * rank-1 fiber kernel (r0 = 1, v0 the unit). */
bool is_principal_rank1(const FMContext& ctx) {
    return ctx.kind() == Surface::abelian && ctx.ns_x().rank() == 1 && ctx.r0() == 1 && ctx.v0().c1.is_zero() &&
           ctx.v0().a == 0;
}

struct SpecialInstance {
    Int r, d, a, n;
    Rat sq;  // <v^2> = 2*d^2*n - 2*r*a
};

/* Read an integral (r, dH, a) off the vector; nullopt (with a reason) when
 * the shape does not fit. */
std::optional<SpecialInstance> read_special(const FMContext& ctx, const MukaiVector& v, std::string& why) {
    if (!is_principal_rank1(ctx)) {
        why = "requires an abelian surface with NS = ZH and the rank-1 kernel (r0 = 1)";
        return std::nullopt;
    }
    if (!v.is_integral()) {
        why = "vector is not integral";
        return std::nullopt;
    }
    SpecialInstance s;
    s.r = int_part(v.r);
    s.d = int_part(v.c1.coords[0]);
    s.a = int_part(v.a);
    s.n = ctx.n();
    s.sq = pairing(v, v, ctx.ns_x());
    return s;
}

/* Minimal r' in [0, r) with r*d' - r'*d = -k, k = gcd(r,d): reduce to
 * r'*(d/k) = 1 mod (r/k) and invert. */
void key_special_certificate(const Int& r, const Int& d, Int& k, Int& rp, Int& dp) {
    k = gcd_int(r, d);
    const Int rbar = r / k;
    const Int dbar = d / k;
    if (rbar == 1) {
        rp = 0;
        dp = -(k / r);  // r = k here, so d' = -1
        return;
    }
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), dbar.get_mpz_t(), rbar.get_mpz_t()) == 0)
        throw std::logic_error("key_special_certificate: dbar not invertible mod rbar");
    rp = inv % rbar;
    if (rp < 0) rp += rbar;
    dp = (rp * d - k) / r;
}

void echo_coords(CriterionReport& rep, const FMCoordinates& c, const Rat& sq, const Rat& dsq) {
    rep.put("l", c.l);
    rep.put("a", c.a);
    rep.put("d", c.d);
    rep.put("D_sq", dsq);
    rep.put("v_sq", sq);
}

CriterionReport eval_lemma_key(const FMContext& ctx, const MukaiVector& v) {
    CriterionReport rep;
    FMCoordinates c = decompose(v, ctx);
    const Rat sq = pairing(v, v, ctx.ns_x());
    const Rat dsq = ctx.ns_x().square(c.D);
    echo_coords(rep, c, sq, dsq);
    if (!(c.l > 0 && c.a > 0)) return not_applicable(std::move(rep), "requires coordinates l > 0 and a > 0");
    const Rat r0(ctx.r0());
    const Rat N = max_rat(4 * r0 * r0 * r0 * c.l * c.l + make_rat(1, 2 * ctx.n()), 2 * r0 * r0 * c.l * (sq - dsq));
    rep.put("N", N);
    rep.satisfied = c.d > N;
    rep.conclusion_key = "destabilizer_exclusion";
    rep.conclusion =
        "every twisted-stable candidate with 0 < d1 < d in the slope region obeys l1 <= l*d1/d, and with "
        "d1/l1 < d/l obeys a1 < a*d1/d";
    return rep;
}

CriterionReport eval_lemma_key0(const FMContext& ctx, const MukaiVector& v) {
    CriterionReport rep;
    FMCoordinates c = decompose(v, ctx);
    const Rat sq = pairing(v, v, ctx.ns_x());
    const Rat dsq = ctx.ns_x().square(c.D);
    echo_coords(rep, c, sq, dsq);
    if (c.l != 0) return not_applicable(std::move(rep), "requires a rank-0 vector (l = 0)");
    const Rat N = max_rat((sq - dsq) / 2, Rat(2 * ctx.r0() + 1));
    rep.put("N", N);
    rep.satisfied = c.a > N;
    rep.put("rem_satisfied", std::string(c.a > N + 1 ? "1" : "0"));
    rep.conclusion_key = "destabilizer_exclusion_rank0";
    rep.conclusion =
        "every twisted-stable candidate with d1 < d in the slope region has l1 <= 0, and with l1 > 0 has "
        "a1/d1 < a/d; the rem_satisfied flag extends both claims to d1 = d";
    return rep;
}

CriterionReport eval_slope_threshold(const FMContext& ctx, const MukaiVector& v, CriterionKind kind) {
    CriterionReport rep;
    const bool y_side = (kind == CriterionKind::PropWIT2 || kind == CriterionKind::PropAsymptotic3);
    const NSLattice& lat = y_side ? ctx.ns_y() : ctx.ns_x();
    FMCoordinates c = y_side ? decompose_y(v, ctx) : decompose(v, ctx);
    const Rat sq = pairing(v, v, lat);
    const Rat dsq = lat.square(c.D);
    echo_coords(rep, c, sq, dsq);
    if (!(c.l > 0)) return not_applicable(std::move(rep), "requires a positive-rank vector (l > 0)");
    const Rat r0(ctx.r0());
    const Rat lhs = c.d / (r0 * c.l);
    rep.put("lhs", lhs);

    Rat threshold;
    switch (kind) {
        case CriterionKind::PropWIT2:
        case CriterionKind::PropIT0:
            threshold = max_rat(4 * c.l * r0 * r0 + make_rat(1, 2 * ctx.n()) / (r0 * c.l), 2 * r0 * (sq - dsq));
            break;
        case CriterionKind::CorIT0_1:
            threshold = max_rat(4 * c.l * r0 * r0 + 1, 2 * r0 * (sq - dsq + (r0 * c.l) * (r0 * c.l) / 2));
            break;
        case CriterionKind::CorIT0_2:
            if (!(sq > 0)) return not_applicable(std::move(rep), "requires <v^2> > 0");
            rep.notes.push_back("assumes H is general with respect to v");
            threshold = max_rat(4 * c.l * r0 * r0 + 1, 2 * r0 * (sq - dsq));
            break;
        case CriterionKind::ThmAsymptotic:
            if (!(r0 * c.l == 1 || r0 * c.l == 2))
                return not_applicable(std::move(rep), "requires l*r0 in {1, 2}");
            threshold = max_rat(4 * c.l * r0 * r0 + 1, 2 * r0 * (sq - dsq + (r0 * c.l) * (r0 * c.l) / 2));
            rep.notes.push_back("(D^2) taken from the input vector's own orthogonal part");
            break;
        case CriterionKind::PropAsymptotic3:
            if (lat.rank() != 1) return not_applicable(std::move(rep), "requires NS(Y) = Z*Hhat");
            threshold = max_rat(4 * c.l * r0 * r0 + 1, 2 * r0 * sq);
            break;
        case CriterionKind::ThmAsymptotic2:
            if (lat.rank() != 1) return not_applicable(std::move(rep), "requires NS(X) = ZH");
            threshold = max_rat(4 * c.l * r0 * r0 + 1, 2 * r0 * sq);
            break;
        default:
            throw std::logic_error("eval_slope_threshold: unexpected kind");
    }
    rep.put("threshold", threshold);
    rep.satisfied = lhs > threshold;
    switch (kind) {
        case CriterionKind::PropWIT2:
            rep.conclusion_key = "WIT2";
            rep.conclusion = "index-2 vanishing holds for the twisted-stable sheaf and its image is torsion free";
            break;
        case CriterionKind::PropIT0:
            rep.conclusion_key = "IT0";
            rep.conclusion = "index-0 vanishing holds for the mu-stable sheaf";
            break;
        case CriterionKind::CorIT0_1:
        case CriterionKind::CorIT0_2:
            rep.conclusion_key = "IT0";
            rep.conclusion = "index-0 vanishing holds for the twisted-stable sheaf";
            break;
        case CriterionKind::ThmAsymptotic:
            rep.conclusion_key = "semistable_image";
            rep.conclusion =
                "the transform of a twisted-semistable sheaf is twisted semistable; the moduli spaces are "
                "isomorphic";
            break;
        case CriterionKind::PropAsymptotic3:
            rep.conclusion_key = "stable_image";
            rep.conclusion = "the second image of the stable sheaf is stable";
            break;
        case CriterionKind::ThmAsymptotic2:
            rep.conclusion_key = "stable_image";
            rep.conclusion = "the transform of the stable sheaf is stable; the moduli spaces are isomorphic";
            break;
        default:
            break;
    }
    return rep;
}

CriterionReport eval_rank0_threshold(const FMContext& ctx, const MukaiVector& v, CriterionKind kind) {
    CriterionReport rep;
    FMCoordinates c = decompose(v, ctx);
    const Rat sq = pairing(v, v, ctx.ns_x());
    const Rat dsq = ctx.ns_x().square(c.D);
    echo_coords(rep, c, sq, dsq);
    if (c.l != 0) return not_applicable(std::move(rep), "requires a rank-0 vector (l = 0)");
    if (!(c.a > 0)) return not_applicable(std::move(rep), "requires a > 0");
    const Rat threshold = max_rat(Rat(2 * ctx.r0() + 1), (sq - dsq) / 2 + 1);
    rep.put("threshold", threshold);
    rep.satisfied = c.a > threshold;
    if (kind == CriterionKind::PropIT0_2) {
        rep.conclusion_key = "IT0";
        rep.conclusion = "index-0 vanishing holds for the twisted-stable sheaf";
    } else {
        rep.conclusion_key = "twisted_stable_image";
        rep.conclusion = "the transform of a twisted-stable sheaf is twisted stable; the moduli spaces are isomorphic";
    }
    return rep;
}

CriterionReport eval_key_special(const FMContext& ctx, const MukaiVector& v) {
    CriterionReport rep;
    std::string why;
    auto inst = read_special(ctx, v, why);
    if (!inst) return not_applicable(std::move(rep), why);
    rep.put("r", inst->r);
    rep.put("d", inst->d);
    rep.put("a", inst->a);
    if (!(inst->r > 0 && inst->d > 0 && inst->a > 0))
        return not_applicable(std::move(rep), "requires positive integers r, d, a");
    Int k, rp, dp;
    key_special_certificate(inst->r, inst->d, k, rp, dp);
    const Rat s = inst->sq / 2;
    rep.put("v_sq", inst->sq);
    rep.put("k", k);
    rep.put("r_prime", rp);
    rep.put("d_prime", dp);
    rep.put("s", s);
    const Rat threshold =
        max_rat(make_rat(1, 2 * k) * (Rat(rp) + Rat(k - 1) / Rat(k) * Rat(inst->r)) * inst->sq, inst->sq / 2);
    rep.put("threshold", threshold);
    rep.put("dn", Rat(inst->d * inst->n));
    rep.satisfied = Rat(inst->d * inst->n) > threshold;
    rep.conclusion_key = "destabilizer_exclusion";
    rep.conclusion =
        "stable candidates with 0 < d1 < d in the slope region have r1 <= r*d1/d, and with d1/r1 < d/r have "
        "a1 < a*d1/d";
    return rep;
}

CriterionReport eval_special_simple(const FMContext& ctx, const MukaiVector& v, CriterionKind kind) {
    CriterionReport rep;
    std::string why;
    auto inst = read_special(ctx, v, why);
    if (!inst) return not_applicable(std::move(rep), why);
    const Int &r = inst->r, &d = inst->d, &a = inst->a, &n = inst->n;
    rep.put("r", r);
    rep.put("d", d);
    rep.put("a", a);
    switch (kind) {
        case CriterionKind::ThmAsymptoticSpecial: {
            if (!(r > 0 && d > 0 && a > 0))
                return not_applicable(std::move(rep), "requires positive integers r, d, a");
            const Int s = d * d * n - r * a;
            rep.put("s", s);
            rep.put("dn", Int(d * n));
            rep.put("rs", Int(r * s));
            rep.satisfied = d * n > r * s;
            rep.conclusion_key = "moduli_isomorphism";
            rep.conclusion =
                "the contravariant transform induces an isomorphism onto the moduli space of (a, d*Hhat, r)";
            break;
        }
        case CriterionKind::RemarkRank3: {
            if (!(r > 0 && d > 0 && a > 0))
                return not_applicable(std::move(rep), "requires positive integers r, d, a");
            if (r > 3) return not_applicable(std::move(rep), "requires r <= 3");
            Int k, rp, dp;
            key_special_certificate(r, d, k, rp, dp);
            if (k != 1) return not_applicable(std::move(rep), "requires gcd(r, d) = 1");
            const Int s = d * d * n - r * a;
            rep.put("s", s);
            rep.put("r_prime", rp);
            rep.put("dn", Int(d * n));
            rep.put("threshold", Int(rp * s));
            rep.satisfied = d * n > rp * s;
            rep.conclusion_key = "moduli_isomorphism";
            rep.conclusion =
                "the contravariant transform induces an isomorphism onto the moduli space of (a, d*Hhat, r)";
            break;
        }
        case CriterionKind::RemarkT1: {
            if (r != 1) return not_applicable(std::move(rep), "requires r = 1");
            if (!(d >= 2)) return not_applicable(std::move(rep), "requires d >= 2");
            const Int s = d * d * n - r * a;
            rep.put("s", s);
            rep.put("lhs", Int(2 * (d - 1) * n));
            rep.satisfied = 2 * (d - 1) * n > s;
            rep.conclusion_key = "IT0";
            rep.conclusion = "index-0 vanishing holds for the covariant transform";
            break;
        }
        case CriterionKind::Rank0LemmaG: {
            if (r != 0) return not_applicable(std::move(rep), "requires a rank-0 vector");
            if (!(d > 0)) return not_applicable(std::move(rep), "requires d > 0");
            rep.put("threshold", Int(d * (d - 1) * n));
            rep.satisfied = a > d * (d - 1) * n;
            rep.conclusion_key = "moduli_isomorphism";
            rep.conclusion =
                "the contravariant transform induces an isomorphism onto the moduli space of (a, d*Hhat, 0)";
            break;
        }
        case CriterionKind::Rank0LemmaF: {
            if (r != 0) return not_applicable(std::move(rep), "requires a rank-0 vector");
            if (!(d > 0)) return not_applicable(std::move(rep), "requires d > 0");
            rep.put("threshold", Int(d * d * n));
            rep.satisfied = a > d * d * n;
            rep.conclusion_key = "moduli_isomorphism";
            rep.conclusion =
                "the covariant transform induces an isomorphism onto the moduli space of (a, -d*Hhat, 0)";
            break;
        }
        case CriterionKind::PropWitBirat: {
            if (!(r > 0 && d > 0)) return not_applicable(std::move(rep), "requires r > 0 and d > 0");
            rep.put("v_sq", inst->sq);
            rep.put("two_r", Int(2 * r));
            rep.satisfied = inst->sq < 2 * r;
            rep.conclusion_key = "WIT2_all";
            rep.conclusion = "index-2 vanishing holds for every mu-semistable sheaf with this vector";
            break;
        }
        default:
            throw std::logic_error("eval_special_simple: unexpected kind");
    }
    return rep;
}

CriterionReport eval_counter_domain(const FMContext& ctx, const MukaiVector& v, const CriterionExtras& extras) {
    CriterionReport rep;
    std::string why;
    if (!is_principal_rank1(ctx))
        return not_applicable(std::move(rep),
                              "requires an abelian surface with NS = ZH and the rank-1 kernel (r0 = 1)");
    const Int n = ctx.n();
    Int r, k, s;
    const int given = int(extras.r.has_value()) + int(extras.k.has_value()) + int(extras.s.has_value());
    if (given == 3) {
        r = *extras.r;
        k = *extras.k;
        s = *extras.s;
    } else if (given != 0) {
        throw std::invalid_argument("LemmaCounterDomain needs extras r, k, s together");
    } else {
        auto inst = read_special(ctx, v, why);
        if (!inst) return not_applicable(std::move(rep), why);
        r = inst->r;
        if (!(r >= 1)) return not_applicable(std::move(rep), "requires r >= 1");
        if ((inst->d - 1) % r != 0 || inst->d <= 1)
            return not_applicable(std::move(rep), "requires d = k*r + 1 with k >= 1");
        k = (inst->d - 1) / r;
        s = inst->d * inst->d * n - r * inst->a;
    }
    if (!(r >= 1 && k >= 1)) return not_applicable(std::move(rep), "requires r >= 1 and k >= 1");
    const Int d = k * r + 1;
    rep.put("r", r);
    rep.put("k", k);
    rep.put("d", d);
    rep.put("s", s);
    const Int dsq_n = d * d * n - s;  // r*a
    if (dsq_n % r != 0) return not_applicable(std::move(rep), "instance invalid: a = (d^2*n - s)/r is not integral");
    rep.put("a", Int(dsq_n / r));
    const Int lower = d * n;
    // (d-1)^2/r = k^2*r since d-1 = k*r.
    const Int upper = (d * d - k * k * r) * n - 2 * r;
    rep.put("lower", lower);
    rep.put("upper", upper);
    rep.satisfied = lower <= s && s <= upper;
    rep.conclusion_key = "stability_failure_domain";
    rep.conclusion =
        "a mu-stable sheaf with this vector satisfies index-0 vanishing yet its transform is not mu-semistable";
    return rep;
}

CriterionReport eval_remark_general(const FMContext& ctx, const MukaiVector& v, const CriterionExtras& extras) {
    CriterionReport rep;
    FMCoordinates c = decompose_y(v, ctx);
    const Rat sq = pairing(v, v, ctx.ns_y());
    const Rat dsq = ctx.ns_y().square(c.D);
    echo_coords(rep, c, sq, dsq);
    if (!(c.l > 0)) return not_applicable(std::move(rep), "requires l > 0");
    const Rat rl = Rat(ctx.r0()) * c.l;
    const Rat eps(epsilon(ctx.kind()));
    const Rat threshold = rl * rl * (sq + 2 * rl * rl * eps) / 4;
    rep.put("threshold", threshold);
    rep.conclusion_key = "general_polarization";
    rep.conclusion = "the target polarization is general with respect to the vector";
    const Int cap = extras.hperp_cap.value_or(Int(64));
    auto min_sq = shortest_Hperp(ctx.ns_x(), cap);
    if (!min_sq) {
        rep.put("min_neg_Dsq", std::string("infinite"));
        rep.satisfied = true;
        rep.notes.push_back("vacuously satisfied (H^perp = 0)");
        return rep;
    }
    rep.put("min_neg_Dsq", *min_sq);
    rep.satisfied = *min_sq > threshold;
    return rep;
}

CriterionReport eval_star1(const FMContext& ctx, const MukaiVector& v, const CriterionExtras& extras) {
    CriterionReport rep;
    if (!extras.G) throw std::invalid_argument("Star1 requires the twist vector G in extras");
    const NSLattice& lat = ctx.ns_x();
    const Rat m = pairing(*extras.G, v, lat);
    rep.put("pairing", m);
    if (m == 0) return not_applicable(std::move(rep), "requires <v(G), v> != 0");
    std::vector<NSClass> dxi;
    if (extras.D_xi) {
        dxi = *extras.D_xi;
        for (const auto& x : dxi)
            if (x.rank() != lat.rank()) throw std::invalid_argument("Star1: D_xi entry has wrong rank");
    } else if (lat.rank() == 1) {
        const Rat d = v.c1.coords[0];
        if (!is_integer(d) || d < 0)
            return not_applicable(std::move(rep), "requires an effective integral c1 to generate D_xi");
        for (Int t = 0; t <= int_part(d); ++t) {
            NSClass x = NSClass::zero(1);
            x.coords[0] = Rat(t);
            dxi.push_back(x);
        }
    } else {
        throw std::invalid_argument("Star1 requires an explicit D_xi list on NS of rank >= 2");
    }
    rep.put("candidates", Int(dxi.size()));
    const Int bmax = rat_ceil(abs_rat(m)) - 1;
    rep.satisfied = true;
    for (size_t i = 0; i < dxi.size() && rep.satisfied; ++i) {
        for (Int b = -bmax; b <= bmax; ++b) {
            NSClass w = m * dxi[i] + (-Rat(b)) * v.c1;
            if (w.is_zero()) continue;
            if (lat.deg(w) == 0) {
                rep.satisfied = false;
                rep.put("violating_xi1_index", Int(i));
                rep.put("violating_b", b);
                break;
            }
        }
    }
    rep.conclusion_key = "general_polarization";
    rep.conclusion = "H is a general polarization with respect to the vector and the twist";
    return rep;
}

}  // namespace

std::string to_string(CriterionKind k) {
    for (const auto& row : kTags)
        if (row.kind == k) return row.tag;
    throw std::logic_error("to_string(CriterionKind): unknown kind");
}

std::optional<CriterionKind> parse_criterion(const std::string& s) {
    for (const auto& row : kTags)
        if (s == row.tag) return row.kind;
    return std::nullopt;
}

std::vector<CriterionKind> all_criteria() {
    std::vector<CriterionKind> out;
    for (const auto& row : kTags) out.push_back(row.kind);
    return out;
}

CriterionReport evaluate_criterion(CriterionKind kind, const FMContext& ctx, const MukaiVector& v,
                                   const CriterionExtras& extras) {
    CriterionReport rep;
    switch (kind) {
        case CriterionKind::LemmaKey:
            rep = eval_lemma_key(ctx, v);
            break;
        case CriterionKind::LemmaKey0:
            rep = eval_lemma_key0(ctx, v);
            break;
        case CriterionKind::PropWIT2:
        case CriterionKind::PropIT0:
        case CriterionKind::CorIT0_1:
        case CriterionKind::CorIT0_2:
        case CriterionKind::ThmAsymptotic:
        case CriterionKind::PropAsymptotic3:
        case CriterionKind::ThmAsymptotic2:
            rep = eval_slope_threshold(ctx, v, kind);
            break;
        case CriterionKind::PropIT0_2:
        case CriterionKind::PropRk0:
            rep = eval_rank0_threshold(ctx, v, kind);
            break;
        case CriterionKind::PropKeySpecial:
            rep = eval_key_special(ctx, v);
            break;
        case CriterionKind::ThmAsymptoticSpecial:
        case CriterionKind::RemarkRank3:
        case CriterionKind::RemarkT1:
        case CriterionKind::Rank0LemmaG:
        case CriterionKind::Rank0LemmaF:
        case CriterionKind::PropWitBirat:
            rep = eval_special_simple(ctx, v, kind);
            break;
        case CriterionKind::LemmaCounterDomain:
            rep = eval_counter_domain(ctx, v, extras);
            break;
        case CriterionKind::RemarkGeneral:
            rep = eval_remark_general(ctx, v, extras);
            break;
        case CriterionKind::Star1:
            rep = eval_star1(ctx, v, extras);
            break;
    }
    rep.kind = kind;
    return rep;
}

}  // namespace mukai
