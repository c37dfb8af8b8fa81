#include "mukai/counterexamples.hpp"

#include <stdexcept>

namespace mukai {

namespace {

NSClass rank1_class(const Rat& c) {
    NSClass out = NSClass::zero(1);
    out.coords[0] = c;
    return out;
}

}  // namespace

CounterexampleReport example1_report(const Int& r) {
    if (r < 1) throw std::invalid_argument("example1_report: r must be >= 1");
    CounterexampleReport rep;
    rep.scenario = "example1";

    NSLattice ns(2, {0, 1, 1, 0}, {2, 1});  // H = 2f + g, (H,H) = 4
    NSClass D(std::vector<Rat>{Rat(-1), Rat(1)});
    rep.conditions.emplace_back("(D,H) = 1", ns.pair(D, ns.ample()) == 1);
    rep.conditions.emplace_back("(D^2) = -2", ns.square(D) == -2);

    const FMContext ctx = poincare_context(ns);
    const Rat rr(r);
    const MukaiVector vP(rr, rr * D, -rr);
    const MukaiVector vF(Rat(1), Rat(2) * D, Rat(-4));
    const MukaiVector vE = vP + vF;
    rep.vectors.emplace_back("v(P(D))", vP);
    rep.vectors.emplace_back("v(F(D))", vF);
    rep.vectors.emplace_back("v(E(D))", vE);

    const MukaiVector iP = fm_apply(vP, ctx);
    const MukaiVector iF = fm_apply(vF, ctx);
    const MukaiVector iE = fm_apply(vE, ctx);
    rep.conditions.emplace_back("additivity", iE == iP + iF);

    // Index-1 vanishing: the image sheaves carry minus the transform vectors.
    const MukaiVector sub = -iP;
    const MukaiVector quot = -iF;
    const MukaiVector total = -iE;
    rep.vectors.emplace_back("image_sheaf(P(D))", sub);
    rep.vectors.emplace_back("image_sheaf(F(D))", quot);
    rep.vectors.emplace_back("image_sheaf(E(D))", total);

    const Rat mu_sub = slope(sub, ns);
    const Rat mu_quot = slope(quot, ns);
    rep.slopes.emplace_back("mu(image_sheaf(P(D)))", mu_sub);
    rep.slopes.emplace_back("mu(image_sheaf(F(D)))", mu_quot);
    rep.gap = mu_sub - mu_quot;
    rep.verdict = mu_sub > mu_quot;
    rep.notes.push_back(
        "the image of P(D) sits inside the image of E(D) with quotient the image of F(D); a subsheaf of "
        "strictly larger slope breaks semistability");
    rep.notes.push_back("the slopes depend only on (D,H) = 1 and (D^2) = -2, not on the chosen rank-2 lattice");
    return rep;
}

CounterexampleReport example2_report(const Int& n, const Int& k, const Int& r, const Int& a) {
    if (n < 1 || k < 1 || r < 1 || a < 1)
        throw std::invalid_argument("example2_report: n, k, r, a must be positive");
    CounterexampleReport rep;
    rep.scenario = "example2";

    const NSLattice ns = NSLattice::rank1(n);
    const FMContext ctx = k3_example_context(n, k);

    const MukaiVector vO(Rat(1), NSClass::zero(1), Rat(1));      // structure sheaf on a K3
    const MukaiVector vE(Rat(r), rank1_class(Rat(1)), Rat(-a));  // E in M_H(r + H - a rho)
    rep.vectors.emplace_back("v(O)", vO);
    rep.vectors.emplace_back("v(E)", vE);

    const MukaiVector v2O(Rat(k * k * n + 1), rank1_class(Rat(-k)), Rat(1));
    const MukaiVector v1E(Rat((a * k * k + 2 * k) * n - r), rank1_class(Rat(-(a * k + 1))), Rat(a));
    rep.vectors.emplace_back("v(F2(O))", v2O);
    rep.vectors.emplace_back("v(F1(E))", v1E);

    // Cross-check the displayed vectors against the cohomological transform:
    // O has index-2 vanishing (even sign), E index-1 (odd sign).
    if (fm_apply(vO, ctx) != v2O) throw std::logic_error("example2_report: transform mismatch for v(O)");
    if (fm_apply(vE, ctx) != -v1E) throw std::logic_error("example2_report: transform mismatch for v(E)");

    rep.conditions.emplace_back("kn >= a", k * n >= a);
    rep.conditions.emplace_back("a > r", a > r);
    rep.conditions.emplace_back("1 + k(r + a) < k^2 n", 1 + k * (r + a) < k * k * n);

    const Rat mu2O = slope(v2O, ns);
    rep.slopes.emplace_back("mu(F2(O))", mu2O);
    if (v1E.r == 0) {
        rep.valid = false;
        rep.verdict = false;
        rep.notes.push_back("slope undefined: the first image has rank 0 for these parameters");
        return rep;
    }
    const Rat mu1E = slope(v1E, ns);
    rep.slopes.emplace_back("mu(F1(E))", mu1E);
    rep.gap = mu1E - mu2O;

    // The same gap in closed form; a mismatch would be an arithmetic bug.
    const Rat closed = make_rat(2 * n * (k * k * n - ((a + r) * k + 1)),
                                ((a * k * k + 2 * k) * n - r) * (k * k * n + 1));
    if (*rep.gap != closed) throw std::logic_error("example2_report: closed-form gap mismatch");

    rep.verdict = *rep.gap > 0;
    rep.notes.push_back(
        "the first image of E surjects onto copies of the second image of O; a quotient of strictly smaller "
        "slope breaks semistability");
    return rep;
}

CounterexampleReport lemma_counter_report(const Int& r, const Int& k, const Int& n, const Int& s) {
    if (r < 1) throw std::invalid_argument("lemma_counter_report: r must be >= 1");
    if (k < 1) throw std::invalid_argument("lemma_counter_report: k must be >= 1");
    if (n < 1) throw std::invalid_argument("lemma_counter_report: n must be >= 1");
    CounterexampleReport rep;
    rep.scenario = "lemma_counter";

    const NSLattice ns = NSLattice::rank1(n);
    const FMContext ctx = poincare_context_rank1(n);

    const Int d = k * r + 1;
    const Int ra = d * d * n - s;  // r * a
    rep.notes.push_back("d = " + int_str(d));
    if (ra % r != 0) {
        rep.valid = false;
        rep.verdict = false;
        rep.notes.push_back("instance invalid: a = (d^2*n - s)/r is not integral");
        return rep;
    }
    const Int a = ra / r;
    rep.notes.push_back("a = " + int_str(a));

    const MukaiVector vE(Rat(r), rank1_class(Rat(d)), Rat(a));
    const MukaiVector vLB = line_bundle_vector(rank1_class(Rat(k)), ns, Surface::abelian);  // O(kH)
    rep.vectors.emplace_back("v(E)", vE);
    rep.vectors.emplace_back("v(O(kH))", vLB);

    const MukaiVector v0E = fm_apply(vE, ctx);    // index-0 image: (a, -dH, r)
    const MukaiVector v0LB = fm_apply(vLB, ctx);  // index-0 image: (n k^2, -kH, 1)
    rep.vectors.emplace_back("v(F0(E))", v0E);
    rep.vectors.emplace_back("v(F0(O(kH)))", v0LB);
    if (v0LB != MukaiVector(Rat(n * k * k), rank1_class(Rat(-k)), Rat(1)))
        throw std::logic_error("lemma_counter_report: transform mismatch for v(O(kH))");

    rep.conditions.emplace_back("dn <= s", d * n <= s);
    rep.conditions.emplace_back("s <= (d^2 - k^2 r)n - 2r", s <= (d * d - k * k * r) * n - 2 * r);

    if (v0E.r == 0) {
        rep.valid = false;
        rep.verdict = false;
        rep.notes.push_back("slope undefined: the zeroth image of E has rank 0 for these parameters");
        return rep;
    }
    const Rat mu_sub = slope(v0LB, ns);
    const Rat mu_total = slope(v0E, ns);
    rep.slopes.emplace_back("mu(F0(O(kH)))", mu_sub);
    rep.slopes.emplace_back("mu(F0(E))", mu_total);
    rep.gap = mu_sub - mu_total;

    const Rat closed = make_rat(2 * (s - d * n), k * (d * d * n - s));
    if (*rep.gap != closed) throw std::logic_error("lemma_counter_report: closed-form gap mismatch");

    rep.verdict = *rep.gap >= 0;
    rep.notes.push_back(
        "the image of O(kH) maps into the zeroth image of E; a subsheaf of slope >= the total slope rules "
        "out stability, and the domain makes the gap nonnegative");
    return rep;
}

}  // namespace mukai
