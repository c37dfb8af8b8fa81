#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mukai/fm.hpp"

namespace mukai {

/* A worked instance where the transform provably breaks slope
 * semistability, reduced to exact vector and slope arithmetic. */
struct CounterexampleReport {
    std::string scenario;  // "example1" | "example2" | "lemma_counter"
    std::vector<std::pair<std::string, MukaiVector>> vectors;
    std::vector<std::pair<std::string, Rat>> slopes;
    std::vector<std::pair<std::string, bool>> conditions;
    bool verdict = false;    // destabilization detected (a pure function of the slopes)
    bool valid = true;       // instance arithmetic is well formed
    std::optional<Rat> gap;  // signed slope gap, when defined
    std::vector<std::string> notes;
};

/* Rank-2 abelian instance: NS with Gram [[0,1],[1,0]], H = 2f + g,
 * D = -f + g; the twisted family P(D), the line bundle F(D), and their
 * extension E(D).  The transform's first-image sheaves satisfy
 * mu(sub) = 1 > 1/2 = mu(quotient), independent of r >= 1. */
CounterexampleReport example1_report(const Int& r);

/* K3 instance on NS = ZH, (H,H) = 2n: the transform with fiber vector
 * (k^2 n, -kH, 1) applied to E with v(E) = (r, H, -a).  When
 * kn >= a > r and 1 + k(r + a) < k^2 n, the first image of E is
 * destabilized by its quotient pieces coming from the second image of the
 * structure sheaf; the gap has the closed form
 * 2n(k^2 n - ((a+r)k + 1)) / (((a k^2 + 2k)n - r)(k^2 n + 1)). */
CounterexampleReport example2_report(const Int& n, const Int& k, const Int& r, const Int& a);

/* Abelian instance on NS = ZH, (H,H) = 2n: v(E) = (r, dH, a) with
 * d = kr + 1 and a = (d^2 n - s)/r.  On the domain
 * dn <= s <= (d^2 - k^2 r)n - 2r the zeroth image of E is destabilized by
 * the image of O(kH); gap = 2(s - dn)/(k(d^2 n - s)) >= 0. */
CounterexampleReport lemma_counter_report(const Int& r, const Int& k, const Int& n, const Int& s);

}  // namespace mukai
