#pragma once

#include <array>
#include <optional>
#include <string>

#include "mukai/fm.hpp"

namespace mukai {

/* One numerical destabilizer candidate in transform coordinates.
 * square = 2n*d1^2 - 2*r0*l1*a1 + (D1^2). */
struct CandidateVector {
    Rat a1;
    Rat l1;
    Rat d1;
    NSClass D1;
    Rat square;
};

/* The eight exclusion claims: Part1/Part2 are the 0 < d1 < d statements for
 * positive-rank (Key) and rank-0 (Key0) source vectors; Rem1/Rem2 the d1 = d
 * variants. */
enum class KeyClaim {
    KeyPart1,
    KeyPart2,
    KeyRem1,
    KeyRem2,
    Key0Part1,
    Key0Part2,
    Key0Rem1,
    Key0Rem2,
};

std::string to_string(KeyClaim c);

struct ViolationRecord {
    CandidateVector candidate;
    KeyClaim claim;
    std::string detail;
};

/* Bounds on the candidate sweep; 0 means "derive the certified sufficient
 * cap from the square floor" (any violating candidate has l1 >= 1/r0 and
 * a1 >= 1/r0, which bounds both coordinates by n*d^2 + eps). */
struct OracleCaps {
    Int a1 = 0;
    Int l1 = 0;
};

struct EnumConstraints {
    OracleCaps caps;
    bool include_d_equal = false;        // add the d1 = d slice
    std::optional<Rat> stable_floor;     // default -2*eps (stable candidates)
    std::vector<NSClass> D1_list;        // orthogonal parts to sweep; default {0}
};

/* The certified default caps for a sweep around coordinates c. */
OracleCaps certified_caps(const FMContext& ctx, const FMCoordinates& c);

/* All candidates (a1, l1, d1, D1) with r0*a1, r0*l1 integers, a1 > 0,
 * d1 in (1/(2n*r0))Z within [quantum, d-quantum] (plus d1 = d when asked),
 * slope region d1/a1 <= d/a, and square >= floor, within caps.
 * Canonically sorted by (d1, a1, l1, D1). */
std::vector<CandidateVector> enumerate_candidates(const FMContext& ctx, const FMCoordinates& c,
                                                  const EnumConstraints& constraints);

struct KeyClaimsResult {
    bool rank0 = false;   // Key0 family (l = 0) vs Key family (l > 0)
    Rat threshold_N;      // the bound the precondition compares against
    bool pre_main = false;  // d > N (Key) / a > N (Key0)
    bool pre_rem = false;   // d > N (Key) / a > N+1 (Key0)
    OracleCaps caps_used;
    bool certified = true;  // caps cover every potentially violating candidate
    long candidate_count = 0;
    std::vector<ViolationRecord> violations;
};

/* Sweep all candidates (both d1 slices) and collect conclusion failures for
 * each claim whose hypotheses the candidate meets.  Violations under a
 * satisfied precondition disprove the implementation, not the theorems. */
KeyClaimsResult verify_key_claims(const FMContext& ctx, const FMCoordinates& c, const OracleCaps& caps);

/* Exact telescoping identity for proportional partitions:
 * sum_i (2n*d_i^2 - 2*r0*l_i*a_i)/l_i == (2n*d^2 - 2*r0*l*a)/l
 * whenever l_i > 0, the parts sum to (l, d, a), and l_i/l = d_i/d. */
bool jhf_identity_check(const std::vector<std::array<Rat, 3>>& parts_lda, const Int& r0, const Int& n, const Rat& l,
                        const Rat& d, const Rat& a);

/* min{ -(D^2) | (D,H) = 0, D integral nonzero }; nullopt when H-perp
 * contains no lattice point (rank 1).  cap bounds the coordinate search as a
 * safety net; the minimum is certified by exact enumeration on the
 * negative-definite sublattice. */
std::optional<Rat> shortest_Hperp(const NSLattice& lat, const Int& cap = 64);

}  // namespace mukai
