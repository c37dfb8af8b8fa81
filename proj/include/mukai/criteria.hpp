#pragma once

#include <optional>
#include <string>
#include <utility>

#include "mukai/fm.hpp"

namespace mukai {

/* One tag per named numerical criterion.  The tag strings are a CLI
 * interface contract; parse/to_string round-trip exactly. */
enum class CriterionKind {
    LemmaKey,
    LemmaKey0,
    PropWIT2,
    PropIT0,
    CorIT0_1,
    CorIT0_2,
    PropIT0_2,
    PropRk0,
    ThmAsymptotic,
    PropAsymptotic3,
    ThmAsymptotic2,
    PropKeySpecial,
    ThmAsymptoticSpecial,
    RemarkRank3,
    RemarkT1,
    Rank0LemmaG,
    Rank0LemmaF,
    LemmaCounterDomain,
    PropWitBirat,
    RemarkGeneral,
    Star1,
};

std::string to_string(CriterionKind k);
std::optional<CriterionKind> parse_criterion(const std::string& s);
std::vector<CriterionKind> all_criteria();

/* Criterion-specific inputs beyond (ctx, v). */
struct CriterionExtras {
    std::optional<MukaiVector> G;             // Star1: twist vector v(G)
    std::optional<std::vector<NSClass>> D_xi;  // Star1: candidate divisor list (required on rank >= 2)
    std::optional<Int> r;                      // LemmaCounterDomain instance
    std::optional<Int> k;                      //   "
    std::optional<Int> s;                      //   "
    std::optional<Int> hperp_cap;              // RemarkGeneral: coordinate cap for the shortest-vector search
};

struct CriterionReport {
    CriterionKind kind{};
    bool applicable = true;  // false: the vector/context shape does not meet the criterion's hypotheses
    bool satisfied = false;
    std::string conclusion_key;  // machine-readable consequence, e.g. "IT0"
    std::string conclusion;      // the human sentence
    // Named exact values (inputs echoed + thresholds + certificates), in a fixed order.
    std::vector<std::pair<std::string, std::string>> computed;
    std::vector<std::string> notes;

    void put(const std::string& name, const Rat& value) { computed.emplace_back(name, rat_str(value)); }
    void put(const std::string& name, const Int& value) { computed.emplace_back(name, int_str(value)); }
    void put(const std::string& name, const std::string& value) { computed.emplace_back(name, value); }
};

/* Evaluate one criterion exactly.  Shape mismatches (wrong rank sign,
 * missing hypothesis like lr0 in {1,2}) yield applicable=false reports;
 * malformed extras throw invalid_argument. */
CriterionReport evaluate_criterion(CriterionKind kind, const FMContext& ctx, const MukaiVector& v,
                                   const CriterionExtras& extras = {});

}  // namespace mukai
