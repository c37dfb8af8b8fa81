#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "mukai/counterexamples.hpp"
#include "mukai/criteria.hpp"
#include "mukai/oracle.hpp"

namespace mukai {

using Json = nlohmann::ordered_json;

/* Exact numeric fields: integers stay JSON numbers, everything else is a
 * decimal-free "p/q" string.  Floating-point input is rejected. */
Rat json_to_rat(const Json& j, const std::string& field);
Int json_to_int(const Json& j, const std::string& field);
Json rat_to_json(const Rat& q);

/* A parsed scenario document ("schema": 1). */
struct Scenario {
    Surface surface = Surface::abelian;
    bool surface_given = false;
    std::string preset;  // "poincare" | "k3_example" | "custom"
    std::optional<NSLattice> ns;
    std::optional<Int> n;
    std::optional<Int> k;
    std::optional<MukaiVector> v0;
    std::optional<MukaiVector> w0;
    std::optional<NsMap> ns_map;
    std::optional<MukaiVector> vector;
    CriterionExtras extras;
    Json raw;
};

Scenario parse_scenario(const Json& j);
Scenario load_scenario_file(const std::string& path);

FMContext build_context(const Scenario& s);
MukaiVector scenario_vector(const Scenario& s, const FMContext& ctx);

Json vector_to_json(const MukaiVector& v);
MukaiVector json_to_vector(const Json& j, const std::string& field);
Json report_to_json(const CriterionReport& rep);
Json counterexample_to_json(const CounterexampleReport& rep);
Json violation_to_json(const ViolationRecord& rec);

}  // namespace mukai
