#include "mukai/scenario.hpp"

#include <fstream>
#include <stdexcept>

namespace mukai {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw std::invalid_argument("scenario field '" + field + "': " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) bad(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

NSClass json_to_class(const Json& j, const std::string& field) {
    if (!j.is_array()) bad(field, "expected an array of coordinates");
    NSClass out;
    for (const auto& entry : j) out.coords.push_back(json_to_rat(entry, field));
    return out;
}

NSLattice json_to_lattice(const Json& j, const std::string& field) {
    if (!j.is_object()) bad(field, "expected an object {rank, gram, H}");
    const int rank = static_cast<int>(json_to_int(need(j, "rank", field), field + ".rank").get_si());
    if (rank < 1 || rank > 16) bad(field + ".rank", "must be between 1 and 16");
    const Json& gram_j = need(j, "gram", field);
    if (!gram_j.is_array()) bad(field + ".gram", "expected an array");
    std::vector<Int> gram;
    if (!gram_j.empty() && gram_j.front().is_array()) {
        for (const auto& row : gram_j) {
            if (!row.is_array() || static_cast<int>(row.size()) != rank) bad(field + ".gram", "rows must have length rank");
            for (const auto& entry : row) gram.push_back(json_to_int(entry, field + ".gram"));
        }
    } else {
        for (const auto& entry : gram_j) gram.push_back(json_to_int(entry, field + ".gram"));
    }
    if (static_cast<int>(gram.size()) != rank * rank) bad(field + ".gram", "expected rank*rank entries");
    const Json& h_j = need(j, "H", field);
    if (!h_j.is_array() || static_cast<int>(h_j.size()) != rank) bad(field + ".H", "expected rank coordinates");
    std::vector<Int> ample;
    for (const auto& entry : h_j) ample.push_back(json_to_int(entry, field + ".H"));
    return NSLattice(rank, std::move(gram), std::move(ample));
}

NsMap json_to_map(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) bad(field, "expected a nonempty array of rows");
    NsMap map;
    map.rows = static_cast<int>(j.size());
    map.cols = j.front().is_array() ? static_cast<int>(j.front().size()) : 0;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != map.cols) bad(field, "rows must have equal length");
        for (const auto& entry : row) map.m.push_back(json_to_rat(entry, field));
    }
    return map;
}

}  // namespace

Rat json_to_rat(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_number_unsigned()) return Rat(static_cast<unsigned long>(j.get<unsigned long long>()));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            bad(field, e.what());
        }
    }
    if (j.is_number_float()) bad(field, "floating-point values are not accepted; write exact fractions as \"p/q\"");
    bad(field, "expected an integer or a \"p/q\" string");
}

Int json_to_int(const Json& j, const std::string& field) {
    const Rat q = json_to_rat(j, field);
    if (!is_integer(q)) bad(field, "expected an integer");
    return q.get_num();
}

Json rat_to_json(const Rat& q) {
    if (is_integer(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(rat_str(q));
}

MukaiVector json_to_vector(const Json& j, const std::string& field) {
    if (!j.is_object()) bad(field, "expected an object {r, c1, a}");
    MukaiVector v;
    v.r = json_to_rat(need(j, "r", field), field + ".r");
    v.c1 = json_to_class(need(j, "c1", field), field + ".c1");
    v.a = json_to_rat(need(j, "a", field), field + ".a");
    return v;
}

Json vector_to_json(const MukaiVector& v) {
    Json out = Json::object();
    out["r"] = rat_to_json(v.r);
    Json c1 = Json::array();
    for (const Rat& c : v.c1.coords) c1.push_back(rat_to_json(c));
    out["c1"] = std::move(c1);
    out["a"] = rat_to_json(v.a);
    return out;
}

Scenario parse_scenario(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("scenario: expected a JSON object");
    const Json& schema = need(j, "schema", "");
    if (!schema.is_number_integer() || schema.get<long long>() != 1)
        throw std::invalid_argument("scenario field 'schema': expected 1");

    Scenario s;
    s.raw = j;
    if (auto it = j.find("surface"); it != j.end()) {
        if (!it->is_string()) bad("surface", "expected \"abelian\" or \"k3\"");
        auto kind = parse_surface(it->get<std::string>());
        if (!kind) bad("surface", "expected \"abelian\" or \"k3\"");
        s.surface = *kind;
        s.surface_given = true;
    }
    if (auto it = j.find("ns"); it != j.end()) s.ns = json_to_lattice(*it, "ns");

    const Json& ctx_j = need(j, "context", "");
    if (!ctx_j.is_object()) bad("context", "expected an object");
    const Json& preset_j = need(ctx_j, "preset", "context");
    if (!preset_j.is_string()) bad("context.preset", "expected a string");
    s.preset = preset_j.get<std::string>();
    if (s.preset != "poincare" && s.preset != "k3_example" && s.preset != "custom")
        bad("context.preset", "expected \"poincare\", \"k3_example\" or \"custom\"");
    if (auto it = ctx_j.find("n"); it != ctx_j.end()) s.n = json_to_int(*it, "context.n");
    if (auto it = ctx_j.find("k"); it != ctx_j.end()) s.k = json_to_int(*it, "context.k");
    if (auto it = ctx_j.find("v0"); it != ctx_j.end()) s.v0 = json_to_vector(*it, "context.v0");
    if (auto it = ctx_j.find("w0"); it != ctx_j.end()) s.w0 = json_to_vector(*it, "context.w0");
    if (auto it = ctx_j.find("ns_map"); it != ctx_j.end()) s.ns_map = json_to_map(*it, "context.ns_map");

    if (auto it = j.find("vector"); it != j.end()) s.vector = json_to_vector(*it, "vector");

    if (auto it = j.find("extras"); it != j.end()) {
        const Json& e = *it;
        if (!e.is_object()) bad("extras", "expected an object");
        if (auto g = e.find("G"); g != e.end()) s.extras.G = json_to_vector(*g, "extras.G");
        if (auto dx = e.find("D_xi"); dx != e.end()) {
            if (!dx->is_array()) bad("extras.D_xi", "expected an array of coordinate arrays");
            std::vector<NSClass> list;
            for (const auto& entry : *dx) list.push_back(json_to_class(entry, "extras.D_xi"));
            s.extras.D_xi = std::move(list);
        }
        if (auto r = e.find("r"); r != e.end()) s.extras.r = json_to_int(*r, "extras.r");
        if (auto k = e.find("k"); k != e.end()) s.extras.k = json_to_int(*k, "extras.k");
        if (auto sv = e.find("s"); sv != e.end()) s.extras.s = json_to_int(*sv, "extras.s");
        if (auto hc = e.find("hperp_cap"); hc != e.end()) s.extras.hperp_cap = json_to_int(*hc, "extras.hperp_cap");
    }
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("scenario file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_scenario(j);
}

FMContext build_context(const Scenario& s) {
    if (s.preset == "poincare") {
        if (s.surface_given && s.surface != Surface::abelian)
            bad("surface", "the poincare preset is an abelian-surface context");
        if (s.ns) {
            if (s.n && *s.n != s.ns->n()) bad("context.n", "disagrees with (H,H)/2 of the ns block");
            return poincare_context(*s.ns);
        }
        if (!s.n) bad("context.n", "required when no ns block is given");
        return poincare_context_rank1(*s.n);
    }
    if (s.preset == "k3_example") {
        if (s.surface_given && s.surface != Surface::k3)
            bad("surface", "the k3_example preset is a K3-surface context");
        if (!s.n) bad("context.n", "required for the k3_example preset");
        if (!s.k) bad("context.k", "required for the k3_example preset");
        if (s.ns && (s.ns->rank() != 1 || s.ns->n() != *s.n))
            bad("ns", "the k3_example preset uses NS = ZH with (H,H) = 2n");
        return k3_example_context(*s.n, *s.k);
    }
    // custom
    if (!s.surface_given) bad("surface", "required for a custom context");
    if (!s.ns) bad("ns", "required for a custom context");
    if (!s.v0) bad("context.v0", "required for a custom context");
    if (!s.w0) bad("context.w0", "required for a custom context");
    const NsMap map = s.ns_map ? *s.ns_map : NsMap::identity(s.ns->rank());
    return make_context(s.surface, *s.ns, *s.ns, *s.v0, *s.w0, map);
}

MukaiVector scenario_vector(const Scenario& s, const FMContext& ctx) {
    if (!s.vector) throw std::invalid_argument("scenario field 'vector': missing");
    if (s.vector->c1.rank() != ctx.ns_x().rank())
        throw std::invalid_argument("scenario field 'vector.c1': rank does not match the divisor lattice");
    return *s.vector;
}

Json report_to_json(const CriterionReport& rep) {
    Json out = Json::object();
    out["criterion"] = to_string(rep.kind);
    out["applicable"] = rep.applicable;
    out["satisfied"] = rep.satisfied;
    out["conclusion_key"] = rep.conclusion_key;
    out["conclusion"] = rep.conclusion;
    Json computed = Json::object();
    for (const auto& [name, value] : rep.computed) computed[name] = value;
    out["computed"] = std::move(computed);
    out["notes"] = rep.notes;
    return out;
}

Json counterexample_to_json(const CounterexampleReport& rep) {
    Json out = Json::object();
    out["scenario"] = rep.scenario;
    Json vectors = Json::object();
    for (const auto& [name, v] : rep.vectors) vectors[name] = vector_to_json(v);
    out["vectors"] = std::move(vectors);
    Json slopes = Json::object();
    for (const auto& [name, q] : rep.slopes) slopes[name] = rat_to_json(q);
    out["slopes"] = std::move(slopes);
    Json conditions = Json::object();
    for (const auto& [name, b] : rep.conditions) conditions[name] = b;
    out["conditions"] = std::move(conditions);
    out["gap"] = rep.gap ? rat_to_json(*rep.gap) : Json();
    out["verdict"] = rep.verdict;
    out["valid"] = rep.valid;
    out["notes"] = rep.notes;
    return out;
}

Json violation_to_json(const ViolationRecord& rec) {
    Json out = Json::object();
    out["a1"] = rat_to_json(rec.candidate.a1);
    out["l1"] = rat_to_json(rec.candidate.l1);
    out["d1"] = rat_to_json(rec.candidate.d1);
    Json d1 = Json::array();
    for (const Rat& c : rec.candidate.D1.coords) d1.push_back(rat_to_json(c));
    out["D1"] = std::move(d1);
    out["square"] = rat_to_json(rec.candidate.square);
    out["claim"] = to_string(rec.claim);
    out["detail"] = rec.detail;
    return out;
}

}  // namespace mukai
