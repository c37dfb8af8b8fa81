#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "mukai/scenario.hpp"
#include "mukai/sl2z.hpp"

namespace {

using namespace mukai;

Json int_to_json(const Int& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(int_str(z));
}

Json alg_to_json(const AlgVector& v) {
    Json out = Json::object();
    out["r"] = int_to_json(v.r);
    out["d"] = int_to_json(v.d);
    out["a"] = int_to_json(v.a);
    return out;
}

Int parse_int_flag(const std::string& text, const std::string& flag) {
    try {
        const Rat q = parse_rat(text);
        if (!is_integer(q)) throw std::invalid_argument("not an integer");
        return q.get_num();
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(flag + " expects an integer, got '" + text + "'");
    }
}

OracleCaps parse_caps(const std::string& text) {
    OracleCaps caps;
    if (text.empty()) return caps;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--caps expects a1=INT,l1=INT, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const Int value = parse_int_flag(token.substr(eq + 1), "--caps " + key);
        if (key == "a1")
            caps.a1 = value;
        else if (key == "l1")
            caps.l1 = value;
        else
            throw std::invalid_argument("--caps keys are a1 and l1, got '" + key + "'");
    }
    return caps;
}

std::vector<CriterionKind> parse_criterion_list(const std::string& csv) {
    if (csv.empty()) return all_criteria();
    std::vector<CriterionKind> kinds;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto kind = parse_criterion(token);
        if (!kind) throw std::invalid_argument("unknown criterion '" + token + "'");
        kinds.push_back(*kind);
    }
    if (kinds.empty()) throw std::invalid_argument("--criterion given but empty");
    return kinds;
}

void print_doc(const Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << doc.dump(2) << "\n";
}

int cmd_check(const std::string& scenario_path, const std::string& criterion_csv, const std::string& out_path) {
    const Scenario s = load_scenario_file(scenario_path);
    const FMContext ctx = build_context(s);
    const MukaiVector v = scenario_vector(s, ctx);
    Json doc = Json::object();
    doc["schema"] = 1;
    doc["scenario"] = s.raw;
    Json reports = Json::array();
    const bool explicit_list = !criterion_csv.empty();
    for (CriterionKind kind : parse_criterion_list(criterion_csv)) {
        try {
            reports.push_back(report_to_json(evaluate_criterion(kind, ctx, v, s.extras)));
        } catch (const std::invalid_argument& e) {
            // When sweeping every criterion, one that needs extras this scenario
            // doesn't carry is reported as inapplicable rather than aborting the run.
            if (explicit_list) throw;
            CriterionReport rep;
            rep.kind = kind;
            rep.applicable = false;
            rep.satisfied = false;
            rep.notes.push_back(e.what());
            reports.push_back(report_to_json(rep));
        }
    }
    doc["reports"] = std::move(reports);
    print_doc(doc, out_path);
    return 0;
}

int cmd_fm(const std::string& scenario_path, const std::string& direction, const std::string& out_path) {
    if (direction != "fm" && direction != "gm")
        throw std::invalid_argument("--direction must be fm or gm, got '" + direction + "'");
    const Scenario s = load_scenario_file(scenario_path);
    const FMContext ctx = build_context(s);
    const MukaiVector v = scenario_vector(s, ctx);
    const FMCoordinates c = decompose(v, ctx);
    const MukaiVector image = direction == "fm" ? fm_apply(v, ctx) : gm_apply(v, ctx);

    Json doc = Json::object();
    doc["schema"] = 1;
    doc["scenario"] = s.raw;
    doc["direction"] = direction;
    doc["input"] = vector_to_json(v);
    Json coords = Json::object();
    coords["l"] = rat_to_json(c.l);
    coords["a"] = rat_to_json(c.a);
    coords["d"] = rat_to_json(c.d);
    Json dcoords = Json::array();
    for (const Rat& x : c.D.coords) dcoords.push_back(rat_to_json(x));
    coords["D"] = std::move(dcoords);
    doc["coordinates"] = std::move(coords);
    doc["image"] = vector_to_json(image);
    const bool isometry = pairing(v, v, ctx.ns_x()) == pairing(image, image, ctx.ns_y());
    doc["isometry_check"] = isometry;
    print_doc(doc, out_path);
    if (!isometry) throw std::logic_error("isometry self-check failed");
    return 0;
}

int cmd_oracle(const std::string& scenario_path, const std::string& caps_str, const std::string& out_path) {
    const Scenario s = load_scenario_file(scenario_path);
    const FMContext ctx = build_context(s);
    const MukaiVector v = scenario_vector(s, ctx);
    const FMCoordinates c = decompose(v, ctx);
    const KeyClaimsResult res = verify_key_claims(ctx, c, parse_caps(caps_str));

    Json doc = Json::object();
    doc["schema"] = 1;
    doc["scenario"] = s.raw;
    doc["rank0"] = res.rank0;
    doc["N"] = rat_to_json(res.threshold_N);
    doc["pre_main"] = res.pre_main;
    doc["pre_rem"] = res.pre_rem;
    Json caps = Json::object();
    caps["a1"] = int_to_json(res.caps_used.a1);
    caps["l1"] = int_to_json(res.caps_used.l1);
    doc["caps"] = std::move(caps);
    doc["certified"] = res.certified;
    doc["candidates"] = res.candidate_count;
    Json violations = Json::array();
    for (const ViolationRecord& rec : res.violations) violations.push_back(violation_to_json(rec));
    doc["violations"] = std::move(violations);
    print_doc(doc, out_path);

    for (const ViolationRecord& rec : res.violations) {
        const bool rem = rec.claim == KeyClaim::KeyRem1 || rec.claim == KeyClaim::KeyRem2 ||
                         rec.claim == KeyClaim::Key0Rem1 || rec.claim == KeyClaim::Key0Rem2;
        if (rem ? res.pre_rem : res.pre_main)
            throw std::logic_error("oracle found a violation under a satisfied precondition: " + rec.detail);
    }
    return 0;
}

int cmd_examples(const std::string& which, const std::optional<Int>& r, const std::optional<Int>& n,
                 const std::optional<Int>& k, const std::optional<Int>& a, const std::optional<Int>& s,
                 const std::string& out_path) {
    auto require = [&](const std::optional<Int>& val, const char* flag) -> const Int& {
        if (!val) throw std::invalid_argument(std::string("examples --which ") + which + " requires " + flag);
        return *val;
    };
    CounterexampleReport rep;
    if (which == "1") {
        rep = example1_report(require(r, "--r"));
    } else if (which == "2") {
        rep = example2_report(require(n, "--n"), require(k, "--k"), require(r, "--r"), require(a, "--a"));
    } else if (which == "counter") {
        rep = lemma_counter_report(require(r, "--r"), require(k, "--k"), require(n, "--n"), require(s, "--s"));
    } else {
        throw std::invalid_argument("--which must be 1, 2 or counter, got '" + which + "'");
    }
    Json doc = Json::object();
    doc["schema"] = 1;
    doc["which"] = which;
    doc["report"] = counterexample_to_json(rep);
    print_doc(doc, out_path);
    return 0;
}

int cmd_orbit(const std::string& word, const std::string& vector_str, const Int& n, long depth,
              bool allow_nonprincipal, const std::string& out_path) {
    if (depth < 0 || depth > 16) throw std::invalid_argument("--depth must be between 0 and 16");
    std::vector<Int> parts;
    {
        std::stringstream ss(vector_str);
        std::string token;
        while (std::getline(ss, token, ',')) parts.push_back(parse_int_flag(token, "--vector"));
    }
    if (parts.size() != 3) throw std::invalid_argument("--vector expects r,d,a");
    const AlgVector start{parts[0], parts[1], parts[2]};
    const AlgVector base = sl2z_apply(parse_word(word), start, n, allow_nonprincipal);

    Json doc = Json::object();
    doc["schema"] = 1;
    doc["word"] = word;
    doc["n"] = int_to_json(n);
    doc["start"] = alg_to_json(start);
    doc["base"] = alg_to_json(base);
    doc["square"] = int_to_json(alg_square(base, n));

    std::vector<Gen> gens;
    if (n == 1 || allow_nonprincipal) gens.push_back(Gen::S);
    gens.push_back(Gen::T);
    gens.push_back(Gen::Tinv);
    const char* letters[] = {"S", "T", "t"};
    auto letter_of = [&](Gen g) { return g == Gen::S ? letters[0] : (g == Gen::T ? letters[1] : letters[2]); };

    constexpr size_t kOrbitCap = 10000;
    bool truncated = false;
    std::vector<std::pair<std::string, AlgVector>> layer{{"", base}};
    std::vector<std::pair<std::string, AlgVector>> all = layer;
    std::vector<std::string> seen{to_string(base)};
    for (long lv = 0; lv < depth && !truncated; ++lv) {
        std::vector<std::pair<std::string, AlgVector>> next;
        for (const auto& [w, vec] : layer) {
            for (Gen g : gens) {
                const AlgVector img = apply_gen(g, vec, n, allow_nonprincipal);
                const std::string key = to_string(img);
                if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
                seen.push_back(key);
                next.emplace_back(std::string(letter_of(g)) + w, img);
                if (all.size() + next.size() >= kOrbitCap) {
                    truncated = true;
                    break;
                }
            }
            if (truncated) break;
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    Json orbit = Json::array();
    for (const auto& [w, vec] : all) {
        Json entry = Json::object();
        entry["word"] = w;
        entry["vector"] = alg_to_json(vec);
        orbit.push_back(std::move(entry));
    }
    doc["orbit"] = std::move(orbit);
    doc["truncated"] = truncated;
    print_doc(doc, out_path);
    return 0;
}

/* ---------------------------------------------------------------- scan -- */

struct GridAxis {
    std::string name;
    std::vector<Int> values;
};

struct ScanSpec {
    std::string preset;
    std::vector<GridAxis> axes;
    std::vector<CriterionKind> criteria;
    bool oracle = false;
    OracleCaps caps;
    std::vector<std::string> columns;  // empty = all
};

ScanSpec load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open grid file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("grid file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("grid file: expected a JSON object");
    if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"].get<long long>() != 1)
        throw std::invalid_argument("grid field 'schema': expected 1");

    ScanSpec spec;
    if (!j.contains("preset") || !j["preset"].is_string())
        throw std::invalid_argument("grid field 'preset': expected \"poincare\" or \"k3_example\"");
    spec.preset = j["preset"].get<std::string>();
    if (spec.preset != "poincare" && spec.preset != "k3_example")
        throw std::invalid_argument("grid field 'preset': expected \"poincare\" or \"k3_example\"");

    if (!j.contains("grid") || !j["grid"].is_object()) throw std::invalid_argument("grid field 'grid': expected an object");
    for (const auto& [name, range] : j["grid"].items()) {
        const bool known = name == "n" || name == "k" || name == "r" || name == "d" || name == "a";
        if (!known) throw std::invalid_argument("grid parameter '" + name + "' is not one of n, k, r, d, a");
        GridAxis axis;
        axis.name = name;
        if (range.is_array()) {
            for (const auto& entry : range) axis.values.push_back(json_to_int(entry, "grid." + name));
        } else if (range.is_object()) {
            const Int from = json_to_int(range.at("from"), "grid." + name + ".from");
            const Int to = json_to_int(range.at("to"), "grid." + name + ".to");
            Int step(1);
            if (range.contains("step")) step = json_to_int(range.at("step"), "grid." + name + ".step");
            if (step < 1) throw std::invalid_argument("grid." + name + ".step must be >= 1");
            for (Int v = from; v <= to; v += step) axis.values.push_back(v);
        } else {
            throw std::invalid_argument("grid." + name + ": expected an array or {from, to, step}");
        }
        if (axis.values.empty()) throw std::invalid_argument("grid." + name + ": empty range");
        spec.axes.push_back(std::move(axis));
    }
    auto has_axis = [&](const char* name) {
        for (const auto& axis : spec.axes)
            if (axis.name == name) return true;
        return false;
    };
    if (!has_axis("n") || !has_axis("r") || !has_axis("d") || !has_axis("a"))
        throw std::invalid_argument("grid must define parameters n, r, d, a");
    if (spec.preset == "k3_example" && !has_axis("k"))
        throw std::invalid_argument("the k3_example preset needs a k parameter");
    if (spec.preset == "poincare" && has_axis("k"))
        throw std::invalid_argument("the poincare preset takes no k parameter");

    if (!j.contains("criteria") || !j["criteria"].is_array())
        throw std::invalid_argument("grid field 'criteria': expected an array of tags");
    for (const auto& entry : j["criteria"]) {
        if (!entry.is_string()) throw std::invalid_argument("grid field 'criteria': expected strings");
        auto kind = parse_criterion(entry.get<std::string>());
        if (!kind) throw std::invalid_argument("unknown criterion '" + entry.get<std::string>() + "'");
        spec.criteria.push_back(*kind);
    }
    if (j.contains("oracle")) {
        if (!j["oracle"].is_boolean()) throw std::invalid_argument("grid field 'oracle': expected a boolean");
        spec.oracle = j["oracle"].get<bool>();
    }
    if (j.contains("caps")) {
        const Json& caps = j["caps"];
        if (!caps.is_object()) throw std::invalid_argument("grid field 'caps': expected {a1, l1}");
        if (caps.contains("a1")) spec.caps.a1 = json_to_int(caps["a1"], "caps.a1");
        if (caps.contains("l1")) spec.caps.l1 = json_to_int(caps["l1"], "caps.l1");
    }
    if (j.contains("columns")) {
        if (!j["columns"].is_array()) throw std::invalid_argument("grid field 'columns': expected an array");
        for (const auto& entry : j["columns"]) {
            if (!entry.is_string()) throw std::invalid_argument("grid field 'columns': expected strings");
            spec.columns.push_back(entry.get<std::string>());
        }
    }

    Int product(1);
    for (const auto& axis : spec.axes) {
        product *= Int(axis.values.size());
        if (product > 1000000) throw std::invalid_argument("grid product exceeds the 1000000-row cap");
    }
    return spec;
}

std::vector<std::string> scan_all_columns(const ScanSpec& spec) {
    std::vector<std::string> cols;
    for (const auto& axis : spec.axes) cols.push_back(axis.name);
    for (CriterionKind kind : spec.criteria) {
        cols.push_back(to_string(kind) + "_applicable");
        cols.push_back(to_string(kind) + "_satisfied");
    }
    if (spec.oracle) {
        cols.push_back("pre_main");
        cols.push_back("pre_rem");
        cols.push_back("violations");
        cols.push_back("certified");
    }
    return cols;
}

std::string scan_row(const ScanSpec& spec, size_t index) {
    // Odometer decode: the first axis varies slowest.
    std::vector<Int> values(spec.axes.size());
    size_t rem = index;
    for (size_t i = spec.axes.size(); i-- > 0;) {
        const size_t len = spec.axes[i].values.size();
        values[i] = spec.axes[i].values[rem % len];
        rem /= len;
    }
    Int n(1), k(1), r(0), d(0), a(0);
    for (size_t i = 0; i < spec.axes.size(); ++i) {
        const std::string& name = spec.axes[i].name;
        if (name == "n")
            n = values[i];
        else if (name == "k")
            k = values[i];
        else if (name == "r")
            r = values[i];
        else if (name == "d")
            d = values[i];
        else
            a = values[i];
    }
    const FMContext ctx = spec.preset == "poincare" ? poincare_context_rank1(n) : k3_example_context(n, k);
    NSClass c1 = NSClass::zero(1);
    c1.coords[0] = Rat(d);
    const MukaiVector v(Rat(r), c1, Rat(a));

    std::vector<std::pair<std::string, std::string>> cells;
    for (size_t i = 0; i < spec.axes.size(); ++i) cells.emplace_back(spec.axes[i].name, int_str(values[i]));
    for (CriterionKind kind : spec.criteria) {
        const CriterionReport rep = evaluate_criterion(kind, ctx, v);
        cells.emplace_back(to_string(kind) + "_applicable", rep.applicable ? "1" : "0");
        cells.emplace_back(to_string(kind) + "_satisfied", rep.satisfied ? "1" : "0");
    }
    if (spec.oracle) {
        std::string pre_main = "0", pre_rem = "0", violations = "NA", certified = "0";
        try {
            const KeyClaimsResult res = verify_key_claims(ctx, decompose(v, ctx), spec.caps);
            pre_main = res.pre_main ? "1" : "0";
            pre_rem = res.pre_rem ? "1" : "0";
            violations = std::to_string(res.violations.size());
            certified = res.certified ? "1" : "0";
        } catch (const std::invalid_argument&) {
            // Row outside the sweep's domain (for example a <= 0): report NA.
        }
        cells.emplace_back("pre_main", pre_main);
        cells.emplace_back("pre_rem", pre_rem);
        cells.emplace_back("violations", violations);
        cells.emplace_back("certified", certified);
    }

    const std::vector<std::string> order = spec.columns.empty() ? scan_all_columns(spec) : spec.columns;
    std::string row;
    for (size_t i = 0; i < order.size(); ++i) {
        const auto it = std::find_if(cells.begin(), cells.end(),
                                     [&](const auto& cell) { return cell.first == order[i]; });
        if (it == cells.end()) throw std::invalid_argument("unknown column '" + order[i] + "'");
        if (i) row += ',';
        row += it->second;
    }
    return row;
}

int cmd_scan(const std::string& grid_path, const std::string& out_path, long workers) {
    if (workers < 1 || workers > 64) throw std::invalid_argument("--workers must be between 1 and 64");
    if (out_path.empty()) throw std::invalid_argument("scan requires --out");
    const ScanSpec spec = load_grid_file(grid_path);

    size_t total = 1;
    for (const auto& axis : spec.axes) total *= axis.values.size();

    std::vector<std::string> rows(total);
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    size_t first_error_row = total;
    auto work = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= total) return;
            {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (first_error) return;
            }
            try {
                rows[i] = scan_row(spec, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (i < first_error_row) {
                    first_error = std::current_exception();
                    first_error_row = i;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (long i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    const std::vector<std::string> order = spec.columns.empty() ? scan_all_columns(spec) : spec.columns;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) out << ',';
        out << order[i];
    }
    out << '\n';
    for (const std::string& row : rows) out << row << '\n';
    out.close();
    std::cout << "wrote " << total << " rows to " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice arithmetic for cohomological transforms of surface sheaves"};
    app.require_subcommand(1);

    std::string scenario_path, criterion_csv, direction = "fm", which, word, vector_str, grid_path, out_path,
                caps_str;
    std::string r_str, n_str, k_str, a_str, s_str, orbit_n_str = "1";
    long depth = 0, workers = 1;
    bool allow_nonprincipal = false;

    CLI::App* check = app.add_subcommand("check", "evaluate numerical criteria for a scenario");
    check->add_option("--scenario", scenario_path, "scenario file (JSON, schema 1)")->required();
    check->add_option("--criterion", criterion_csv, "comma-separated criterion tags (default: all)");
    check->add_option("--out", out_path, "write the report document here instead of stdout");

    CLI::App* fm = app.add_subcommand("fm", "apply the cohomological transform to the scenario vector");
    fm->add_option("--scenario", scenario_path, "scenario file (JSON, schema 1)")->required();
    fm->add_option("--direction", direction, "fm (covariant) or gm (contravariant)");
    fm->add_option("--out", out_path, "write the vector document here instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "sweep destabilizer candidates and report violations");
    oracle->add_option("--scenario", scenario_path, "scenario file (JSON, schema 1)")->required();
    oracle->add_option("--caps", caps_str, "candidate caps, a1=INT,l1=INT (default: certified caps)");
    oracle->add_option("--out", out_path, "write the violation document here instead of stdout");

    CLI::App* examples = app.add_subcommand("examples", "reproduce a worked destabilization instance");
    examples->add_option("--which", which, "1, 2 or counter")->required();
    examples->add_option("--r", r_str, "rank parameter");
    examples->add_option("--n", n_str, "polarization half-square (H,H)/2");
    examples->add_option("--k", k_str, "fiber twist parameter");
    examples->add_option("--a", a_str, "point-coefficient parameter");
    examples->add_option("--s", s_str, "half self-pairing parameter");
    examples->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* orbit = app.add_subcommand("orbit", "apply a group word and list nearby orbit vectors");
    orbit->add_option("--word", word, "letters S, T, t (rightmost acts first)");
    orbit->add_option("--vector", vector_str, "start vector r,d,a")->required();
    orbit->add_option("--n", orbit_n_str, "polarization half-square (default 1)");
    orbit->add_option("--depth", depth, "breadth of the orbit listing around the base vector");
    orbit->add_flag("--allow-nonprincipal", allow_nonprincipal, "let the swap generator act for n != 1");
    orbit->add_option("--out", out_path, "write the orbit document here instead of stdout");

    CLI::App* scan = app.add_subcommand("scan", "evaluate criteria over a parameter grid into a CSV");
    scan->add_option("--grid", grid_path, "grid file (JSON, schema 1)")->required();
    scan->add_option("--out", out_path, "CSV output path")->required();
    scan->add_option("--workers", workers, "worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto opt_int = [](const std::string& text, const char* flag) {
            return text.empty() ? std::optional<Int>() : std::optional<Int>(parse_int_flag(text, flag));
        };
        if (*check) return cmd_check(scenario_path, criterion_csv, out_path);
        if (*fm) return cmd_fm(scenario_path, direction, out_path);
        if (*oracle) return cmd_oracle(scenario_path, caps_str, out_path);
        if (*examples)
            return cmd_examples(which, opt_int(r_str, "--r"), opt_int(n_str, "--n"), opt_int(k_str, "--k"),
                                opt_int(a_str, "--a"), opt_int(s_str, "--s"), out_path);
        if (*orbit) return cmd_orbit(word, vector_str, parse_int_flag(orbit_n_str, "--n"), depth,
                                     allow_nonprincipal, out_path);
        if (*scan) return cmd_scan(grid_path, out_path, workers);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
