#include "waldkit/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "waldkit/invariants.hpp"
#include "waldkit/io.hpp"

namespace waldkit {

using nlohmann::json;

namespace {

std::string& data_dir() {
    static std::string dir;
    return dir;
}

// Check or construction failure on well-formed input.
struct Failed {
    std::string message;
};

std::optional<std::string> in_data_dir(const std::string& ref) {
    if (data_dir().empty() || std::filesystem::path(ref).is_absolute())
        return std::nullopt;
    const auto path = std::filesystem::path(data_dir()) / ref;
    if (std::filesystem::exists(path))
        return path.string();
    return std::nullopt;
}

FinCofCategory resolve_category(const std::string& ref) {
    if (ref.empty())
        throw StructuralError("--category is required");
    if (std::filesystem::exists(ref))
        return load_category(ref);
    if (auto p = in_data_dir(ref))
        return load_category(*p);
    if (is_builtin_category(ref)) {
        const auto path = std::filesystem::path(data_dir()) / (ref + ".cat");
        if (!data_dir().empty() && std::filesystem::exists(path))
            return load_category(path.string());
        return builtin_category(ref);
    }
    throw StructuralError(ref + ": no such file or builtin category");
}

SimplicialOrd resolve_Y(const std::string& ref, int cap) {
    if (std::filesystem::exists(ref))
        return load_Y(ref);
    if (auto p = in_data_dir(ref))
        return load_Y(*p);
    if (is_builtin_Y(ref)) {
        const auto path = std::filesystem::path(data_dir()) / (ref + ".y");
        if (!data_dir().empty() && std::filesystem::exists(path)) {
            SimplicialOrd Y = load_Y(path.string());
            if (Y.cap >= cap)
                return Y;
        }
        return builtin_Y(ref, cap);
    }
    throw StructuralError(ref + ": no such file or builtin Y");
}

std::pair<int, int> degrees(const RunConfig& cfg, int lo, int hi) {
    if (!cfg.range.empty()) {
        static const std::regex re(R"((\d+)\.\.(\d+))");
        std::smatch m;
        if (!std::regex_match(cfg.range, m, re))
            throw StructuralError("--range expects A..B, got '" + cfg.range + "'");
        lo = std::stoi(m[1]);
        hi = std::stoi(m[2]);
        if (hi < lo)
            throw StructuralError("--range " + cfg.range + " is empty");
    } else if (cfg.p >= 0) {
        lo = hi = cfg.p;
    }
    return {lo, hi};
}

json to_json(const ValidationReport& r) {
    json j;
    j["ok"] = r.ok();
    j["violations"] = json::array();
    for (const auto& v : r.violations())
        j["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
    j["notes"] = r.notes();
    return j;
}

json to_json(const InvariantReport& R) {
    json j;
    j["invariant"] = R.invariant;
    j["description"] = R.description;
    j["instance"] = R.instance;
    j["field"] = R.field;
    j["caps"] = R.caps;
    j["reliable"] = {R.reliable_lo, R.reliable_hi};
    j["values"] = json::array();
    for (const auto& v : R.values) {
        json e{{"degree", v.degree}, {"value", v.text}};
        if (v.dim >= 0)
            e["dim"] = v.dim;
        j["values"].push_back(e);
    }
    j["pins"] = R.pins;
    j["notes"] = R.notes;
    j["checks"] = to_json(R.checks);
    return j;
}

struct Output {
    std::string text;
    json doc = json::object();
    bool ok = true;
};

Output emit(const InvariantReport& R) { return {R.text(), to_json(R), R.checks.ok() && R.pins_match()}; }

Output cmd_validate(const RunConfig& cfg) {
    const FinCofCategory C = resolve_category(cfg.category);
    Output o;
    std::string t;
    const ValidationReport laws = validate_category(C.base);
    o.doc["category"] = C.name;
    o.doc["laws"] = to_json(laws);
    t += "category " + C.name + ": laws " + (laws.ok() ? "valid" : "INVALID") + "\n";
    for (const auto& v : laws.violations())
        t += "  violation [" + v.kind + "] " + v.detail + "\n";
    o.ok = laws.ok();
    if (laws.ok()) {
        const ValidationReport cof = validate_cofibrations(C);
        o.doc["cofibrations"] = to_json(cof);
        o.doc["s_admissible"] = s_admissible(cof);
        t += "cofibrations: " + std::string(cof.ok() ? "valid" : "INVALID") + "\n";
        for (const auto& v : cof.violations())
            t += "  violation [" + v.kind + "] " + v.detail + "\n";
        if (!cof.ok())
            t += std::string("S-construction usable: ") + (s_admissible(cof) ? "yes" : "no") + "\n";
        o.ok = cof.ok();
    }
    if (!cfg.y.empty()) {
        const SimplicialOrd Y = resolve_Y(cfg.y, cfg.cap < 0 ? 3 : cfg.cap);
        const ValidationReport yr = validate_Y(Y);
        o.doc["y"] = to_json(yr);
        t += "Y " + Y.name + " (cap " + std::to_string(Y.cap) + "): " + (yr.ok() ? "valid" : "INVALID") + "\n";
        for (const auto& v : yr.violations())
            t += "  violation [" + v.kind + "] " + v.detail + "\n";
        o.ok = o.ok && yr.ok();
    }
    t += o.ok ? "valid\n" : "invalid\n";
    o.doc["valid"] = o.ok;
    o.text = t;
    return o;
}

Output cmd_sset(const RunConfig& cfg) {
    const int cap = cfg.cap < 0 ? 3 : cfg.cap;
    const FinCofCategory C = resolve_category(cfg.category);
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, cap);
    const SConstruction S = s_simplicial_set(C, Y, cap);
    const ValidationReport r = validate(S.sset);
    Output o;
    o.ok = r.ok();
    std::string t = S.sset.name + " up to level " + std::to_string(cap) + "\n";
    o.doc["name"] = S.sset.name;
    o.doc["cap"] = cap;
    o.doc["levels"] = json::array();
    for (int n = 0; n <= cap; ++n) {
        const int nd = static_cast<int>(nondegenerate(S.sset, n).size());
        t += "level " + std::to_string(n) + ": " + std::to_string(S.sset.sizes[n]) + " simplices, " +
             std::to_string(nd) + " nondegenerate\n";
        json lev{{"n", n}, {"size", S.sset.sizes[n]}, {"nondegenerate", nd}, {"labels", S.sset.labels[n]}};
        o.doc["levels"].push_back(lev);
    }
    if (cfg.output == "text" && cap <= 2)
        t += dump(S.sset);
    t += "simplicial identities: " + std::string(r.ok() ? "valid" : "INVALID") + "\n";
    for (const auto& v : r.violations())
        t += "  violation [" + v.kind + "] " + v.detail + "\n";
    o.doc["checks"] = to_json(r);
    o.text = t;
    return o;
}

Output cmd_homology(const RunConfig& cfg, FieldSpec k) {
    const auto [lo, hi] = degrees(cfg, 0, cfg.cap < 1 ? 2 : cfg.cap - 1);
    const FinCofCategory C = resolve_category(cfg.category);
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, hi + 1);
    InvariantReport R = s_homology(C, Y, hi, k);
    R.values.erase(std::remove_if(R.values.begin(), R.values.end(), [lo = lo](const auto& v) { return v.degree < lo; }),
                   R.values.end());
    return emit(R);
}

Output cmd_k0(const RunConfig& cfg) {
    const int cap = cfg.cap < 0 ? 3 : cfg.cap;
    if (cap < 2)
        throw StructuralError("k0 needs --cap >= 2");
    const FinCofCategory C = resolve_category(cfg.category);
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, cap);
    const K0Result r = k0(C, Y, cap);
    Output o = emit(r.report);
    o.doc["presentation"] = r.presentation.to_string();
    o.doc["abelian"] = {{"rank", r.abelian.rank}, {"torsion", json::array()}};
    for (const auto& t : r.abelian.torsion)
        o.doc["abelian"]["torsion"].push_back(t.get_str());
    return o;
}

Output cmd_hh(const RunConfig& cfg, FieldSpec k) {
    const auto [lo, hi] = degrees(cfg, 0, 1);
    const FinCofCategory C = resolve_category(cfg.category);
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, std::max(cfg.cap, hi + 2));
    return emit(hh(C, Y, lo, hi, k, cfg.crosscheck));
}

Output cmd_hc(const RunConfig& cfg, FieldSpec k) {
    const auto [lo, hi] = degrees(cfg, 0, 1);
    const FinCofCategory C = resolve_category(cfg.category);
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, std::max(cfg.cap, hi + 2));
    return emit(hc(C, Y, lo, hi, k));
}

Output cmd_sbi(const RunConfig& cfg, FieldSpec k) {
    const int hi = degrees(cfg, 0, 2).second;
    const FinCofCategory C = resolve_category(cfg.category);
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, std::max(cfg.cap, hi + 2));
    const SBIResult r = sbi_check(C, Y, k, hi);
    Output o;
    const bool control_fails = !r.control.ok();
    o.ok = r.exactness.ok() && r.aligned.ok() && control_fails;
    std::string t = "SBI sequence for " + C.name + " / " + Y.name + " over " + k.to_string() +
                    ", HH^Y and HC^Y degrees 0.." + std::to_string(hi) + "\n";
    t += "(mixed degrees: HH^Y_p = HH_{p+1}, HC^Y_p = HC_{p+1}; nodes checked up to mixed degree " +
         std::to_string(hi + 1) + ")\n";
    t += "exactness: " + std::string(r.exactness.ok() ? "exact" : "NOT EXACT") + "\n";
    for (const auto& v : r.exactness.violations())
        t += "  violation [" + v.kind + "] " + v.detail + "\n";
    for (const auto& n : r.exactness.notes())
        t += "  " + n + "\n";
    t += "aligned dimension test: " + std::string(r.aligned.ok() ? "feasible" : "INFEASIBLE") + "\n";
    t += "mis-shifted control (HH^Y_p against HC_p): " +
         std::string(control_fails ? "infeasible, as expected" : "FEASIBLE, calibration not demonstrated") + "\n";
    for (const auto& n : r.control.notes())
        t += "  " + n + "\n";
    o.doc["exactness"] = to_json(r.exactness);
    o.doc["aligned"] = to_json(r.aligned);
    o.doc["control"] = to_json(r.control);
    o.doc["reliable"] = {0, hi};
    o.text = t;
    return o;
}

Output cmd_trace(const RunConfig& cfg, FieldSpec k) {
    const int hi = degrees(cfg, 0, 1).second;
    const FinCofCategory C = resolve_category(cfg.category);
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, std::max(cfg.cap, hi + 2));
    const TraceResult r = dennis_trace(C, Y, hi, k);
    Output o = emit(r.report);
    o.doc["matrices"] = json::array();
    for (const auto& m : r.matrices) {
        json mj = json::array();
        for (const auto& row : m) {
            json rj = json::array();
            for (const auto& x : row)
                rj.push_back(x.get_str());
            mj.push_back(rj);
        }
        o.doc["matrices"].push_back(mj);
    }
    return o;
}

BiFunctor named_bifunctor(const std::string& name, const CategoryPtr& C) {
    if (name == "meet")
        return meet_bifunctor(C);
    if (name == "join")
        return join_bifunctor(C);
    if (name == "zero")
        return zero_bifunctor(C, C, C);
    throw StructuralError("unknown functor '" + name + "' (meet, join, zero)");
}

Output cmd_product(const RunConfig& cfg, FieldSpec k) {
    const int p = std::max(cfg.p, 0), q = std::max(cfg.q, 0);
    const int cap = std::max(cfg.cap < 0 ? 3 : cfg.cap, p + q + 3);
    auto C = std::make_shared<const FinCofCategory>(resolve_category(cfg.category));
    const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "point_plus" : cfg.y, cap);
    const BiFunctor F = named_bifunctor(cfg.functor, C);
    const ValidationReport be = is_biexact(F);
    Output o;
    std::string t = "functor " + cfg.functor + " on " + C->name + ": " + (be.ok() ? "bi-exact" : "NOT bi-exact") + "\n";
    for (const auto& v : be.violations())
        t += "  violation [" + v.kind + "] " + v.detail + "\n";
    o.doc["biexact"] = to_json(be);
    if (!be.ok()) {
        o.ok = false;
        o.text = t;
        return o;
    }
    const ProductKMap km = product_k_map(F, Y, cfg.cap < 0 ? 3 : cfg.cap);
    t += "F^Y: " + km.source.name + " -> " + km.target.name + " is a simplicial map\n";
    o.doc["k_map"] = to_json(km.report);
    const ProductHH ph = product_hh(F, Y, p, q, k);
    t += ph.report.text();
    o.doc["hh_product"] = to_json(ph.report);
    o.ok = ph.report.checks.ok();
    o.text = t;
    return o;
}

Output cmd_homotopy(const RunConfig& cfg, FieldSpec k) {
    const int hi = degrees(cfg, 0, 2).second;
    const int cap = hi + 1;
    const FinCofCategory C = resolve_category(cfg.category);
    HomotopyInstance H;
    if (cfg.homotopy == "vertex") {
        H = vertex_homotopy(cap);
    } else if (cfg.homotopy == "constant") {
        const SimplicialOrd Y = resolve_Y(cfg.y.empty() ? "circle" : cfg.y, cap);
        const LevelMap id = identity_level_map(Y);
        H = HomotopyInstance{Y, Y, id, id, constant_homotopy(Y, Y, id)};
    } else if (std::filesystem::exists(cfg.homotopy)) {
        H = read_homotopy(read_file(cfg.homotopy), cfg.homotopy, cap);
    } else {
        throw StructuralError(cfg.homotopy + ": no such homotopy file (or use vertex, constant)");
    }
    const ValidationReport r = homotopy_invariance(C, H, k, hi);
    Output o;
    o.ok = r.ok();
    o.text = "homotopy " + H.Y.name + " -> " + H.Y2.name + " on " + C.name + ", degrees <= " + std::to_string(hi) +
             " over " + k.to_string() + "\n" + r.to_string() + (r.ok() ? "certified\n" : "not certified\n");
    o.doc["report"] = to_json(r);
    o.doc["certified"] = r.ok();
    return o;
}

}  // namespace

void set_data_dir(std::string dir) { data_dir() = std::move(dir); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"order-Y K-theory and Hochschild/cyclic invariants of finite categories with cofibrations",
                 "waldkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "check category laws, cofibration axioms and optionally a Y file"},
        {"s-set", "build S^Y(C) and check its simplicial identities"},
        {"homology", "homology of |S^Y(C)|"},
        {"k0", "K_0^Y as pi_1 of S^Y(C) with its abelianization"},
        {"hh", "HH^Y from the diagonal of the cyclic nerve grid"},
        {"hc", "HC^Y from the (b,B)-bicomplex"},
        {"sbi", "exactness of the SBI sequence with a mis-shifted control"},
        {"trace", "Dennis trace matrices and the K_0 composite"},
        {"product", "bi-exact product on S^Y and on HH^Y"},
        {"homotopy-check", "homotopy invariance of H and HH"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--category", cfg.category, "category file or builtin name");
        sub->add_option("--y", cfg.y, "Y file or builtin name (circle, const0, point_plus, interval_plus)");
        sub->add_option("--cap", cfg.cap, "dimension cap")->check(CLI::NonNegativeNumber);
        sub->add_option("--field", cfg.field, "q or fp:P");
        sub->add_option("--p", cfg.p, "degree p")->check(CLI::NonNegativeNumber);
        sub->add_option("--q", cfg.q, "degree q")->check(CLI::NonNegativeNumber);
        sub->add_option("--range", cfg.range, "degree range A..B");
        sub->add_option("--output", cfg.output, "text or structured")->check(CLI::IsMember({"text", "structured"}));
        sub->add_flag("--crosscheck", cfg.crosscheck, "compare with the total complex");
        if (name == "product")
            sub->add_option("--functor", cfg.functor, "meet, join or zero");
        if (name == "homotopy-check")
            sub->add_option("--homotopy", cfg.homotopy, "vertex, constant or a homotopy file");
        sub->callback([&cfg, n = name] { cfg.command = n; });
    }

    std::vector<std::string> argv_store{"waldkit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const FieldSpec k = parse_field(cfg.field);
        Output o;
        const std::string& c = cfg.command;
        if (c == "validate")
            o = cmd_validate(cfg);
        else if (c == "s-set")
            o = cmd_sset(cfg);
        else if (c == "homology")
            o = cmd_homology(cfg, k);
        else if (c == "k0")
            o = cmd_k0(cfg);
        else if (c == "hh")
            o = cmd_hh(cfg, k);
        else if (c == "hc")
            o = cmd_hc(cfg, k);
        else if (c == "sbi")
            o = cmd_sbi(cfg, k);
        else if (c == "trace")
            o = cmd_trace(cfg, k);
        else if (c == "product")
            o = cmd_product(cfg, k);
        else
            o = cmd_homotopy(cfg, k);
        if (cfg.output == "structured") {
            o.doc["command"] = c;
            o.doc["status"] = o.ok ? "ok" : "failed";
            out << o.doc.dump(2) << '\n';
        } else {
            out << o.text;
        }
        return o.ok ? 0 : 1;
    } catch (const StructuralError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace waldkit
