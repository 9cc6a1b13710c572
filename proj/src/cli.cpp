#include "sev/cli.hpp"

#include "sev/errors.hpp"
#include "sev/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sev::cli {

namespace {

using io::json;

struct Opts {
    std::string system;
    std::string spec_file;
    std::string format = "json";
    std::string seed_text;
    std::uint64_t prime = oracle::kDefaultPrime;
    long trials = 3;
    bool cross = false;
    bool no_cross = false;

    std::string variety;
    std::string e_list;
    std::string c_list;
    long s = 1;
    long through_first = -1;
    long curve_degree = 1;
    std::string line;
    std::vector<std::string> steps;
    std::vector<std::string> lines;

    std::string scan_kind;
    long t = 2;
    long n_max = -1, e_max = -1, d_max = -1;

    std::string suite;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

long to_long(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw DomainError("bad integer '" + s + "' for " + what);
    }
    if (used != s.size()) throw DomainError("bad integer '" + s + "' for " + what);
    return v;
}

std::vector<long> long_list(const std::string& s, const std::string& what) {
    std::vector<long> out;
    for (const auto& p : split(s, ',')) out.push_back(to_long(p, what));
    if (out.empty()) throw DomainError("empty list for " + what);
    return out;
}

std::uint64_t parse_seed(const std::string& s) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used, 0);
    } catch (const std::exception&) {
        throw DomainError("bad seed '" + s + "'");
    }
    if (used != s.size()) throw DomainError("bad seed '" + s + "'");
    return v;
}

oracle::OracleConfig oracle_config(const Opts& o) {
    oracle::OracleConfig cfg;
    cfg.prime = oracle::PrimeField::make(o.prime);
    if (o.trials < 1) throw DomainError("--trials must be >= 1");
    cfg.trials = o.trials;
    if (!o.seed_text.empty()) {
        cfg.seed = parse_seed(o.seed_text);
    } else if (const char* env = std::getenv("SEV_SEED"); env && *env) {
        cfg.seed = parse_seed(env);
    }
    return cfg;
}

LinearSystem load_system(const Opts& o) {
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw DomainError("cannot read " + o.spec_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return io::parse_system_json(ss.str());
    }
    if (o.system.empty()) throw DomainError("a system is required (--system or --spec-file)");
    if (o.system.front() == '{') return io::parse_system_json(o.system);
    return io::parse_shorthand(o.system);
}

Hypersurface hypersurface_through(const LinearSystem& sys, std::vector<long> e, const std::string& c_list) {
    Hypersurface y{std::move(e), {}};
    if (c_list.empty()) {
        for (std::size_t g = 0; g < sys.points.size(); ++g) y.point_mults.push_back({g, 1});
    } else {
        for (const auto& item : split(c_list, ',')) {
            const auto gc = split(item, ':');
            if (gc.size() != 2) throw DomainError("--c entries look like group:mult");
            const long g = to_long(gc[0], "--c group");
            if (g < 0) throw DomainError("--c group must be >= 0");
            y.point_mults.push_back({static_cast<std::size_t>(g), to_long(gc[1], "--c mult")});
        }
    }
    return y;
}

EffectVariety build_variety(const Opts& o, const LinearSystem& sys) {
    const std::string& v = o.variety;
    if (v == "hyperplane" || v == "quadric" || v == "hypersurface") {
        std::vector<long> e;
        if (!o.e_list.empty()) {
            e = long_list(o.e_list, "--e");
        } else if (v != "hypersurface" && sys.space.t() == 1) {
            e = {v == "hyperplane" ? 1L : 2L};
        } else {
            throw DomainError("--e is required for this variety");
        }
        return hypersurface_through(sys, e, o.c_list);
    }
    if (v == "linear") {
        const long through = o.through_first >= 0 ? o.through_first : std::min(sys.point_count(), o.s + 1);
        return LinearSubspace{o.s, through};
    }
    if (v == "rnc") return RationalNormalCurve{};
    if (v == "curve") return RationalCurveP3{o.curve_degree};
    if (v == "line") {
        const auto pq = long_list(o.line, "--line");
        if (pq.size() != 2) throw DomainError("--line expects p,q");
        return Line{pq[0], pq[1]};
    }
    if (v.empty()) throw DomainError("--variety is required");
    throw UnsupportedError("unknown variety class '" + v + "'");
}

// "line:p,q:alpha" or "hyp:e1,e2:alpha"
effect::ConfigStep parse_step(const std::string& text, const LinearSystem& sys) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw DomainError("--step looks like line:0,1:2 or hyp:1,1:1");
    const long alpha = to_long(parts[2], "--step alpha");
    if (parts[0] == "line") {
        const auto pq = long_list(parts[1], "--step line");
        if (pq.size() != 2) throw DomainError("--step line needs p,q");
        return {Line{pq[0], pq[1]}, alpha};
    }
    if (parts[0] == "hyp") return {hypersurface_through(sys, long_list(parts[1], "--step hyp"), ""), alpha};
    throw UnsupportedError("unknown step kind '" + parts[0] + "'");
}

std::vector<oracle::VanishingScheme> parse_lines(const std::vector<std::string>& items) {
    std::vector<oracle::VanishingScheme> out;
    for (const auto& it : items) {
        const auto parts = split(it, ':');
        if (parts.size() != 2) throw DomainError("--line-scheme looks like p,q:alpha");
        const auto pq = long_list(parts[0], "--line-scheme");
        if (pq.size() != 2) throw DomainError("--line-scheme needs p,q");
        out.push_back({Line{pq[0], pq[1]}, to_long(parts[1], "--line-scheme alpha")});
    }
    return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array()) {
        if (j.empty()) rows.push_back({prefix, "[]"});
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_string()) {
        rows.push_back({prefix, j.get<std::string>()});
    } else {
        rows.push_back({prefix, j.dump()});
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void emit(std::ostream& out, const std::string& format, const json& j) {
    if (format == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << csv_cell(k) << "," << csv_cell(v) << "\n";
    } else {
        out << "| key | value |\n|---|---|\n";
        for (const auto& [k, v] : rows) out << "| " << k << " | " << v << " |\n";
    }
}

void emit_checks(std::ostream& out, const std::string& format, const json& j) {
    if (format == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out << "# suite=" << j["suite"].get<std::string>();
        if (j.contains("seed")) out << " seed=" << j["seed"] << " prime=" << j["prime"];
        out << "\nname,pass,detail\n";
        for (const auto& c : j["checks"])
            out << csv_cell(c["name"].get<std::string>()) << "," << (c["pass"].get<bool>() ? "pass" : "FAIL") << ","
                << csv_cell(c["detail"].get<std::string>()) << "\n";
    } else {
        out << "suite " << j["suite"].get<std::string>();
        if (j.contains("seed")) out << ", seed " << j["seed"] << ", prime " << j["prime"];
        out << "\n\n| check | result | detail |\n|---|---|---|\n";
        for (const auto& c : j["checks"])
            out << "| " << c["name"].get<std::string>() << " | " << (c["pass"].get<bool>() ? "pass" : "FAIL")
                << " | " << c["detail"].get<std::string>() << " |\n";
    }
}

bool all_pass(const json& checks) {
    for (const auto& c : checks)
        if (!c["pass"].get<bool>()) return false;
    return true;
}

int cmd_dim(const Opts& o, std::ostream& out) {
    const auto sys = load_system(o);
    json j = io::to_json(dim_report(sys));
    j["system"] = io::system_to_json(sys);
    j["label"] = describe(sys);
    emit(out, o.format, j);
    return kAffirmative;
}

int cmd_classify(const Opts& o, std::ostream& out) {
    const auto sys = load_system(o);
    json j;
    bool yes = false;
    if (!o.steps.empty()) {
        const auto cfg = oracle_config(o);
        std::vector<effect::ConfigStep> steps;
        for (const auto& s : o.steps) steps.push_back(parse_step(s, sys));
        const auto rep = effect::classify_configuration(sys, steps, oracle::Oracle(cfg));
        j = io::to_json(rep);
        j["seed"] = cfg.seed;
        j["prime"] = cfg.prime.p;
        yes = rep.is_sev;
    } else {
        const auto y = build_variety(o, sys);
        const auto rep = effect::classify_alpha_sev(sys, y);
        j = io::to_json(rep);
        j["variety"] = variety_label(y);
        yes = rep.is_sev;
    }
    j["system"] = describe(sys);
    emit(out, o.format, j);
    return yes ? kAffirmative : kNegative;
}

int cmd_h1check(const Opts& o, std::ostream& out) {
    const auto sys = load_system(o);
    const auto cfg = oracle_config(o);
    const auto y = build_variety(o, sys);
    const auto rep = effect::h1_sev_check(sys, y, oracle::Oracle(cfg));
    json j = io::to_json(rep);
    j["system"] = describe(sys);
    j["variety"] = variety_label(y);
    j["seed"] = cfg.seed;
    j["prime"] = cfg.prime.p;
    emit(out, o.format, j);
    return rep.cohomologically_special ? kAffirmative : kNegative;
}

int cmd_oracle(const Opts& o, std::ostream& out) {
    const auto sys = load_system(o);
    const auto cfg = oracle_config(o);
    const auto schemes = parse_lines(o.lines);
    json j;
    if (o.cross) {
        const auto cc = oracle::cross_check(sys, cfg, schemes);
        j = io::to_json(cc.first);
        j["second"] = io::to_json(cc.second);
        if (cc.third) j["third"] = io::to_json(*cc.third);
        j["agreed"] = cc.agreed;
        j["h0"] = cc.h0;
    } else {
        j = io::to_json(oracle::h0_oracle(sys, cfg, schemes));
    }
    j["system"] = describe(sys);
    j["virtual_dim"] = io::int_json(virtual_dim(sys));
    emit(out, o.format, j);
    return kAffirmative;
}

int cmd_scan(const Opts& o, std::ostream& out) {
    const search::ScanBounds b;
    auto pick = [](long v, long dflt) { return v >= 0 ? v : dflt; };
    std::vector<search::ScanRecord> rows;
    json extra = json::array();
    if (o.scan_kind == "hypersurfaces") {
        rows = search::scan_hypersurfaces(pick(o.n_max, b.hyp_n), pick(o.e_max, b.hyp_e), pick(o.d_max, b.hyp_d));
    } else if (o.scan_kind == "rnc") {
        rows = search::scan_rnc(pick(o.d_max, b.rnc_d), pick(o.n_max, b.rnc_n));
    } else if (o.scan_kind == "curves") {
        auto cs = search::scan_rational_curves_p3(pick(o.d_max, b.curve_d), pick(o.e_max, b.curve_e));
        rows = cs.accepted;
        for (const auto& r : cs.excluded) extra.push_back(io::to_json(r));
    } else if (o.scan_kind == "products") {
        const long n = o.t == 2 ? b.t2_n : (o.t == 3 ? b.t3_n : b.t4_n);
        const long e = o.t == 2 ? b.t2_e : (o.t == 3 ? b.t3_e : b.t4_e);
        const long d = o.t == 2 ? b.t2_d : (o.t == 3 ? b.t3_d : b.t4_d);
        rows = search::scan_product_divisors(o.t, pick(o.n_max, n), pick(o.e_max, e), pick(o.d_max, d));
    } else {
        throw DomainError("scan kind must be hypersurfaces, rnc, curves or products");
    }
    if (o.format == "csv") {
        out << search::render_csv(rows);
    } else if (o.format == "md") {
        out << search::render_md(rows);
    } else {
        json j = {{"kind", o.scan_kind}, {"rows", json::array()}};
        for (const auto& r : rows) j["rows"].push_back(io::to_json(r));
        if (!extra.empty()) j["excluded"] = extra;
        out << j.dump(2) << "\n";
    }
    return kAffirmative;
}

int cmd_verify(const Opts& o, std::ostream& out) {
    json j = {{"suite", o.suite}};
    json checks = json::array();
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    };
    const bool cross = !o.no_cross;
    if (o.suite == "ah") {
        const auto cfg = oracle_config(o);
        const auto rep = search::verify_ah(cfg, cross);
        add("special_set_equals_list", rep.ok(),
            std::to_string(rep.systems) + " systems, " + std::to_string(rep.special.size()) + " special" +
                (rep.ok() ? "" : "; " + rep.mismatches.front()));
        for (const auto& r : rep.special)
            add(describe(r.system), r.listed, "h0=" + std::to_string(r.h0) + " nu=" + r.nu.get_str());
        if (cross) add("two_prime_agreement", rep.disagreements.empty(), std::to_string(rep.disagreements.size()) + " disagreements");
        j["seed"] = cfg.seed;
        j["prime"] = cfg.prime.p;
    } else if (o.suite == "cgg") {
        const auto cfg = oracle_config(o);
        const auto rep = search::verify_cgg({}, cfg, cross);
        add("special_set_equals_list", rep.ok(),
            std::to_string(rep.systems) + " systems, " + std::to_string(rep.special.size()) + " special" +
                (rep.ok() ? "" : "; " + rep.mismatches.front()));
        json notes = json::array();
        for (const auto& r : rep.special) {
            add(describe(r.system), r.expected && r.witness_ok, "h0=" + std::to_string(r.h0) + "; witness " + r.witness);
            for (const auto& c : r.checks)
                if (c.name == "configuration_Y1_Y2") notes.push_back(describe(r.system) + ": " + c.detail);
        }
        if (cross) add("two_prime_agreement", rep.disagreements.empty(), std::to_string(rep.disagreements.size()) + " disagreements");
        j["notes"] = notes;
        j["seed"] = cfg.seed;
        j["prime"] = cfg.prime.p;
    } else if (o.suite == "paper-tables") {
        for (const auto& c : search::verify_paper_tables()) add(c.name, c.pass, c.detail);
    } else if (o.suite == "lemmas") {
        for (const auto& c : search::verify_lemmas()) add(c.name, c.pass, c.detail);
    } else {
        throw DomainError("verify suite must be ah, paper-tables, cgg or lemmas");
    }
    j["checks"] = checks;
    j["pass"] = all_pass(checks);
    emit_checks(out, o.format, j);
    return all_pass(checks) ? kAffirmative : kNegative;
}

void add_system_opts(CLI::App* c, Opts& o) {
    c->add_option("--system", o.system, "shorthand (P3:d=9:6,4x8) or inline JSON spec");
    c->add_option("--spec-file", o.spec_file, "JSON spec file");
}

void add_oracle_opts(CLI::App* c, Opts& o) {
    c->add_option("--seed", o.seed_text, "oracle seed (default: SEV_SEED or built-in)");
    c->add_option("--prime", o.prime, "oracle prime");
    c->add_option("--trials", o.trials, "oracle trials");
}

void add_variety_opts(CLI::App* c, Opts& o) {
    c->add_option("--variety", o.variety, "hyperplane|quadric|hypersurface|linear|rnc|curve|line");
    c->add_option("--e", o.e_list, "hypersurface multidegree, e.g. 2 or 1,1");
    c->add_option("--c", o.c_list, "point groups on Y with multiplicity, e.g. 0:1,1:1 (default: all, 1)");
    c->add_option("--s", o.s, "linear subspace dimension");
    c->add_option("--through", o.through_first, "points on the linear subspace");
    c->add_option("--curve-degree", o.curve_degree, "degree of the rational curve in P3");
    c->add_option("--line", o.line, "line through points p,q");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{"special linear systems toolkit", "sevtool"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "json|csv|md")->check(CLI::IsMember({"json", "csv", "md"}));

    auto* dim = app.add_subcommand("dim", "virtual and expected dimension");
    add_system_opts(dim, o);

    auto* cls = app.add_subcommand("classify", "alpha-special effect classification");
    add_system_opts(cls, o);
    add_variety_opts(cls, o);
    add_oracle_opts(cls, o);
    cls->add_option("--step", o.steps, "configuration step line:p,q:alpha or hyp:e:alpha (repeatable)");

    auto* h1 = app.add_subcommand("h1check", "h1-special effect conditions");
    add_system_opts(h1, o);
    add_variety_opts(h1, o);
    add_oracle_opts(h1, o);

    auto* orc = app.add_subcommand("oracle", "interpolation-rank h0/h1");
    add_system_opts(orc, o);
    add_oracle_opts(orc, o);
    orc->add_option("--line-scheme", o.lines, "vanish to order alpha on a line: p,q:alpha (repeatable)");
    orc->add_flag("--cross", o.cross, "repeat with a second prime and seed");

    auto* scan = app.add_subcommand("scan", "classification scans");
    scan->add_option("kind", o.scan_kind, "hypersurfaces|rnc|curves|products")->required();
    scan->add_option("--t", o.t, "number of factors for products");
    scan->add_option("--n-max", o.n_max);
    scan->add_option("--e-max", o.e_max);
    scan->add_option("--d-max", o.d_max);

    auto* ver = app.add_subcommand("verify", "acceptance suites");
    ver->add_option("suite", o.suite, "ah|paper-tables|cgg|lemmas")->required();
    add_oracle_opts(ver, o);
    ver->add_flag("--no-cross", o.no_cross, "skip the second-prime pass");

    for (auto* sub : {dim, cls, h1, orc, scan, ver})
        sub->add_option("--format", o.format, "json|csv|md")->check(CLI::IsMember({"json", "csv", "md"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kAffirmative;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (dim->parsed()) return cmd_dim(o, out);
        if (cls->parsed()) return cmd_classify(o, out);
        if (h1->parsed()) return cmd_h1check(o, out);
        if (orc->parsed()) return cmd_oracle(o, out);
        if (scan->parsed()) return cmd_scan(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const OracleError& e) {
        err << "oracle failure: " << e.what() << "\n";
        return kOracleFailure;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const io::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
    err << "error: no subcommand\n";
    return kInputError;
}

}  // namespace sev::cli
