#include "sev/json_io.hpp"

#include "sev/errors.hpp"

#include <sstream>

namespace sev::io {

namespace {

long as_long(const json& j, const char* what) {
    if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::vector<long> long_list(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
    std::vector<long> out;
    for (const auto& v : j) out.push_back(as_long(v, what));
    return out;
}

json named_values(const std::vector<effect::NamedValue>& vals) {
    json o = json::object();
    for (const auto& v : vals) o[v.name] = int_json(v.value);
    return o;
}

long parse_long(const std::string& s, const std::string& ctx) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw DomainError("bad integer '" + s + "' in " + ctx);
    }
    if (used != s.size()) throw DomainError("bad integer '" + s + "' in " + ctx);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

LinearSystem system_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("system spec must be a JSON object");
    for (const char* key : {"space", "degree", "points"})
        if (!j.contains(key)) throw DomainError(std::string("system spec is missing '") + key + "'");
    LinearSystem sys;
    sys.space.factors = long_list(j.at("space"), "space");
    sys.degree = long_list(j.at("degree"), "degree");
    if (!j.at("points").is_array()) throw DomainError("points must be an array");
    for (const auto& p : j.at("points")) {
        if (!p.is_object() || !p.contains("mult") || !p.contains("count"))
            throw DomainError("each point group needs 'mult' and 'count'");
        sys.points.push_back({as_long(p.at("mult"), "mult"), as_long(p.at("count"), "count")});
    }
    validate(sys);
    return sys;
}

json system_to_json(const LinearSystem& sys) {
    json pts = json::array();
    for (const auto& g : sys.points) pts.push_back({{"mult", g.multiplicity}, {"count", g.count}});
    return {{"space", sys.space.factors}, {"degree", sys.degree}, {"points", pts}};
}

LinearSystem parse_system_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    return system_from_json(j);
}

LinearSystem parse_shorthand(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw DomainError("shorthand must look like P3:d=9:6,4x8");
    LinearSystem sys;
    for (const auto& f : split(parts[0], 'x')) {
        if (f.size() < 2 || f[0] != 'P') throw DomainError("bad space '" + parts[0] + "'");
        sys.space.factors.push_back(parse_long(f.substr(1), "space"));
    }
    if (parts[1].rfind("d=", 0) != 0) throw DomainError("degree section must start with d=");
    for (const auto& d : split(parts[1].substr(2), ',')) sys.degree.push_back(parse_long(d, "degree"));
    if (parts.size() == 3 && !parts[2].empty()) {
        for (const auto& g : split(parts[2], ',')) {
            const auto mc = split(g, 'x');
            if (mc.empty() || mc.size() > 2) throw DomainError("bad point group '" + g + "'");
            sys.points.push_back({parse_long(mc[0], "points"), mc.size() == 2 ? parse_long(mc[1], "points") : 1});
        }
    }
    validate(sys);
    return sys;
}

json to_json(const DimReport& r) {
    return {{"monomials", int_json(r.monomials)},
            {"conditions", int_json(r.conditions)},
            {"virtual_dim", int_json(r.virtual_dim)},
            {"expected_dim", int_json(r.expected_dim)}};
}

json to_json(const oracle::OracleResult& r) {
    json j = {{"h0", r.h0},           {"rank", r.rank},   {"rows", r.rows},
              {"cols", r.cols},       {"special", r.special}, {"prime", r.prime},
              {"seed", r.seed},       {"trials", r.trials_used}};
    j["h1"] = r.h1 ? json(*r.h1) : json(nullptr);
    return j;
}

json to_json(const std::vector<effect::Check>& checks) {
    json a = json::array();
    for (const auto& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return a;
}

json to_json(const effect::SevReport& r) {
    return {{"holds_property", r.holds_property},
            {"is_sev", r.is_sev},
            {"alpha_max", r.alpha_max},
            {"nu_system", int_json(r.nu_system)},
            {"nu_residual", int_json(r.nu_residual)},
            {"checks", to_json(r.checks)},
            {"values", named_values(r.values)}};
}

json to_json(const effect::H1Report& r) {
    return {{"cond_a", r.cond_a},
            {"cond_b", r.cond_b},
            {"cond_c", r.cond_c},
            {"h2_handled", r.h2_handled},
            {"cohomologically_special", r.cohomologically_special},
            {"values", named_values(r.values)},
            {"notes", r.notes}};
}

json to_json(const search::ScanRecord& r) {
    return {{"space", space_label({r.factors})},
            {"multidegree", r.degree},
            {"variety_degree", r.variety_degree},
            {"h_lo", r.h_lo},
            {"h_hi", r.h_hi},
            {"note", r.note},
            {"numbers", named_values(r.numbers)}};
}

}  // namespace sev::io
