#pragma once

#include "sev/effect_varieties.hpp"
#include "sev/oracle.hpp"
#include "sev/search.hpp"
#include "sev/systems.hpp"

#include <json.hpp>

#include <string>

namespace sev::io {

using json = nlohmann::json;

// Integers that fit in 64 bits become numbers, larger ones strings.
json int_json(const Int& v);

LinearSystem system_from_json(const json& j);
json system_to_json(const LinearSystem& sys);
LinearSystem parse_system_json(const std::string& text);

// "P3:d=9:6,4x8", "P1xP1:d=2,2:2x3"; the points section may be empty or absent.
LinearSystem parse_shorthand(const std::string& text);

json to_json(const DimReport& r);
json to_json(const oracle::OracleResult& r);
json to_json(const effect::SevReport& r);
json to_json(const effect::H1Report& r);
json to_json(const search::ScanRecord& r);
json to_json(const std::vector<effect::Check>& checks);

}  // namespace sev::io
