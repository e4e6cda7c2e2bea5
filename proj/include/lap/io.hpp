#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lap/adams.hpp"
#include "lap/moeglin.hpp"
#include "lap/operators.hpp"
#include "lap/param.hpp"
#include "lap/xu.hpp"

namespace lap {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(HalfInt h);
HalfInt halfint_from_json(const json& j);

json to_json(const ArthurParameter& p);
// Parses and validates; chi_V and chi_W are added when referenced but not declared.
ArthurParameter parameter_from_json(const json& j);

json to_json(const MoeglinDatum& d);
MoeglinDatum datum_from_json(const json& j);

json to_json(const Verdict& v, bool with_trace);
json to_json(const AdamsReport& r);
json to_json(const PsiGraph& g);
json to_json(const Decomposition& d);
json to_json(const Block& b);

// Payloads shared by the command line and the Python module.
json packet_data_json(const ArthurParameter& p, bool nonzero_only);
json raising_json(const ArthurParameter& p);
json obstructions_json(const ArthurParameter& p);
json to_json(const MonotonicityReport& r);
json conservation_json(int known, int n);

json read_json_file(const std::string& path);
std::string read_text(const std::string& path);

// Optional "name" field of parameter and datum files.
std::string name_of(const json& j);

std::vector<std::pair<MoeglinDatum, MoeglinDatum>> pairs_from_json(const json& j);

}  // namespace lap
