#include "flagcoh/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "flagcoh/errors.hpp"

namespace flagcoh {

using nlohmann::json;

namespace {

Rational json_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  throw InputError(field + ": expected a rational as \"p/q\" string or integer");
}

int json_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw InputError(field + ": expected an integer");
  return v.get<int>();
}

IntVector json_int_vector(const json& v, const std::string& field) {
  if (!v.is_array()) throw InputError(field + ": expected an array of integers");
  IntVector out;
  for (const auto& x : v) out.push_back(json_int(x, field));
  return out;
}

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": invalid JSON (" + e.what() + ")");
  }
}

MultiplicityTable multiplicities_from(const RootSystem& rs, const json& j) {
  if (!j.is_object()) throw InputError("multiplicities: expected an object");
  if (j.contains("uniform")) {
    if (j.contains("orbits")) throw InputError("multiplicities: give either \"uniform\" or \"orbits\"");
    return MultiplicityTable::uniform(rs, json_int(j.at("uniform"), "multiplicities.uniform"));
  }
  if (!j.contains("orbits") || !j.at("orbits").is_array())
    throw InputError("multiplicities: expected \"uniform\" or an \"orbits\" array");
  std::vector<std::pair<IntVector, int>> entries;
  for (const auto& e : j.at("orbits")) {
    if (!e.is_object() || !e.contains("root") || !e.contains("m"))
      throw InputError("multiplicities.orbits: each entry needs \"root\" and \"m\"");
    entries.emplace_back(json_int_vector(e.at("root"), "multiplicities.orbits.root"),
                         json_int(e.at("m"), "multiplicities.orbits.m"));
  }
  return MultiplicityTable::from_orbits(rs, entries);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CustomSystem parse_custom_system(std::string_view json_text) {
  const json j = parse_json(json_text, "custom system");
  if (!j.is_object()) throw InputError("custom system: expected a JSON object");
  for (const char* key : {"rank", "gram", "positive_roots"})
    if (!j.contains(key)) throw InputError(std::string(key) + ": missing");

  const int rank = json_int(j.at("rank"), "rank");
  if (rank < 1) throw InputError("rank: must be positive");
  const json& g = j.at("gram");
  if (!g.is_array() || static_cast<int>(g.size()) != rank) throw InputError("gram: expected rank rows");
  RationalMatrix gram;
  for (const auto& row : g) {
    if (!row.is_array() || static_cast<int>(row.size()) != rank) throw InputError("gram: expected rank columns per row");
    RationalVector r;
    for (const auto& x : row) r.push_back(json_rational(x, "gram"));
    gram.push_back(std::move(r));
  }
  const json& pr = j.at("positive_roots");
  if (!pr.is_array()) throw InputError("positive_roots: expected an array");
  std::vector<IntVector> roots;
  for (const auto& r : pr) roots.push_back(json_int_vector(r, "positive_roots"));

  std::optional<std::vector<int>> degrees;
  if (j.contains("degrees")) degrees = json_int_vector(j.at("degrees"), "degrees");

  CustomSystem out{RootSystem::from_data(std::move(gram), std::move(roots), std::move(degrees)), std::nullopt};
  if (j.contains("multiplicities")) out.multiplicities = multiplicities_from(out.roots, j.at("multiplicities"));
  return out;
}

CustomSystem load_custom_system(const std::filesystem::path& path) { return parse_custom_system(read_file(path)); }

MultiplicityTable parse_multiplicities(const RootSystem& rs, std::string_view json_text) {
  return multiplicities_from(rs, parse_json(json_text, "multiplicity table"));
}

MultiplicityTable load_multiplicities(const RootSystem& rs, const std::filesystem::path& path) {
  return parse_multiplicities(rs, read_file(path));
}

}  // namespace flagcoh
