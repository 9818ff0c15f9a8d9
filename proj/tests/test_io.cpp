#include <string>

#include "doctest.h"
#include "flagcoh/errors.hpp"
#include "flagcoh/io.hpp"

using namespace flagcoh;

namespace {

std::string data(const char* name) { return std::string(FLAGCOH_DATA_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
  try {
    parse_custom_system(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("custom A2 equals the built-in system") {
  const CustomSystem c = load_custom_system(data("a2.json"));
  const RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  CHECK(c.roots.cartan() == a2.cartan());
  CHECK(c.roots.positive_roots() == a2.positive_roots());
  REQUIRE(c.multiplicities.has_value());
  CHECK(c.multiplicities->uniform_value() == 2);
}

TEST_CASE("rational strings and rescaling") {
  const CustomSystem c = load_custom_system(data("b2_half.json"));
  CHECK(c.roots.cartan() == RootSystem::build(CartanType::parse("B2")).cartan());
  CHECK(c.roots.gram() == RationalMatrix{{2, -1}, {-1, 1}});
  CHECK_FALSE(c.multiplicities.has_value());
}

TEST_CASE("non-reduced data with an orbit table") {
  const CustomSystem c = load_custom_system(data("bc2.json"));
  CHECK_FALSE(c.roots.is_reduced());
  CHECK(c.roots.num_positive() == 4);
  REQUIRE(c.multiplicities.has_value());
  CHECK(c.multiplicities->per_root() == std::vector<int>{2, 3, 3, 0, 2, 0});
  CHECK(c.multiplicities->min_value() == 2);
}

TEST_CASE("rejections name the failing field") {
  CHECK_THROWS_AS(load_custom_system(data("bad_gram.json")), InputError);
  CHECK_THROWS_AS(load_custom_system(data("missing_orbit.json")), InputError);
  CHECK_THROWS_AS(load_custom_system(data("does_not_exist.json")), InputError);
  CHECK(error_of("{\"gram\": [[2]], \"positive_roots\": [[1]]}").find("rank") != std::string::npos);
  CHECK(error_of("{\"rank\": 1, \"positive_roots\": [[1]]}").find("gram") != std::string::npos);
  CHECK(error_of("{\"rank\": 1, \"gram\": [[\"x\"]], \"positive_roots\": [[1]]}").find("gram") != std::string::npos);
  CHECK(error_of("{\"rank\": 1, \"gram\": [[2]], \"positive_roots\": [[1.5]]}").find("positive_roots") !=
        std::string::npos);
  CHECK(error_of("{\"rank\": 2, \"gram\": [[2]], \"positive_roots\": [[1]]}").find("gram") != std::string::npos);
  CHECK(error_of("{\"rank\": 1, \"gram\": [[2]], \"positive_roots\": [[1]], \"degrees\": [3]}").find("degrees") !=
        std::string::npos);
  CHECK(error_of("{not json").find("JSON") != std::string::npos);
  CHECK(error_of("[1, 2]") != "");
}

TEST_CASE("multiplicity tables from JSON") {
  const RootSystem b2 = RootSystem::build(CartanType::parse("B2"));
  const auto t = load_multiplicities(b2, data("b2_table.json"));
  CHECK(t.per_root() == std::vector<int>{2, 4, 4, 2});
  CHECK(parse_multiplicities(b2, "{\"uniform\": 4}").uniform_value() == 4);
  CHECK_THROWS_AS(parse_multiplicities(b2, "{\"uniform\": 0}"), InputError);
  CHECK_THROWS_AS(parse_multiplicities(b2, "{\"uniform\": 2, \"orbits\": []}"), InputError);
  CHECK_THROWS_AS(parse_multiplicities(b2, "{\"orbits\": [{\"root\": [1, 0]}]}"), InputError);
  CHECK_THROWS_AS(parse_multiplicities(b2, "{}"), InputError);
}
