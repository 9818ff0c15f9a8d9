#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "flagcoh/rootsys.hpp"

namespace flagcoh {

struct CustomSystem {
  RootSystem roots;
  std::optional<MultiplicityTable> multiplicities;
};

// {"rank": int, "gram": [[rat]], "positive_roots": [[int]],
//  "multiplicities": {...}, "degrees": [int]}   (last two optional)
// Rationals are "p/q" strings or JSON integers.
CustomSystem parse_custom_system(std::string_view json_text);
CustomSystem load_custom_system(const std::filesystem::path& path);

// {"uniform": m} or {"orbits": [{"root": [int], "m": int}, ...]}
MultiplicityTable parse_multiplicities(const RootSystem& rs, std::string_view json_text);
MultiplicityTable load_multiplicities(const RootSystem& rs, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace flagcoh
