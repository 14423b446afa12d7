#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "contrast/fuzzy.hpp"

namespace contrast {

// Document layout:
//   {"input_sets":  [{"a":..,"b":..,"c":..}, x3],   // Dark, Gray, Bright
//    "output_sets": [{"a":..,"b":..,"c":..}, x3],   // Darker, Mid, Brighter
//    "resolution":  256}                            // optional, default 256
// Parse failures and invalid sets throw std::invalid_argument.
FuzzyConfig fuzzy_config_from_json(std::string_view text);
std::string fuzzy_config_to_json(const FuzzyConfig& cfg);
FuzzyConfig load_fuzzy_config(const std::filesystem::path& path);

}  // namespace contrast
