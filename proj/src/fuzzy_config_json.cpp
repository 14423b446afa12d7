#include "contrast/fuzzy_config_json.hpp"

#include <json.hpp>
#include <stdexcept>

#include "contrast/pgm.hpp"

namespace contrast {

namespace {

using nlohmann::json;

std::array<TriangularMf, 3> parse_sets(const json& doc, const char* key) {
  if (!doc.contains(key)) throw std::invalid_argument(std::string("fuzzy config: missing ") + key);
  const json& arr = doc.at(key);
  if (!arr.is_array() || arr.size() != 3)
    throw std::invalid_argument(std::string("fuzzy config: ") + key + " must hold 3 sets");
  std::array<TriangularMf, 3> sets{};
  for (std::size_t i = 0; i < 3; ++i) {
    const json& s = arr[i];
    for (const char* field : {"a", "b", "c"}) {
      if (!s.is_object() || !s.contains(field) || !s.at(field).is_number())
        throw std::invalid_argument(std::string("fuzzy config: ") + key + "[" +
                                    std::to_string(i) + "]." + field + " must be a number");
    }
    sets[i] = {s.at("a").get<double>(), s.at("b").get<double>(), s.at("c").get<double>()};
  }
  return sets;
}

json sets_to_json(const std::array<TriangularMf, 3>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back({{"a", s.a}, {"b", s.b}, {"c", s.c}});
  return arr;
}

}  // namespace

FuzzyConfig fuzzy_config_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("fuzzy config: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("fuzzy config: document must be an object");

  FuzzyConfig cfg;
  cfg.input_sets = parse_sets(doc, "input_sets");
  cfg.output_sets = parse_sets(doc, "output_sets");
  if (doc.contains("resolution")) {
    if (!doc.at("resolution").is_number_integer())
      throw std::invalid_argument("fuzzy config: resolution must be an integer");
    cfg.resolution = doc.at("resolution").get<int>();
  }
  validate(cfg);
  return cfg;
}

std::string fuzzy_config_to_json(const FuzzyConfig& cfg) {
  json doc = {{"input_sets", sets_to_json(cfg.input_sets)},
              {"output_sets", sets_to_json(cfg.output_sets)},
              {"resolution", cfg.resolution}};
  return doc.dump(2);
}

FuzzyConfig load_fuzzy_config(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return fuzzy_config_from_json(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                                 bytes.size()));
}

}  // namespace contrast
