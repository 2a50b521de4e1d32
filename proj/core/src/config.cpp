#include "thompson/config.hpp"

#include <fstream>
#include <json.hpp>

#include "thompson/errors.hpp"

namespace thompson {

VerificationConfig VerificationConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad config file '" + path + "': " + e.what());
  }
  VerificationConfig c;
  auto read = [&](const char* key, std::size_t& field) {
    if (j.contains(key)) field = j.at(key).get<std::size_t>();
  };
  try {
    read("leaf_bound", c.leaf_bound);
    read("power_bound", c.power_bound);
    read("element_leaf_bound", c.element_leaf_bound);
    read("oracle_leaf_bound", c.oracle_leaf_bound);
    read("word_length_cap", c.word_length_cap);
    read("ball_cap", c.ball_cap);
    if (j.contains("deep")) {
      const auto& d = j.at("deep");
      if (d.contains("leaf_bound")) c.deep_leaf_bound = d.at("leaf_bound").get<std::size_t>();
      if (d.contains("power_bound")) c.deep_power_bound = d.at("power_bound").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad config value in '" + path + "': " + e.what());
  }
  return c;
}

VerificationConfig VerificationConfig::deep() const {
  VerificationConfig c = *this;
  c.leaf_bound = deep_leaf_bound;
  c.power_bound = deep_power_bound;
  return c;
}

}  // namespace thompson
