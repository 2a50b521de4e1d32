#pragma once

#include <cstddef>
#include <string>

namespace thompson {

/// Bounds for the exhaustive and randomized checks.
struct VerificationConfig {
  std::size_t leaf_bound = 12;
  std::size_t power_bound = 3;
  std::size_t deep_leaf_bound = 14;
  std::size_t deep_power_bound = 5;
  std::size_t element_leaf_bound = 7;
  std::size_t oracle_leaf_bound = 14;
  std::size_t word_length_cap = 16;
  std::size_t ball_cap = 8;

  /// Reads a JSON object; absent keys keep their defaults. Throws ParseError.
  static VerificationConfig load(const std::string& path);

  /// Same with deep_* copied over leaf_bound/power_bound.
  VerificationConfig deep() const;
};

}  // namespace thompson
