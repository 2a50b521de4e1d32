#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "thompson/diagram.hpp"

namespace thompson {

/// Γ = {x0, x1, x0^-1, x1^-1}, in that order.
const std::vector<Element>& standard_generators();

inline constexpr std::size_t kDefaultBallCap = 8;
inline constexpr std::size_t kDefaultWordLengthCap = 16;

/// Every element within Γ-distance r of the identity, in breadth-first
/// discovery order. Throws ResourceLimit when r > cap.
std::vector<Element> ball(std::size_t r, std::size_t cap = kDefaultBallCap);

/// Exact word length with respect to Γ up to a cap. Lengths up to half the
/// cap come from a stored ball; longer ones meet in the middle on its sphere.
class WordMetric {
 public:
  explicit WordMetric(std::size_t cap = kDefaultWordLengthCap);

  std::size_t cap() const { return cap_; }

  /// d_g, or nullopt when d_g > cap.
  std::optional<std::size_t> length(const Element& g) const;

 private:
  std::size_t cap_;
  std::size_t radius_;
  std::unordered_map<Element, std::size_t> distance_;
  std::vector<Element> sphere_inverses_;
};

/// Shared metric for the given cap, built on first use.
const WordMetric& word_metric(std::size_t cap = kDefaultWordLengthCap);

inline std::optional<std::size_t> word_length(const Element& g, std::size_t cap = kDefaultWordLengthCap) {
  return word_metric(cap).length(g);
}

struct LengthBound {
  std::size_t value;
  bool exact;
};

/// d_g when it is at most `cap`, otherwise the length of generator_word(g),
/// which is an upper bound.
LengthBound word_length_bound(const Element& g, std::size_t cap = kDefaultWordLengthCap);

}  // namespace thompson
