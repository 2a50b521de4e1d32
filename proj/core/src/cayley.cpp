#include "thompson/cayley.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace thompson {

const std::vector<Element>& standard_generators() {
  static const std::vector<Element> gamma{generator(0), generator(1), invert(generator(0)), invert(generator(1))};
  return gamma;
}

namespace {

// Layers of the ball: layers[d] holds the sphere of radius d.
std::vector<std::vector<Element>> spheres(std::size_t r) {
  std::vector<std::vector<Element>> layers{{Element::identity()}};
  std::unordered_set<Element> seen{Element::identity()};
  for (std::size_t d = 0; d < r; ++d) {
    std::vector<Element> next;
    for (const auto& f : layers.back()) {
      for (const auto& gamma : standard_generators()) {
        Element h = multiply(f, gamma);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace

std::vector<Element> ball(std::size_t r, std::size_t cap) {
  if (r > cap) throw ResourceLimit("ball radius " + std::to_string(r) + " above cap " + std::to_string(cap));
  std::vector<Element> out;
  for (auto& layer : spheres(r)) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

WordMetric::WordMetric(std::size_t cap) : cap_(cap), radius_((cap + 1) / 2) {
  auto layers = spheres(radius_);
  for (std::size_t d = 0; d < layers.size(); ++d) {
    for (const auto& f : layers[d]) distance_.emplace(f, d);
  }
  for (const auto& f : layers.back()) sphere_inverses_.push_back(invert(f));
}

std::optional<std::size_t> WordMetric::length(const Element& g) const {
  if (auto it = distance_.find(g); it != distance_.end()) return it->second;
  // Beyond the stored radius every geodesic crosses the outer sphere.
  std::optional<std::size_t> best;
  for (const auto& h_inv : sphere_inverses_) {
    auto it = distance_.find(multiply(h_inv, g));
    if (it == distance_.end()) continue;
    if (!best || radius_ + it->second < *best) best = radius_ + it->second;
  }
  if (best && *best <= cap_) return best;
  return std::nullopt;
}

const WordMetric& word_metric(std::size_t cap) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<WordMetric>> metrics;
  std::lock_guard lock(mutex);
  auto& slot = metrics[cap];
  if (!slot) slot = std::make_unique<WordMetric>(cap);
  return *slot;
}

LengthBound word_length_bound(const Element& g, std::size_t cap) {
  if (auto d = word_length(g, cap)) return {*d, true};
  return {generator_word(g).size(), false};
}

}  // namespace thompson
