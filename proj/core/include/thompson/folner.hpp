#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/marginal.hpp"

namespace thompson {

using Rational = mpq_class;

/// Always "p/q" in lowest terms, e.g. "3/1".
std::string to_string(const Rational& q);

/// Accepts "p/q" or an integer. Throws ParseError.
Rational parse_rational(std::string_view text);

/// A finitely supported map from points to positive rationals. Absent points
/// weigh 0, and zero weights are never stored.
template <class Point>
class WeightedSet {
 public:
  WeightedSet() = default;

  /// Adds w to the weight of p. Throws InvariantViolation, leaving the set
  /// unchanged, if the result is negative.
  void add(const Point& p, Rational w) {
    w.canonicalize();
    if (w == 0) return;
    auto it = weights_.find(p);
    Rational next = it == weights_.end() ? w : Rational(it->second + w);
    if (next < 0) throw InvariantViolation("negative weight");
    if (next == 0) {
      weights_.erase(it);
    } else if (it == weights_.end()) {
      weights_.emplace(p, std::move(next));
    } else {
      it->second = std::move(next);
    }
  }

  Rational operator[](const Point& p) const {
    auto it = weights_.find(p);
    return it == weights_.end() ? Rational(0) : it->second;
  }

  bool contains(const Point& p) const { return weights_.count(p) > 0; }

  const std::map<Point, Rational>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  Rational total() const {
    Rational sum = 0;
    for (const auto& [p, w] : weights_) sum += w;
    return sum;
  }

  WeightedSet scaled(const Rational& c) const {
    WeightedSet out;
    for (const auto& [p, w] : weights_) out.add(p, w * c);
    return out;
  }

  friend bool operator==(const WeightedSet&, const WeightedSet&) = default;

 private:
  std::map<Point, Rational> weights_;
};

template <class Point, class Range>
WeightedSet<Point> indicator(const Range& points) {
  WeightedSet<Point> out;
  for (const auto& p : points) {
    if (!out.contains(p)) out.add(p, 1);
  }
  return out;
}

/// A partial right action of F on Point with a finite generating set.
template <class Point>
struct PartialActionSystem {
  std::vector<Element> generators;
  ActFn<Point> act;
};

inline PartialActionSystem<Tree> tree_system() { return {standard_generators(), act_on_tree}; }
inline PartialActionSystem<Element> element_system() { return {standard_generators(), act_on_element}; }

namespace detail {

template <class Point>
std::set<Point> neighbourhood(const WeightedSet<Point>& mu, const PartialActionSystem<Point>& sys) {
  std::set<Point> out;
  for (const auto& [s, w] : mu.weights()) {
    out.insert(s);
    for (const auto& gamma : sys.generators) {
      if (auto t = sys.act(s, gamma)) out.insert(*t);
      if (auto t = sys.act(s, invert(gamma))) out.insert(*t);
    }
  }
  return out;
}

inline Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? Rational(a - b) : Rational(b - a); }

}  // namespace detail

/// Σ_γ Σ_s |μ(s·γ) − μ(s)|, summed over support ∪ support·Γ ∪ support·Γ^-1,
/// outside of which every term vanishes.
template <class Point>
Rational boundary_sum(const WeightedSet<Point>& mu, const PartialActionSystem<Point>& sys) {
  Rational sum = 0;
  for (const auto& s : detail::neighbourhood(mu, sys)) {
    const Rational here = mu[s];
    for (const auto& gamma : sys.generators) {
      auto t = sys.act(s, gamma);
      sum += detail::abs_diff(t ? mu[*t] : Rational(0), here);
    }
  }
  return sum;
}

/// The same sum organised by edges: terms starting in the support, plus terms
/// s·γ = t entering the support from outside it.
template <class Point>
Rational boundary_sum_by_edges(const WeightedSet<Point>& mu, const PartialActionSystem<Point>& sys) {
  Rational sum = 0;
  for (const auto& [s, w] : mu.weights()) {
    for (const auto& gamma : sys.generators) {
      auto t = sys.act(s, gamma);
      sum += detail::abs_diff(t ? mu[*t] : Rational(0), w);
      auto source = sys.act(s, invert(gamma));
      if (source && !mu.contains(*source)) sum += w;
    }
  }
  return sum;
}

/// boundary_sum / μ(S). Throws ZeroMass.
template <class Point>
Rational folner_constant(const WeightedSet<Point>& mu, const PartialActionSystem<Point>& sys) {
  const Rational mass = mu.total();
  if (mass == 0) throw ZeroMass("weighted set has no mass");
  return boundary_sum(mu, sys) / mass;
}

/// ν(t) = Σ_{h(s)=t} μ(s). Throws PartialMap when h is undefined on the support.
template <class Point, class Target>
WeightedSet<Target> pushforward(const WeightedSet<Point>& mu,
                                const std::function<std::optional<Target>(const Point&)>& h) {
  WeightedSet<Target> out;
  for (const auto& [s, w] : mu.weights()) {
    auto t = h(s);
    if (!t) throw PartialMap("map undefined on a support point");
    out.add(*t, w);
  }
  return out;
}

/// Whether h(s·γ) = h(s)·γ, with both sides defined, for every γ ∈ Γ and
/// every s with μ(s) + μ(s·γ) > 0. Returns the number of failing pairs.
template <class Point, class Target>
std::size_t equivariance_failures(const WeightedSet<Point>& mu,
                                  const std::function<std::optional<Target>(const Point&)>& h,
                                  const PartialActionSystem<Point>& source,
                                  const PartialActionSystem<Target>& target) {
  std::size_t failures = 0;
  for (const auto& s : detail::neighbourhood(mu, source)) {
    for (std::size_t i = 0; i < source.generators.size(); ++i) {
      auto moved = source.act(s, source.generators[i]);
      if (mu[s] + (moved ? mu[*moved] : Rational(0)) == 0) continue;
      if (!moved) {
        ++failures;
        continue;
      }
      auto hs = h(s);
      auto hm = h(*moved);
      auto image = hs ? target.act(*hs, target.generators[i]) : std::nullopt;
      if (!hm || !image || *hm != *image) ++failures;
    }
  }
  return failures;
}

template <class Point>
struct Restriction {
  WeightedSet<Point> restricted;
  Rational epsilon;  // constant of the input
  Rational delta;    // 1 − ν(S)/μ(S)
  Rational bound;    // (ε + 2|Γ|δ)/(1 − δ)
};

/// μ·1_A with the guaranteed constant. Throws ZeroMass.
template <class Point>
Restriction<Point> restrict(const WeightedSet<Point>& mu, const std::function<bool(const Point&)>& A,
                            const PartialActionSystem<Point>& sys) {
  Restriction<Point> out;
  for (const auto& [s, w] : mu.weights()) {
    if (A(s)) out.restricted.add(s, w);
  }
  const Rational kept = out.restricted.total();
  if (kept == 0) throw ZeroMass("restriction removed all mass");
  out.epsilon = folner_constant(mu, sys);
  out.delta = 1 - kept / mu.total();
  out.bound = (out.epsilon + 2 * Rational(static_cast<long>(sys.generators.size())) * out.delta) / (1 - out.delta);
  return out;
}

/// Restrictions of μ to the Γ-connected components of its support, ordered
/// by their least point.
template <class Point>
std::vector<WeightedSet<Point>> components(const WeightedSet<Point>& mu, const PartialActionSystem<Point>& sys) {
  std::vector<WeightedSet<Point>> out;
  std::set<Point> seen;
  for (const auto& [start, w0] : mu.weights()) {
    if (seen.count(start)) continue;
    WeightedSet<Point> part;
    std::queue<Point> todo;
    todo.push(start);
    seen.insert(start);
    while (!todo.empty()) {
      Point s = todo.front();
      todo.pop();
      part.add(s, mu[s]);
      for (const auto& gamma : sys.generators) {
        for (const auto& step : {gamma, invert(gamma)}) {
          auto t = sys.act(s, step);
          if (t && mu.contains(*t) && seen.insert(*t).second) todo.push(*t);
        }
      }
    }
    out.push_back(std::move(part));
  }
  return out;
}

/// Σ_s |μ(s·g) − μ(s)|.
template <class Point>
Rational displacement_sum(const WeightedSet<Point>& mu, const Element& g, const PartialActionSystem<Point>& sys) {
  std::set<Point> domain;
  const Element g_inv = invert(g);
  for (const auto& [s, w] : mu.weights()) {
    domain.insert(s);
    if (auto t = sys.act(s, g_inv)) domain.insert(*t);
  }
  Rational sum = 0;
  for (const auto& s : domain) {
    auto t = sys.act(s, g);
    sum += detail::abs_diff(t ? mu[*t] : Rational(0), mu[s]);
  }
  return sum;
}

struct DisplacementCheck {
  Rational displacement;
  Rational epsilon;
  Rational mass;
  LengthBound d;
  bool holds = false;  // displacement ≤ ε d μ(S)
};

template <class Point>
DisplacementCheck displacement_check(const WeightedSet<Point>& mu, const Element& g,
                                     const PartialActionSystem<Point>& sys,
                                     std::size_t cap = kDefaultWordLengthCap) {
  DisplacementCheck out{displacement_sum(mu, g, sys), folner_constant(mu, sys), mu.total(),
                        word_length_bound(g, cap)};
  out.holds = out.displacement <= out.epsilon * Rational(static_cast<long>(out.d.value)) * out.mass;
  return out;
}

struct MassBoundReport {
  bool precondition = false;  // g marginalizes E off the complement of the support
  Rational mass_of_E;
  Rational epsilon;
  Rational mass;
  LengthBound d;
  bool holds = false;  // μ(E) ≤ d ε μ(S)
};

/// Checks μ(E) ≤ d_g ε μ(S) together with its hypothesis. Within the support
/// an orbit either leaves or repeats after |support| steps, so following
/// each orbit that far decides the hypothesis exactly.
template <class Point>
MassBoundReport marginal_mass_bound_check(const WeightedSet<Point>& mu, const std::function<bool(const Point&)>& E,
                                          const Element& g, const PartialActionSystem<Point>& sys,
                                          std::size_t cap = kDefaultWordLengthCap) {
  MassBoundReport out;
  out.precondition = true;
  out.mass_of_E = 0;
  for (const auto& [x, w] : mu.weights()) {
    if (!E(x)) continue;
    out.mass_of_E += w;
    std::optional<Point> current = x;
    for (std::size_t k = 1; k <= mu.size() + 1 && out.precondition; ++k) {
      if (!current || !mu.contains(*current)) break;
      current = sys.act(*current, g);
      if (current && E(*current)) out.precondition = false;
    }
  }
  out.epsilon = folner_constant(mu, sys);
  out.mass = mu.total();
  out.d = word_length_bound(g, cap);
  out.holds = out.mass_of_E <= Rational(static_cast<long>(out.d.value)) * out.epsilon * out.mass;
  return out;
}

}  // namespace thompson
