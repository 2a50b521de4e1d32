#pragma once

// Shared helpers for the test binaries: seeded generators and small
// brute-force oracles that deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "thompson/thompson.hpp"

namespace testing_support {

using namespace thompson;

inline BinarySeq seq(const char* text) { return BinarySeq::parse(text); }
inline Tree tree(const char* text) { return parse_tree(text); }
inline Element elem(const char* text) { return reduce(parse_diagram(text)); }
inline Element word(const char* text) { return evaluate_word(parse_word(text)); }

inline Element commutator(const Element& g, const Element& h) {
  return multiply(multiply(invert(g), invert(h)), multiply(g, h));
}

/// Splits uniformly chosen leaves until there are n.
inline Tree random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<BinarySeq> leaves{BinarySeq{}};
  while (leaves.size() < n) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    const std::size_t i = pick(rng);
    const BinarySeq u = leaves[i];
    leaves[i] = u.child(0);
    leaves.push_back(u.child(1));
  }
  return Tree::from_leaves(std::move(leaves));
}

/// A uniformly random word over Γ of the given length.
inline Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 3);
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    const int k = pick(rng);
    w.push_back(Letter::x(static_cast<std::size_t>(k % 2), k < 2 ? 1 : -1));
  }
  return w;
}

inline Element random_element(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return evaluate_word(random_word(rng, len(rng)));
}

/// All words of exactly the given length.
inline std::vector<BinarySeq> words_of_length(std::size_t n) {
  std::vector<BinarySeq> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    BinarySeq w;
    for (std::size_t b = n; b-- > 0;) w.push_back(static_cast<int>((i >> b) & 1u));
    out.push_back(w);
  }
  return out;
}

/// Prefix replacement read straight off a leaf list, by linear scan.
inline std::optional<std::string> naive_apply(const TreeDiagram& d, const std::string& t) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string s = d.domain().leaf(i).empty() ? "" : d.domain().leaf(i).to_string();
    if (t.compare(0, s.size(), s) == 0 && t.size() >= s.size()) {
      const std::string r = d.range().leaf(i).empty() ? "" : d.range().leaf(i).to_string();
      return r + t.substr(s.size());
    }
  }
  return std::nullopt;
}

/// Catalan numbers from the root-split recursion.
inline std::vector<std::uint64_t> tree_counts(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    for (std::size_t i = 1; i < m; ++i) c[m] += c[i] * c[m - i];
  }
  return c;
}

/// Every fixed point reachable by collapsing sibling pairs in any order.
inline void all_reductions(const TreeDiagram& d, std::set<std::string>& out) {
  const auto pairs = d.collapsible_pairs();
  if (pairs.empty()) {
    out.insert(d.to_string());
    return;
  }
  for (auto i : pairs) all_reductions(d.collapse(i), out);
}

/// Grafts a random subtree under a random leaf pair, `steps` times.
inline TreeDiagram random_expansion(std::mt19937_64& rng, const Element& f, std::size_t steps) {
  TreeDiagram d = f.diagram();
  for (std::size_t k = 0; k < steps; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
    const std::size_t i = pick(rng);
    std::vector<BinarySeq> dom(d.domain().leaves().begin(), d.domain().leaves().end());
    std::vector<BinarySeq> ran(d.range().leaves().begin(), d.range().leaves().end());
    const BinarySeq s = dom[i];
    const BinarySeq t = ran[i];
    dom[i] = s.child(0);
    dom.insert(dom.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.child(1));
    ran[i] = t.child(0);
    ran.insert(ran.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.child(1));
    d = TreeDiagram(Tree::from_leaves(dom), Tree::from_leaves(ran));
  }
  return d;
}

/// Grafts a tree with `sizes[i]` leaves below the i-th leaf of U.
inline Tree graft_sized(std::mt19937_64& rng, const Tree& U, const std::vector<std::size_t>& sizes) {
  std::vector<BinarySeq> leaves;
  for (std::size_t i = 0; i < U.size(); ++i) {
    const Tree part = random_tree(rng, sizes[i]);
    for (const auto& s : part.leaves()) leaves.push_back(U.leaf(i).concat(s));
  }
  return Tree::from_leaves(std::move(leaves));
}

/// Small trees that can serve as a nontrivial boundary in the increasing
/// direction: nodes 01 and 10 present, least interior leaf ending in 1,
/// greatest ending in 0.
inline std::vector<Tree> increasing_shapes(std::size_t max_leaves) {
  std::vector<Tree> out;
  for_each_tree_up_to(max_leaves, [&](const Tree& U) {
    if (U.size() < 4 || !U.is_node(BinarySeq::parse("01")) || !U.is_node(BinarySeq::parse("10"))) return;
    if (U.leaf(1).back() != 1 || U.leaf(U.size() - 2).back() != 0) return;
    out.push_back(U);
  });
  return out;
}

/// A tree T whose boundary is nontrivial: a random shape U with subtrees
/// whose sizes double along the interior, mirrored half of the time.
inline Tree doubling_tree(std::mt19937_64& rng, const std::vector<Tree>& shapes) {
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::uniform_int_distribution<std::size_t> small(1, 3);
  const Tree& U = shapes[pick(rng)];
  std::vector<std::size_t> sizes(U.size());
  sizes.front() = small(rng);
  sizes.back() = small(rng);
  std::size_t s = small(rng);
  for (std::size_t i = 1; i + 1 < U.size(); ++i) {
    sizes[i] = s;
    s = 2 * s + (rng() % 2);
  }
  const Tree T = graft_sized(rng, U, sizes);
  return (rng() & 1u) ? T.mirrored() : T;
}

/// Appends the leaves of a near-balanced tree with n leaves below `at`.
inline void graft_balanced(std::mt19937_64& rng, const BinarySeq& at, std::size_t n, std::vector<BinarySeq>& out) {
  if (n == 1) {
    out.push_back(at);
    return;
  }
  std::size_t left = n / 2;
  if (n >= 4 && (rng() & 1u)) left += (rng() & 2u) ? 1 : std::size_t(-1);
  graft_balanced(rng, at.child(0), left, out);
  graft_balanced(rng, at.child(1), n - left, out);
}

/// A tree in the set N (the sixteen words of length 4 do not meet the
/// boundary conditions) that avoids every translate Estar·x0^i, i <= 15,
/// and on which the spreader is defined. The sizes |T/001|, |T/01|,
/// |T/1^i 0| for 1 <= i <= 16 double exactly, upwards or downwards, and
/// a random right spine follows so that the spreader may apply again.
inline Tree spreader_tree(std::mt19937_64& rng, bool increasing) {
  std::vector<std::size_t> chain(18);
  chain[0] = 1;
  for (std::size_t i = 1; i < chain.size(); ++i) chain[i] = 2 * chain[i - 1] + (rng() & 1u);
  if (!increasing) std::reverse(chain.begin(), chain.end());
  std::vector<BinarySeq> leaves{BinarySeq::parse("000")};
  graft_balanced(rng, BinarySeq::parse("001"), chain[0], leaves);
  graft_balanced(rng, BinarySeq::parse("01"), chain[1], leaves);
  BinarySeq spine = BinarySeq::parse("1");
  for (std::size_t i = 2; i < chain.size(); ++i) {
    graft_balanced(rng, spine.child(0), chain[i], leaves);
    spine = spine.child(1);
  }
  for (std::size_t j = rng() % 30; j > 0; --j) {
    graft_balanced(rng, spine.child(0), 1 + rng() % 3, leaves);
    spine = spine.child(1);
  }
  leaves.push_back(spine);
  return Tree::from_leaves(std::move(leaves));
}

/// Collapses a uniformly chosen available pair until none remain.
inline TreeDiagram random_collapse(std::mt19937_64& rng, TreeDiagram d) {
  for (auto pairs = d.collapsible_pairs(); !pairs.empty(); pairs = d.collapsible_pairs()) {
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    d = d.collapse(pairs[pick(rng)]);
  }
  return d;
}

}  // namespace testing_support
