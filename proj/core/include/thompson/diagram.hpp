#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

/// A pair (L, R) of trees with equally many leaves. The i-th leaf of L is sent
/// to the i-th leaf of R: s_i⌢x ↦ t_i⌢x.
class TreeDiagram {
 public:
  /// Throws InvalidDiagram when the leaf counts differ.
  TreeDiagram(Tree domain, Tree range);

  const Tree& domain() const { return domain_; }
  const Tree& range() const { return range_; }
  std::size_t size() const { return domain_.size(); }

  /// Indices i such that (s_i, t_i) both end in 0 and (s_{i+1}, t_{i+1}) both
  /// end in 1, i.e. the sibling pairs that can be collapsed.
  std::vector<std::size_t> collapsible_pairs() const;

  /// Replaces the pair (i, i+1) by the common parents. `i` must come from
  /// collapsible_pairs().
  TreeDiagram collapse(std::size_t i) const;

  bool reduced() const { return collapsible_pairs().empty(); }

  std::string to_string() const;

  friend bool operator==(const TreeDiagram&, const TreeDiagram&) = default;
  friend std::strong_ordering operator<=>(const TreeDiagram&, const TreeDiagram&) = default;

 private:
  Tree domain_;
  Tree range_;
};

/// Parses `L->R` where both sides use the tree text format.
TreeDiagram parse_diagram(std::string_view text);

/// An element of Thompson's group F, held as its reduced tree diagram. Two
/// Elements are equal iff they represent the same map.
class Element {
 public:
  /// The identity ({⟨⟩}, {⟨⟩}).
  Element() = default;

  static Element identity() { return Element(); }

  const TreeDiagram& diagram() const { return diagram_; }
  const Tree& domain() const { return diagram_.domain(); }
  const Tree& range() const { return diagram_.range(); }
  std::size_t size() const { return diagram_.size(); }
  bool is_identity() const { return diagram_.size() == 1; }

  std::string to_string() const { return diagram_.to_string(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element&, const Element&) = default;

 private:
  friend Element reduce(const TreeDiagram&);
  explicit Element(TreeDiagram d) : diagram_(std::move(d)) {}
  TreeDiagram diagram_{Tree(), Tree()};
};

/// Collapses sibling pairs until none remain.
Element reduce(const TreeDiagram& d);

enum class Side { Domain, Range };

/// The equivalent diagram whose `side` tree is W. Throws NotRefinement unless
/// W refines that side of e.
TreeDiagram expand(const TreeDiagram& d, const Tree& W, Side side);
inline TreeDiagram expand(const Element& e, const Tree& W, Side side) { return expand(e.diagram(), W, side); }

/// f · g: apply f, then g.
Element multiply(const Element& f, const Element& g);

Element invert(const Element& f);

/// f^k for any integer k.
Element power(const Element& f, long k);

/// x_n. x_0 and x_1 are fixed diagrams; for n ≥ 2 the element is computed as
/// x_0^{-(n-1)} x_1 x_0^{n-1}, which is the convention satisfying
/// x_i^{-1} x_n x_i = x_{n+1}.
Element generator(std::size_t n);

/// The elements a, b, c, d, given by their explicit leaf maps.
Element named_element(char name);

/// The element acting as f below u and as the identity elsewhere.
Element localized(const BinarySeq& u, const Element& f);

/// One factor of a word: a generator x_n or a named element, with exponent ±1.
struct Letter {
  enum class Kind { Generator, Named };
  Kind kind = Kind::Generator;
  std::size_t index = 0;  // generator index
  char name = 0;          // 'a'..'d'
  int exponent = 1;

  static Letter x(std::size_t n, int e = 1) { return {Kind::Generator, n, 0, e}; }
  static Letter named(char c, int e = 1) { return {Kind::Named, 0, c, e}; }
  Letter inverse() const {
    Letter out = *this;
    out.exponent = -exponent;
    return out;
  }
  Element value() const;
  std::string to_string() const;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses whitespace-separated tokens such as `x0 x1^-1 a c^-1`. A token
/// `t^k` with |k| > 1 expands to |k| factors of exponent ±1. Throws
/// UnknownSymbol.
Word parse_word(std::string_view text);

std::string to_string(const Word& w);

Word inverse(const Word& w);

/// Left-to-right product; the empty word is the identity.
Element evaluate_word(const Word& w);

/// Removes adjacent pairs t t^-1.
Word freely_reduced(Word w);

/// A word over {x0^±1, x1^±1} evaluating to f. It is produced by rotating
/// both trees of f into the right vine, so its length is only an upper
/// bound on the word length of f.
Word generator_word(const Element& f);

}  // namespace thompson

template <>
struct std::hash<thompson::Element> {
  std::size_t operator()(const thompson::Element& e) const noexcept {
    const std::size_t a = std::hash<thompson::Tree>{}(e.domain());
    const std::size_t b = std::hash<thompson::Tree>{}(e.range());
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};
