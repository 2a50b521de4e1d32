#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/binary_seq.hpp"

namespace thompson {

/// A finite rooted binary tree, stored as the lexicographically sorted set of
/// its leaf addresses. Every instance is a complete antichain.
class Tree {
 public:
  /// The trivial tree {⟨⟩}.
  Tree();

  /// Validates an arbitrary collection of words. Duplicates are ignored.
  /// Throws EmptyTree, AntichainViolation or IncompleteTree.
  static Tree from_leaves(std::vector<BinarySeq> leaves);

  /// Wraps an already sorted, valid leaf vector without checking it.
  static Tree from_sorted_unchecked(std::vector<BinarySeq> leaves);

  /// All words of length n (the complete tree of depth n).
  static Tree complete(std::size_t depth);

  std::span<const BinarySeq> leaves() const { return leaves_; }
  std::size_t size() const { return leaves_.size(); }
  bool trivial() const { return leaves_.size() == 1; }
  const BinarySeq& leaf(std::size_t i) const { return leaves_[i]; }
  const BinarySeq& min_leaf() const { return leaves_.front(); }
  const BinarySeq& max_leaf() const { return leaves_.back(); }

  /// |T/u|: the number of leaves extending u (0 when u is not a node).
  std::size_t subtree_size(const BinarySeq& u) const;

  /// Index range [first, last) of the leaves extending u.
  std::pair<std::size_t, std::size_t> extension_range(const BinarySeq& u) const;

  /// T/u, or nullopt when no leaf extends u.
  std::optional<Tree> subtree(const BinarySeq& u) const;

  /// Index of the leaf that is a prefix of u, if any.
  std::optional<std::size_t> leaf_prefixing(const BinarySeq& u) const;

  /// u is a node of T (a prefix of some leaf).
  bool is_node(const BinarySeq& u) const { return subtree_size(u) > 0; }
  /// u is a node with two children in T.
  bool is_internal(const BinarySeq& u) const { return subtree_size(u) > 1; }
  bool has_leaf(const BinarySeq& u) const;

  /// Image under exchanging 0 and 1 everywhere.
  Tree mirrored() const;

  std::string to_string() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (auto c = a.leaves_.size() <=> b.leaves_.size(); c != 0) return c;
    return a.leaves_ <=> b.leaves_;
  }

 private:
  explicit Tree(std::vector<BinarySeq> leaves) : leaves_(std::move(leaves)) {}
  std::vector<BinarySeq> leaves_;
};

/// Parses the comma-separated text form (`00,01,1`, trivial tree `e`).
/// Rejects leaves that are not in strictly increasing lexicographic order.
Tree parse_tree(std::string_view text);

/// Every leaf of U has an extension in V (V refines U).
bool contained_in(const Tree& U, const Tree& V);

/// The coarsest tree refining both arguments.
Tree common_refinement(const Tree& U, const Tree& V);

struct BoundaryPoints {
  BinarySeq min;
  BinarySeq max;
  std::vector<BinarySeq> interior;
};

BoundaryPoints boundary_points(const Tree& T);

/// Upper bound on the leaf count accepted by enumerate_trees.
inline constexpr std::size_t kDefaultEnumerationBound = 16;

/// Calls `visit` once for every tree with exactly n leaves. The order is
/// fixed: split the leaf count at the root as (1, n-1), (2, n-2), ... and
/// recurse left subtree outermost.
void for_each_tree(std::size_t n, const std::function<void(const Tree&)>& visit,
                   std::size_t bound = kDefaultEnumerationBound);

/// Same trees as for_each_tree, materialized.
std::vector<Tree> enumerate_trees(std::size_t n, std::size_t bound = kDefaultEnumerationBound);

/// All trees with 1..max_leaves leaves, by increasing leaf count.
void for_each_tree_up_to(std::size_t max_leaves, const std::function<void(const Tree&)>& visit,
                         std::size_t bound = kDefaultEnumerationBound);

}  // namespace thompson

template <>
struct std::hash<thompson::Tree> {
  std::size_t operator()(const thompson::Tree& t) const noexcept {
    std::size_t h = t.size();
    for (const auto& leaf : t.leaves()) {
      h ^= std::hash<thompson::BinarySeq>{}(leaf) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
