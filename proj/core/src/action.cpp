#include "thompson/action.hpp"

namespace thompson {

std::optional<BinarySeq> apply_seq(const Element& f, const BinarySeq& t) {
  auto i = f.domain().leaf_prefixing(t);
  if (!i) return std::nullopt;
  return f.range().leaf(*i).concat(t.drop(f.domain().leaf(*i).size()));
}

bool acts_properly_seq(const Element& f, const BinarySeq& t) {
  if (t.empty()) return f.is_identity();
  auto image = apply_seq(f, t);
  return image && !image->empty() && image->back() == t.back();
}

std::optional<Tree> act_tree(const Tree& T, const Element& f) {
  if (f.is_identity()) return T;
  std::vector<BinarySeq> out;
  out.reserve(T.size());
  for (const auto& t : T.leaves()) {
    auto image = apply_seq(f, t);
    if (!image) return std::nullopt;
    out.push_back(*image);
  }
#ifndef NDEBUG
  // The image of a tree is again a tree, listed in the same order.
  if (Tree::from_leaves(out) != Tree::from_sorted_unchecked(out)) {
    throw InvariantViolation("tree image is not sorted");
  }
#endif
  return Tree::from_sorted_unchecked(std::move(out));
}

bool acts_properly_tree(const Element& f, const Tree& T) {
  for (const auto& t : T.leaves()) {
    if (!acts_properly_seq(f, t)) return false;
  }
  return true;
}

}  // namespace thompson
