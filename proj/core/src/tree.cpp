#include "thompson/tree.hpp"

#include <algorithm>

namespace thompson {

BinarySeq BinarySeq::parse(std::string_view text) {
  BinarySeq out;
  if (text == "e") return out;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid character in binary word: '" + std::string(text) + "'");
    }
    out.push_back(c == '1');
  }
  return out;
}

BinarySeq BinarySeq::repeated(int bit, std::size_t n) {
  BinarySeq out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(bit);
  return out;
}

std::string BinarySeq::to_string() const {
  if (empty()) return "e";
  std::string out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

Tree::Tree() : leaves_{BinarySeq{}} {}

Tree Tree::from_sorted_unchecked(std::vector<BinarySeq> leaves) { return Tree(std::move(leaves)); }

Tree Tree::from_leaves(std::vector<BinarySeq> leaves) {
  if (leaves.empty()) throw EmptyTree("a tree needs at least one leaf");
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

  // In sorted order every extension of u follows u directly, so checking
  // neighbours suffices.
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
    if (leaves[i].is_prefix_of(leaves[i + 1])) {
      throw AntichainViolation(leaves[i].to_string() + " is a prefix of " + leaves[i + 1].to_string());
    }
  }

  // A finite antichain covers every infinite sequence iff its Kraft sum is 1.
  __extension__ using wide = unsigned __int128;
  wide kraft = 0;
  for (const auto& leaf : leaves) kraft += static_cast<wide>(1) << (64 - leaf.size());
  if (kraft != (static_cast<wide>(1) << 64)) {
    throw IncompleteTree("leaf set does not cover every branch");
  }
  return Tree(std::move(leaves));
}

Tree Tree::complete(std::size_t depth) {
  std::vector<BinarySeq> leaves;
  leaves.reserve(std::size_t{1} << depth);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << depth); ++i) {
    BinarySeq w;
    for (std::size_t b = depth; b-- > 0;) w.push_back(static_cast<int>((i >> b) & 1u));
    leaves.push_back(w);
  }
  return Tree(std::move(leaves));
}

std::pair<std::size_t, std::size_t> Tree::extension_range(const BinarySeq& u) const {
  auto first = std::lower_bound(leaves_.begin(), leaves_.end(), u);
  const std::uint64_t block_end =
      u.size() == 64 ? u.packed() : (u.packed() | (~std::uint64_t{0} >> u.size()));
  auto last = std::partition_point(first, leaves_.end(),
                                   [&](const BinarySeq& w) { return w.packed() <= block_end; });
  return {static_cast<std::size_t>(first - leaves_.begin()), static_cast<std::size_t>(last - leaves_.begin())};
}

std::size_t Tree::subtree_size(const BinarySeq& u) const {
  auto [first, last] = extension_range(u);
  return last - first;
}

std::optional<Tree> Tree::subtree(const BinarySeq& u) const {
  auto [first, last] = extension_range(u);
  if (first == last) return std::nullopt;
  std::vector<BinarySeq> out;
  out.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) out.push_back(leaves_[i].drop(u.size()));
  return Tree(std::move(out));
}

std::optional<std::size_t> Tree::leaf_prefixing(const BinarySeq& u) const {
  auto it = std::upper_bound(leaves_.begin(), leaves_.end(), u);
  if (it == leaves_.begin()) return std::nullopt;
  --it;
  if (!it->is_prefix_of(u)) return std::nullopt;
  return static_cast<std::size_t>(it - leaves_.begin());
}

bool Tree::has_leaf(const BinarySeq& u) const { return std::binary_search(leaves_.begin(), leaves_.end(), u); }

Tree Tree::mirrored() const {
  std::vector<BinarySeq> out;
  out.reserve(leaves_.size());
  for (auto it = leaves_.rbegin(); it != leaves_.rend(); ++it) out.push_back(it->flipped());
  return Tree(std::move(out));
}

std::string Tree::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (i) out.push_back(',');
    out += leaves_[i].to_string();
  }
  return out;
}

Tree parse_tree(std::string_view text) {
  std::vector<BinarySeq> leaves;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (token.empty()) throw ParseError("empty leaf in tree text '" + std::string(text) + "'");
    auto leaf = BinarySeq::parse(token);
    if (!leaves.empty() && !(leaves.back() < leaf)) {
      throw ParseError("tree leaves not in strictly increasing lexicographic order: '" + std::string(text) + "'");
    }
    leaves.push_back(leaf);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Tree::from_leaves(std::move(leaves));
}

bool contained_in(const Tree& U, const Tree& V) {
  // Both leaf lists are sorted and the extension blocks of U's leaves are
  // disjoint and ordered, so one forward scan of V suffices.
  auto v = V.leaves();
  std::size_t j = 0;
  for (const auto& u : U.leaves()) {
    while (j < v.size() && v[j] < u) ++j;
    if (j == v.size() || !u.is_prefix_of(v[j])) return false;
  }
  return true;
}

Tree common_refinement(const Tree& U, const Tree& V) {
  // The union of both leaf sets minus every word that is a proper prefix of
  // another one.
  std::vector<BinarySeq> all;
  all.reserve(U.size() + V.size());
  std::merge(U.leaves().begin(), U.leaves().end(), V.leaves().begin(), V.leaves().end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<BinarySeq> out;
  out.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i + 1 < all.size() && all[i].is_prefix_of(all[i + 1])) continue;
    out.push_back(all[i]);
  }
  return Tree::from_sorted_unchecked(std::move(out));
}

BoundaryPoints boundary_points(const Tree& T) {
  BoundaryPoints out{T.min_leaf(), T.max_leaf(), {}};
  if (T.size() > 2) {
    out.interior.assign(T.leaves().begin() + 1, T.leaves().end() - 1);
  }
  return out;
}

namespace {

void generate(std::size_t n, const BinarySeq& root, std::vector<BinarySeq>& buffer,
              const std::function<void()>& done) {
  if (n == 1) {
    buffer.push_back(root);
    done();
    buffer.pop_back();
    return;
  }
  const BinarySeq left = root.child(0);
  const BinarySeq right = root.child(1);
  for (std::size_t i = 1; i < n; ++i) {
    generate(i, left, buffer, [&] { generate(n - i, right, buffer, done); });
  }
}

}  // namespace

void for_each_tree(std::size_t n, const std::function<void(const Tree&)>& visit, std::size_t bound) {
  if (n == 0) throw EmptyTree("trees have at least one leaf");
  if (n > bound) throw ResourceLimit("tree enumeration bound exceeded: " + std::to_string(n));
  std::vector<BinarySeq> buffer;
  buffer.reserve(n);
  generate(n, BinarySeq{}, buffer, [&] { visit(Tree::from_sorted_unchecked(buffer)); });
}

std::vector<Tree> enumerate_trees(std::size_t n, std::size_t bound) {
  std::vector<Tree> out;
  for_each_tree(n, [&](const Tree& t) { out.push_back(t); }, bound);
  return out;
}

void for_each_tree_up_to(std::size_t max_leaves, const std::function<void(const Tree&)>& visit,
                         std::size_t bound) {
  for (std::size_t n = 1; n <= max_leaves; ++n) for_each_tree(n, visit, bound);
}

}  // namespace thompson
