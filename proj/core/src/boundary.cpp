#include "thompson/boundary.hpp"

#include <algorithm>

namespace thompson {

std::string to_string(Direction d) { return d == Direction::Increasing ? "increasing" : "decreasing"; }

namespace {

const BinarySeq kZeroOne = BinarySeq::parse("01");
const BinarySeq kOneZero = BinarySeq::parse("10");

std::vector<std::size_t> interior_sizes(const Tree& U, const Tree& T) {
  std::vector<std::size_t> out;
  for (const auto& u : boundary_points(U).interior) out.push_back(T.subtree_size(u));
  return out;
}

}  // namespace

std::optional<Direction> check_conditions(const Tree& U, const Tree& T) {
  if (!contained_in(U, T)) return std::nullopt;
  if (!U.is_node(kZeroOne) || !U.is_node(kOneZero)) return std::nullopt;
  // With both 01 and 10 present there are at least two interior leaves.
  const auto interior = boundary_points(U).interior;
  if (interior.front().back() != 1 || interior.back().back() != 0) return std::nullopt;

  const auto sizes = interior_sizes(U, T);
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    if (2 * sizes[i] > sizes[i + 1]) increasing = false;
    if (2 * sizes[i + 1] > sizes[i]) decreasing = false;
  }
  if (increasing) return Direction::Increasing;
  if (decreasing) return Direction::Decreasing;
  return std::nullopt;
}

namespace {

void prune(const Tree& T, std::vector<BinarySeq>& work, std::vector<BinarySeq>& chosen,
           const std::function<void(const Tree&)>& visit) {
  // `work` holds the nodes still to be decided, in reverse lex order.
  if (work.empty()) {
    visit(Tree::from_sorted_unchecked(chosen));
    return;
  }
  const BinarySeq u = work.back();
  work.pop_back();
  chosen.push_back(u);
  prune(T, work, chosen, visit);
  chosen.pop_back();
  if (T.is_internal(u)) {
    work.push_back(u.child(1));
    work.push_back(u.child(0));
    prune(T, work, chosen, visit);
    work.pop_back();
    work.pop_back();
  }
  work.push_back(u);
}

}  // namespace

void for_each_pruning(const Tree& T, const std::function<void(const Tree&)>& visit) {
  std::vector<BinarySeq> work{BinarySeq{}};
  std::vector<BinarySeq> chosen;
  prune(T, work, chosen, visit);
}

namespace {

BoundaryResult make_result(const Tree& U, const Tree& T, Direction d) {
  return BoundaryResult{U, d, interior_sizes(U, T)};
}

BoundaryResult oracle_boundary(const Tree& T, std::size_t bound) {
  if (T.size() > bound) {
    throw ResourceLimit("oracle boundary limited to " + std::to_string(bound) + " leaves, got " +
                        std::to_string(T.size()));
  }
  std::vector<std::pair<Tree, Direction>> candidates;
  for_each_pruning(T, [&](const Tree& U) {
    if (auto d = check_conditions(U, T)) candidates.emplace_back(U, *d);
  });

  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      dominated = j != i && contained_in(candidates[i].first, candidates[j].first);
    }
    if (!dominated) maximal.push_back(i);
  }
  if (maximal.empty()) return BoundaryResult{Tree(), std::nullopt, {}};
  if (maximal.size() > 1) {
    throw InvariantViolation("two maximal boundary candidates in " + T.to_string() + ": " +
                             candidates[maximal[0]].first.to_string() + " and " +
                             candidates[maximal[1]].first.to_string());
  }
  const auto& [U, d] = candidates[maximal.front()];
  return make_result(U, T, d);
}

struct Pending {
  BinarySeq node;
  bool fixed;  // must stay a leaf of the candidate
};

class IncreasingSearch {
 public:
  explicit IncreasingSearch(const Tree& T) : T_(T) {}

  // Largest candidate with increasing interior sizes, or nullopt.
  std::optional<Tree> run() {
    for (std::size_t a = 2; T_.is_internal(BinarySeq::repeated(0, a - 1)); ++a) {
      for (std::size_t b = 2; T_.is_internal(BinarySeq::repeated(1, b - 1)); ++b) {
        // The hanging nodes of the two spines, in reverse lex order. The
        // outermost ones must be leaves so that the interior starts with a
        // word ending in 1 and finishes with a word ending in 0.
        std::vector<Pending> todo;
        todo.push_back({BinarySeq::repeated(1, b - 1).child(0), true});
        for (std::size_t j = b - 2; j >= 1; --j) todo.push_back({BinarySeq::repeated(1, j).child(0), false});
        for (std::size_t j = 1; j + 1 < a; ++j) todo.push_back({BinarySeq::repeated(0, j).child(1), false});
        todo.push_back({BinarySeq::repeated(0, a - 1).child(1), true});
        left_ = BinarySeq::repeated(0, a);
        right_ = BinarySeq::repeated(1, b);
        search(todo, 0);
      }
    }
    if (tied_) throw InvariantViolation("two largest boundary candidates in " + T_.to_string());
    return best_;
  }

 private:
  void search(std::vector<Pending>& todo, std::size_t prev) {
    if (todo.empty()) {
      record();
      return;
    }
    const Pending x = todo.back();
    todo.pop_back();
    const std::size_t s = T_.subtree_size(x.node);
    // Splitting only shrinks the sizes, so a node too small to be a leaf
    // cannot be refined either.
    if (s >= 2 * prev) {
      chosen_.push_back(x.node);
      search(todo, s);
      chosen_.pop_back();
      if (!x.fixed && s > 1) {
        todo.push_back({x.node.child(1), false});
        todo.push_back({x.node.child(0), false});
        search(todo, prev);
        todo.pop_back();
        todo.pop_back();
      }
    }
    todo.push_back(x);
  }

  void record() {
    const std::size_t n = chosen_.size() + 2;
    if (best_ && n < best_->size()) return;
    std::vector<BinarySeq> leaves;
    leaves.reserve(n);
    leaves.push_back(left_);
    leaves.insert(leaves.end(), chosen_.begin(), chosen_.end());
    leaves.push_back(right_);
    Tree U = Tree::from_sorted_unchecked(std::move(leaves));
    if (best_ && n == best_->size()) {
      if (U != *best_) tied_ = true;
      return;
    }
    best_ = std::move(U);
    tied_ = false;
  }

  const Tree& T_;
  BinarySeq left_;
  BinarySeq right_;
  std::vector<BinarySeq> chosen_;
  std::optional<Tree> best_;
  bool tied_ = false;
};

BoundaryResult fast_boundary(const Tree& T) {
  const std::size_t low = T.subtree_size(kZeroOne);
  const std::size_t high = T.subtree_size(kOneZero);
  // An increasing candidate forces |T/01| < |T/10| and a decreasing one the
  // reverse, so the profile decides which search to run.
  if (low == high || low == 0 || high == 0) return BoundaryResult{Tree(), std::nullopt, {}};
  if (low < high) {
    auto U = IncreasingSearch(T).run();
    if (!U) return BoundaryResult{Tree(), std::nullopt, {}};
    return make_result(*U, T, Direction::Increasing);
  }
  const Tree mirror = T.mirrored();
  auto U = IncreasingSearch(mirror).run();
  if (!U) return BoundaryResult{Tree(), std::nullopt, {}};
  return make_result(U->mirrored(), T, Direction::Decreasing);
}

}  // namespace

BoundaryResult boundary_tree(const Tree& T, BoundaryMode mode, std::size_t oracle_bound) {
  return mode == BoundaryMode::Oracle ? oracle_boundary(T, oracle_bound) : fast_boundary(T);
}

std::vector<Tree> boundary_tower(const Tree& T) {
  std::vector<Tree> out{T};
  while (!out.back().trivial()) {
    Tree next = boundary_tree(out.back()).tree;
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace thompson
