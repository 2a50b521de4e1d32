#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

/// How |T/u| grows along the interior leaves of a boundary candidate:
/// Increasing means 2|T/u| ≤ |T/v| whenever u <lex v; Decreasing is the mirror.
enum class Direction { Increasing, Decreasing };

std::string to_string(Direction d);

/// The direction in which U meets the defining conditions of ∂T, or nullopt
/// when it does not meet them. The conditions: U is contained in T, U has
/// extensions of 01 and 10, the interior sizes |T/u| double monotonically,
/// the least interior leaf ends in 1 and the greatest ends in 0.
std::optional<Direction> check_conditions(const Tree& U, const Tree& T);

struct BoundaryResult {
  Tree tree;  // trivial when no candidate exists
  std::optional<Direction> direction;
  std::vector<std::size_t> witness_sizes;  // |T/u| over the interior leaves of tree

  bool trivial() const { return tree.trivial(); }
};

enum class BoundaryMode { Oracle, Fast };

inline constexpr std::size_t kDefaultOracleLeafBound = 14;

/// Calls `visit` for every tree contained in T, i.e. every tree obtained by
/// pruning T.
void for_each_pruning(const Tree& T, const std::function<void(const Tree&)>& visit);

/// ∂T. Oracle mode filters every pruning of T and insists that at most one
/// candidate is maximal under containment (throws InvariantViolation
/// otherwise, ResourceLimit above `oracle_bound` leaves). Fast mode builds
/// the candidate with the most leaves directly.
BoundaryResult boundary_tree(const Tree& T, BoundaryMode mode = BoundaryMode::Fast,
                             std::size_t oracle_bound = kDefaultOracleLeafBound);

/// [T, ∂T, ∂∂T, ...] ending with the trivial tree or a repeated tree.
std::vector<Tree> boundary_tower(const Tree& T);

}  // namespace thompson
