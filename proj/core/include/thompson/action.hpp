#pragma once

#include <optional>

#include "thompson/diagram.hpp"

namespace thompson {

/// t·f, or nullopt when no leaf of L_f is a prefix of t.
std::optional<BinarySeq> apply_seq(const Element& f, const BinarySeq& t);

/// t·f is defined and ends with the same digit as t. t must be nonempty.
bool acts_properly_seq(const Element& f, const BinarySeq& t);

/// Pointwise image T·f, or nullopt when some leaf of T is outside the domain.
std::optional<Tree> act_tree(const Tree& T, const Element& f);

/// f acts properly on every leaf of T. The trivial tree has the empty leaf,
/// on which only the identity acts properly.
bool acts_properly_tree(const Element& f, const Tree& T);

}  // namespace thompson
