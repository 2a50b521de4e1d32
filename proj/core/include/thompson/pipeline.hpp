#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/boundary.hpp"
#include "thompson/folner.hpp"

namespace thompson {

/// Restriction of an indicator set A ⊆ F to A0 = {f : R_f refines the
/// complete depth-4 tree}, followed by the pushforward f ↦ R_f.
struct TreeTransfer {
  Restriction<Element> restriction;
  std::size_t equivariance_failures = 0;  // pairs (f, γ) with L_{fγ} ≠ L_f or R_{fγ} ≠ R_f·γ
  WeightedSet<Tree> trees;
  Rational constant;  // of `trees`
};

/// Throws ZeroMass when A0 is empty.
TreeTransfer folner_to_trees(const WeightedSet<Element>& A);

/// Restriction of μ to the trees T on which every generator acts properly on
/// ∂T, followed by the pushforward T ↦ ∂T.
struct BoundaryStep {
  Restriction<Tree> restriction;
  std::size_t equivariance_failures = 0;  // pairs (T, γ) with ∂(T·γ) ≠ (∂T)·γ
  WeightedSet<Tree> trees;
  Rational constant;
};

/// Throws ZeroMass when no tree survives the restriction.
BoundaryStep partial_step(const WeightedSet<Tree>& mu);

struct StageReport {
  std::string label;
  std::size_t support = 0;
  Rational mass;
  Rational constant;
  std::size_t max_tree = 0;
  // Restriction stages.
  std::optional<Rational> delta;
  std::optional<Rational> bound;
  // Pushforward stages.
  std::optional<std::size_t> equivariance_failures;
  std::optional<bool> constant_nonincreasing;

  /// Restriction stages stay within their bound; equivariant pushforwards
  /// do not raise the constant.
  bool invariant_holds() const;
};

inline constexpr std::size_t kMaxPipelineDepth = 5;

struct PipelineReport {
  std::string input;
  std::size_t depth = 0;
  std::vector<StageReport> stages;
  std::size_t boundary_steps = 0;          // ∂ pushforwards completed
  std::optional<std::string> terminated;  // why the pipeline stopped early
  std::vector<std::size_t> tower;         // k_i = |∂^{m-i} R|, m = boundary_steps
  std::vector<bool> tower_transitions;    // k_{i+1} > 2^{k_i - 2}
  std::vector<bool> exp_check;            // exp_i(0) + 2 < k_i
  bool mass_conserved = true;             // every pushforward kept the mass

  bool invariants_hold() const;
};

/// exp_0(n) = n, exp_{p+1}(n) = 2^{exp_p(n)}, compared exactly.
bool exp_plus_two_below(std::size_t p, std::size_t k);

/// Runs folner_to_trees, then partial_step up to `depth` times. Throws
/// ResourceLimit above kMaxPipelineDepth; ZeroMass ends the run early and
/// is recorded in `terminated`.
PipelineReport tower_pipeline(const std::vector<Element>& A, std::size_t depth, std::string input_label);

/// Candidate sets: `ball:r`, or `file:path` with one word or `L->R` diagram
/// per line (blank lines and lines starting with # are skipped).
std::vector<Element> load_candidates(std::string_view source, std::size_t ball_cap = kDefaultBallCap);

/// Deterministic JSON; rationals are "p/q" strings.
std::string to_json(const PipelineReport& report);

/// Columns stage,support,mass,constant,max_tree.
std::string to_csv(const PipelineReport& report);

}  // namespace thompson
