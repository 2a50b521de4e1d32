#include "thompson/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace thompson {

namespace {

std::optional<Tree> range_tree(const Element& f) { return f.range(); }

std::optional<Tree> boundary_of(const Tree& T) { return boundary_tree(T).tree; }

template <class Point>
std::size_t largest(const WeightedSet<Point>& mu) {
  std::size_t out = 0;
  for (const auto& [p, w] : mu.weights()) out = std::max(out, p.size());
  return out;
}

}  // namespace

TreeTransfer folner_to_trees(const WeightedSet<Element>& A) {
  const Tree U = Tree::complete(4);
  const auto elements = element_system();
  const auto trees = tree_system();

  TreeTransfer out;
  out.restriction = restrict<Element>(A, [&](const Element& f) { return contained_in(U, f.range()); }, elements);
  const std::function<std::optional<Tree>(const Element&)> h = range_tree;
  out.equivariance_failures = equivariance_failures<Element, Tree>(out.restriction.restricted, h, elements, trees);
  for (const auto& [f, w] : out.restriction.restricted.weights()) {
    for (const auto& gamma : elements.generators) {
      if (multiply(f, gamma).domain() != f.domain()) ++out.equivariance_failures;
    }
  }
  out.trees = pushforward<Element, Tree>(out.restriction.restricted, h);
  out.constant = folner_constant(out.trees, trees);
  return out;
}

BoundaryStep partial_step(const WeightedSet<Tree>& mu) {
  const auto trees = tree_system();
  const TreePredicate improper = tree_set("improper");
  BoundaryStep out;
  out.restriction = restrict<Tree>(mu, [&](const Tree& T) { return !improper(T); }, trees);
  const std::function<std::optional<Tree>(const Tree&)> h = boundary_of;
  out.equivariance_failures = equivariance_failures<Tree, Tree>(out.restriction.restricted, h, trees, trees);
  out.trees = pushforward<Tree, Tree>(out.restriction.restricted, h);
  out.constant = folner_constant(out.trees, trees);
  return out;
}

bool StageReport::invariant_holds() const {
  if (bound && constant > *bound) return false;
  if (equivariance_failures && *equivariance_failures == 0 && constant_nonincreasing && !*constant_nonincreasing) {
    return false;
  }
  return true;
}

bool PipelineReport::invariants_hold() const {
  if (!mass_conserved) return false;
  for (const auto& s : stages) {
    if (!s.invariant_holds()) return false;
  }
  return std::all_of(tower_transitions.begin(), tower_transitions.end(), [](bool b) { return b; }) &&
         std::all_of(exp_check.begin(), exp_check.end(), [](bool b) { return b; });
}

bool exp_plus_two_below(std::size_t p, std::size_t k) {
  // exp_p(0) grows so fast that p ≥ 5 is already far beyond any tree size;
  // stop once the value exceeds k.
  mpz_class value = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (value > 64) return false;
    value = mpz_class(1) << static_cast<mp_bitcnt_t>(value.get_ui());
  }
  return value + 2 < k;
}

namespace {

StageReport stage(std::string label, std::size_t support, Rational mass, Rational constant, std::size_t max_tree) {
  StageReport s;
  s.label = std::move(label);
  s.support = support;
  s.mass = std::move(mass);
  s.constant = std::move(constant);
  s.max_tree = max_tree;
  return s;
}

bool doubling_transition(std::size_t k_i, std::size_t k_next) {
  if (k_i < 2) return k_next > 0;
  if (k_i - 2 >= 64) return false;
  return mpz_class(k_next) > (mpz_class(1) << static_cast<mp_bitcnt_t>(k_i - 2));
}

StageReport restriction_stage(std::string label, const Restriction<Element>& r, std::size_t max_tree,
                              const Rational& constant) {
  StageReport s = stage(std::move(label), r.restricted.size(), r.restricted.total(), constant, max_tree);
  s.delta = r.delta;
  s.bound = r.bound;
  return s;
}

template <class Point>
StageReport restriction_stage(std::string label, const Restriction<Point>& r, const PartialActionSystem<Point>& sys) {
  StageReport s = stage(std::move(label), r.restricted.size(), r.restricted.total(), folner_constant(r.restricted, sys),
                largest(r.restricted));
  s.delta = r.delta;
  s.bound = r.bound;
  return s;
}

StageReport pushforward_stage(std::string label, const WeightedSet<Tree>& trees, const Rational& constant,
                              std::size_t failures, const Rational& previous) {
  StageReport s = stage(std::move(label), trees.size(), trees.total(), constant, largest(trees));
  s.equivariance_failures = failures;
  s.constant_nonincreasing = constant <= previous;
  return s;
}

}  // namespace

PipelineReport tower_pipeline(const std::vector<Element>& A, std::size_t depth, std::string input_label) {
  if (depth > kMaxPipelineDepth) {
    throw ResourceLimit("pipeline depth " + std::to_string(depth) + " above " + std::to_string(kMaxPipelineDepth));
  }
  PipelineReport report;
  report.input = std::move(input_label);
  report.depth = depth;

  const auto mu = indicator<Element>(A);
  if (mu.empty()) {
    report.terminated = "empty candidate set";
    return report;
  }
  const auto elements = element_system();
  const auto trees_sys = tree_system();
  report.stages.push_back(stage("input", mu.size(), mu.total(), folner_constant(mu, elements), largest(mu)));

  WeightedSet<Tree> current;
  try {
    const TreeTransfer transfer = folner_to_trees(mu);
    const Rational restricted_constant = folner_constant(transfer.restriction.restricted, elements);
    report.stages.push_back(restriction_stage("restrict:range_refines_U", transfer.restriction,
                                              largest(transfer.restriction.restricted), restricted_constant));
    report.stages.push_back(pushforward_stage("pushforward:range_tree", transfer.trees, transfer.constant,
                                              transfer.equivariance_failures, restricted_constant));
    report.mass_conserved = report.mass_conserved && transfer.trees.total() == transfer.restriction.restricted.total();
    current = transfer.trees;
  } catch (const ZeroMass&) {
    report.terminated = "no candidate has a range tree refining every length-4 word";
    return report;
  }

  const WeightedSet<Tree> first_trees = current;
  for (std::size_t step = 1; step <= depth; ++step) {
    try {
      const BoundaryStep b = partial_step(current);
      const std::string n = std::to_string(step);
      report.stages.push_back(restriction_stage("restrict:proper_boundary:" + n, b.restriction, trees_sys));
      report.stages.push_back(pushforward_stage("pushforward:boundary:" + n, b.trees, b.constant,
                                                b.equivariance_failures, report.stages.back().constant));
      report.mass_conserved = report.mass_conserved && b.trees.total() == b.restriction.restricted.total();
      current = b.trees;
      report.boundary_steps = step;
    } catch (const ZeroMass&) {
      report.terminated = "no tree with a proper nontrivial boundary at step " + std::to_string(step);
      break;
    }
  }

  // k_i = |∂^{m-i} R| for the first stage-one tree R whose m-th boundary is
  // nontrivial.
  const std::size_t m = report.boundary_steps;
  for (const auto& [R, w] : first_trees.weights()) {
    const auto tower = boundary_tower(R);
    if (tower.size() <= m || tower[m].trivial()) continue;
    for (std::size_t i = 0; i <= m; ++i) report.tower.push_back(tower[m - i].size());
    break;
  }
  for (std::size_t i = 0; i + 1 < report.tower.size(); ++i) {
    report.tower_transitions.push_back(doubling_transition(report.tower[i], report.tower[i + 1]));
  }
  for (std::size_t i = 0; i < report.tower.size(); ++i) {
    report.exp_check.push_back(exp_plus_two_below(i, report.tower[i]));
  }
  return report;
}

std::vector<Element> load_candidates(std::string_view source, std::size_t ball_cap) {
  if (source.starts_with("ball:")) {
    const auto digits = source.substr(5);
    std::size_t r = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("bad ball radius in '" + std::string(source) + "'");
    }
    return ball(r, ball_cap);
  }
  if (source.starts_with("file:")) {
    const std::string path(source.substr(5));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open candidate file '" + path + "'");
    std::vector<Element> out;
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (line.find("->") != std::string::npos) {
        out.push_back(reduce(parse_diagram(line.substr(first, line.find_last_not_of(" \t\r") - first + 1))));
      } else {
        out.push_back(evaluate_word(parse_word(line)));
      }
    }
    return out;
  }
  throw ParseError("candidate input must be ball:r or file:path, got '" + std::string(source) + "'");
}

std::string to_json(const PipelineReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["input"] = report.input;
  j["depth"] = report.depth;
  ordered_json stages = ordered_json::array();
  for (const auto& s : report.stages) {
    ordered_json o;
    o["label"] = s.label;
    o["support"] = s.support;
    o["mass"] = to_string(s.mass);
    o["constant"] = to_string(s.constant);
    o["max_tree"] = s.max_tree;
    if (s.delta) o["delta"] = to_string(*s.delta);
    if (s.bound) o["bound"] = to_string(*s.bound);
    if (s.equivariance_failures) o["equivariance_failures"] = *s.equivariance_failures;
    if (s.constant_nonincreasing) o["constant_nonincreasing"] = *s.constant_nonincreasing;
    o["invariant_holds"] = s.invariant_holds();
    stages.push_back(std::move(o));
  }
  j["stages"] = std::move(stages);
  j["boundary_steps"] = report.boundary_steps;
  j["terminated"] = report.terminated ? ordered_json(*report.terminated) : ordered_json(nullptr);
  j["tower"] = report.tower;
  j["tower_transitions"] = report.tower_transitions;
  j["exp_check"] = report.exp_check;
  j["mass_conserved"] = report.mass_conserved;
  j["invariants_hold"] = report.invariants_hold();
  return j.dump(2) + "\n";
}

std::string to_csv(const PipelineReport& report) {
  std::ostringstream out;
  out << "stage,support,mass,constant,max_tree\n";
  for (const auto& s : report.stages) {
    out << s.label << ',' << s.support << ',' << to_string(s.mass) << ',' << to_string(s.constant) << ','
        << s.max_tree << '\n';
  }
  return out.str();
}

}  // namespace thompson
