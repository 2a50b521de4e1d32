#include "thompson/marginal.hpp"

#include <algorithm>

#include "thompson/boundary.hpp"

namespace thompson {

SubtreeSizes SubtreeSizes::of(const Tree& T) {
  static const BinarySeq a001 = BinarySeq::parse("001");
  static const BinarySeq a01 = BinarySeq::parse("01");
  static const BinarySeq a10 = BinarySeq::parse("10");
  static const BinarySeq a0010 = BinarySeq::parse("0010");
  static const BinarySeq a0011 = BinarySeq::parse("0011");
  static const BinarySeq a100 = BinarySeq::parse("100");
  static const BinarySeq a101 = BinarySeq::parse("101");
  return {T.subtree_size(a001), T.subtree_size(a01),  T.subtree_size(a10), T.subtree_size(a0010),
          T.subtree_size(a0011), T.subtree_size(a100), T.subtree_size(a101)};
}

TreeClass classify(const Tree& T) {
  TreeClass c;
  c.sizes = SubtreeSizes::of(T);
  const std::size_t p = c.sizes.s001;
  const std::size_t q = c.sizes.s01;
  const std::size_t r = c.sizes.s10;

  c.plus = p < q && q < r;
  c.minus = p > q && q > r;
  // Requiring a nonempty T/01 keeps (2×) inside (+) and (½×) inside (−) for
  // trees that lack some of the three addresses.
  c.twice = q >= 1 && 2 * p <= q && 2 * q <= r;
  c.half = q >= 1 && p >= 2 * q && q >= 2 * r;
  c.in_E = !c.plus && !c.minus;
  c.in_Estar = !c.twice && !c.half;

  c.in_Ea = std::max(p, r) == q;
  c.in_Eb = std::max(p, r) < q;
  c.in_E1 = q == r && r < p;
  c.in_E2 = q == p && p < r;
  c.in_E3 = q < std::min(r, p);

  c.in_E4 = c.plus && 2 * q > r;
  c.in_E5 = c.plus && 2 * p > q;
  c.in_E6 = c.minus && q < 2 * r;
  c.in_E7 = c.minus && p < 2 * q;
  c.in_X = c.plus && 2 * q <= r;
  c.in_Y = c.minus && q >= 2 * r;
  return c;
}

bool in_Eu(const Element& f, const BinarySeq& u) { return f.range().subtree_size(u) == 0; }

namespace {

TreePredicate class_flag(std::string name, bool TreeClass::*flag) {
  return {std::move(name), [flag](const Tree& T) { return classify(T).*flag; }};
}

bool improper(const Tree& T) {
  const Tree boundary = boundary_tree(T).tree;
  for (const auto& gamma : standard_generators()) {
    if (!acts_properly_tree(gamma, boundary)) return true;
  }
  return false;
}

}  // namespace

TreePredicate tree_set(std::string_view name) {
  static const std::map<std::string, bool TreeClass::*, std::less<>> flags{
      {"E", &TreeClass::in_E},   {"Estar", &TreeClass::in_Estar}, {"Ea", &TreeClass::in_Ea},
      {"Eb", &TreeClass::in_Eb}, {"E1", &TreeClass::in_E1},       {"E2", &TreeClass::in_E2},
      {"E3", &TreeClass::in_E3}, {"E4", &TreeClass::in_E4},       {"E5", &TreeClass::in_E5},
      {"E6", &TreeClass::in_E6}, {"E7", &TreeClass::in_E7},       {"X", &TreeClass::in_X},
      {"Y", &TreeClass::in_Y},   {"plus", &TreeClass::plus},      {"minus", &TreeClass::minus},
      {"twice", &TreeClass::twice}, {"half", &TreeClass::half}};
  if (auto it = flags.find(name); it != flags.end()) return class_flag(it->first, it->second);
  if (name == "N") {
    return {"N", [U = Tree::complete(4)](const Tree& T) { return !check_conditions(U, T).has_value(); }};
  }
  if (name == "improper") return {"improper", improper};
  if (name == "all") return {"all", [](const Tree&) { return true; }};
  if (name == "empty") return empty_predicate<Tree>();
  throw UnknownSymbol("unknown tree set '" + std::string(name) + "'");
}

TreePredicate tree_set_union(std::string_view names) {
  std::vector<TreePredicate> parts;
  std::size_t start = 0;
  while (start <= names.size()) {
    auto comma = names.find(',', start);
    auto token = names.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!token.empty()) parts.push_back(tree_set(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() == 1) return parts.front();
  return union_of(std::move(parts));
}

MarginalizationReport<Tree> marginalizes_off(const Element& g, const std::string& g_name, const TreePredicate& E,
                                             const TreePredicate& I, std::size_t leaf_bound, std::size_t power_bound) {
  auto report = new_report<Tree>(g_name, E, I, leaf_bound, power_bound);
  if (leaf_bound > kDefaultEnumerationBound) {
    throw ResourceLimit("leaf bound " + std::to_string(leaf_bound) + " above enumeration bound");
  }
  MarginalizationChecker<Tree> checker(g, E, I, power_bound, act_on_tree);
  for_each_tree_up_to(leaf_bound, [&](const Tree& T) { checker.visit(T, report); });
  return report;
}

MarginalizationReport<Tree> marginalizes_off(const Element& g, const std::string& g_name, const TreePredicate& E,
                                             const TreePredicate& I, const std::vector<Tree>& trees,
                                             std::size_t power_bound) {
  std::size_t largest = 0;
  for (const auto& T : trees) largest = std::max(largest, T.size());
  auto report = new_report<Tree>(g_name, E, I, largest, power_bound);
  MarginalizationChecker<Tree> checker(g, E, I, power_bound, act_on_tree);
  for (const auto& T : trees) checker.visit(T, report);
  return report;
}

std::vector<Element> elements_up_to(std::size_t n) {
  std::vector<Element> out;
  for (std::size_t m = 1; m <= n; ++m) {
    const auto trees = enumerate_trees(m);
    for (const auto& L : trees) {
      for (const auto& R : trees) {
        TreeDiagram d(L, R);
        if (d.reduced()) out.push_back(reduce(d));
      }
    }
  }
  return out;
}

MarginalizationReport<Element> marginalizes_off(const Element& g, const std::string& g_name,
                                                const ElementPredicate& E, const ElementPredicate& I,
                                                std::size_t leaf_bound, std::size_t power_bound) {
  auto report = new_report<Element>(g_name, E, I, leaf_bound, power_bound);
  MarginalizationChecker<Element> checker(g, E, I, power_bound, act_on_element);
  for (const auto& f : elements_up_to(leaf_bound)) checker.visit(f, report);
  return report;
}

Element length_four_spreader() {
  std::vector<BinarySeq> L;
  for (std::size_t i = 0; i < 15; ++i) L.push_back(BinarySeq::repeated(1, i).child(0));
  L.push_back(BinarySeq::repeated(1, 15));
  const Tree U = Tree::complete(4);
  if (L.size() != U.size()) throw InvariantViolation("spreader trees differ in size");
  return reduce(TreeDiagram(Tree::from_leaves(std::move(L)), U));
}

namespace {

using TreePart = MarginalPart<Tree>;
using TreeCert = MarginalCertificate<Tree>;

CertificatePtr<Tree> make_cert(std::string name, std::vector<TreePart> parts) {
  return std::make_shared<const TreeCert>(TreeCert{std::move(name), std::move(parts)});
}

// Adds the parts of `cert`, restricted to `within`.
void append_restricted(std::vector<TreePart>& out, const CertificatePtr<Tree>& cert, const TreePredicate& within) {
  for (const auto& part : cert->parts) {
    TreePart p = part;
    p.subset = intersection(within, part.subset);
    out.push_back(std::move(p));
  }
}

}  // namespace

std::map<std::string, CertificatePtr<Tree>> tree_certificates() {
  const Element x0 = generator(0);
  const Element x0_inv = invert(x0);
  const auto empty = empty_certificate<Tree>();

  const TreePart part_a{tree_set("Ea"), named_element('a'), "a", empty};
  const TreePart part_b{tree_set("Eb"), named_element('b'), "b", empty};
  const auto ea_eb = make_cert("Ea|Eb", {part_a, part_b});
  const auto E = make_cert("E", {part_a,
                                 part_b,
                                 {tree_set("E1"), x0, "x0", ea_eb},
                                 {tree_set("E2"), x0, "x0", ea_eb},
                                 {tree_set("E3"), x0, "x0", ea_eb}});

  // E5·x0 ⊆ E4 ∪ E and E7·x0 ⊆ E6 ∪ E, so E5 and E7 are covered by the
  // x0^-1 translates of the certificates for E4, E6 and E.
  std::map<const TreeCert*, CertificatePtr<Tree>> memo;
  auto shift = [&](const CertificatePtr<Tree>& c) { return translate<Tree>(c, x0_inv, "x0^-1", "x0", act_on_tree, &memo); };
  const auto e4 = make_cert("E4", {{tree_set("E4"), named_element('c'), "c", E}});
  const auto e6 = make_cert("E6", {{tree_set("E6"), named_element('d'), "d", E}});
  const auto e_shifted = shift(E);

  std::vector<TreePart> star_parts = E->parts;
  star_parts.push_back(e4->parts.front());
  append_restricted(star_parts, shift(e4), tree_set("E5"));
  append_restricted(star_parts, e_shifted, tree_set("E5"));
  star_parts.push_back(e6->parts.front());
  append_restricted(star_parts, shift(e6), tree_set("E7"));
  append_restricted(star_parts, e_shifted, tree_set("E7"));
  const auto Estar = make_cert("Estar", std::move(star_parts));

  // The off-set for the spreader: Estar·x0^i for 0 ≤ i ≤ 15.
  std::vector<TreePart> shifted_parts = Estar->parts;
  for (long i = 1; i <= 15; ++i) {
    const std::string name = "x0^" + std::to_string(i);
    const std::string inv_name = "x0^-" + std::to_string(i);
    auto c = translate<Tree>(Estar, power(x0, i), name, inv_name, act_on_tree);
    shifted_parts.insert(shifted_parts.end(), c->parts.begin(), c->parts.end());
  }
  const auto star_shifts = make_cert("Estar.x0^[0..15]", std::move(shifted_parts));
  const auto improper = make_cert("improper", {{tree_set("N"), length_four_spreader(), "g", star_shifts}});

  return {{"E", E}, {"Estar", Estar}, {"improper", improper}};
}

CertificatePtr<Element> element_certificate(const BinarySeq& u) {
  const std::string name = "E_" + u.to_string();
  ElementPredicate subset{name, [u](const Element& f) { return in_Eu(f, u); }};
  MarginalPart<Element> part{std::move(subset), localized(u, generator(0)), "g_" + u.to_string(),
                             empty_certificate<Element>()};
  return std::make_shared<const MarginalCertificate<Element>>(MarginalCertificate<Element>{name, {std::move(part)}});
}

CertificatePtr<Element> not_refining_length_four() {
  MarginalCertificate<Element> out{"not_refining_U", {}};
  const Tree U = Tree::complete(4);
  for (const auto& u : U.leaves()) {
    auto c = element_certificate(u);
    out.parts.push_back(c->parts.front());
  }
  return std::make_shared<const MarginalCertificate<Element>>(std::move(out));
}

}  // namespace thompson
