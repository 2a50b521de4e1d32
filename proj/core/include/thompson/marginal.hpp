#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/action.hpp"
#include "thompson/cayley.hpp"

namespace thompson {

/// Extended subtree sizes (0 for an absent node) at the addresses used by the
/// marginal-set predicates.
struct SubtreeSizes {
  std::size_t s001 = 0;
  std::size_t s01 = 0;
  std::size_t s10 = 0;
  std::size_t s0010 = 0;
  std::size_t s0011 = 0;
  std::size_t s100 = 0;
  std::size_t s101 = 0;

  static SubtreeSizes of(const Tree& T);
};

struct TreeClass {
  SubtreeSizes sizes;
  bool plus = false;   // |T/001| < |T/01| < |T/10|
  bool minus = false;  // |T/001| > |T/01| > |T/10|
  bool twice = false;  // 2|T/001| ≤ |T/01| ≤ |T/10|/2, with T/01 nonempty
  bool half = false;   // |T/001|/2 ≥ |T/01| ≥ 2|T/10|, with T/01 nonempty
  bool in_E = false;
  bool in_Estar = false;
  bool in_Ea = false;
  bool in_Eb = false;
  bool in_E1 = false;
  bool in_E2 = false;
  bool in_E3 = false;
  bool in_E4 = false;
  bool in_E5 = false;
  bool in_E6 = false;
  bool in_E7 = false;
  bool in_X = false;
  bool in_Y = false;
};

TreeClass classify(const Tree& T);

/// f ∈ E_u: no leaf of R_f extends u.
bool in_Eu(const Element& f, const BinarySeq& u);

/// A named membership test.
template <class Point>
struct Predicate {
  std::string name;
  std::function<bool(const Point&)> test;

  bool operator()(const Point& p) const { return test(p); }
};

using TreePredicate = Predicate<Tree>;
using ElementPredicate = Predicate<Element>;

template <class Point>
Predicate<Point> empty_predicate() {
  return {"empty", [](const Point&) { return false; }};
}

/// Named tree sets: E, Estar, Ea, Eb, E1..E7, X, Y, plus, minus, twice, half,
/// N (the length-4 tree fails the defining conditions of ∂T), improper (some
/// generator does not act properly on ∂T), all, empty. Throws UnknownSymbol.
TreePredicate tree_set(std::string_view name);

/// Union of comma-separated tree_set names; the empty string is the empty set.
TreePredicate tree_set_union(std::string_view names);

template <class Point>
Predicate<Point> union_of(std::vector<Predicate<Point>> parts) {
  if (parts.empty()) return empty_predicate<Point>();
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : "|") + p.name;
  return {name, [parts = std::move(parts)](const Point& x) {
            for (const auto& p : parts) {
              if (p(x)) return true;
            }
            return false;
          }};
}

template <class Point>
Predicate<Point> intersection(Predicate<Point> a, Predicate<Point> b) {
  std::string name = a.name + "&" + b.name;
  return {name, [a = std::move(a), b = std::move(b)](const Point& x) { return a(x) && b(x); }};
}

/// How an Element acts on points; nullopt means undefined.
template <class Point>
using ActFn = std::function<std::optional<Point>(const Point&, const Element&)>;

inline std::optional<Tree> act_on_tree(const Tree& T, const Element& g) { return act_tree(T, g); }
inline std::optional<Element> act_on_element(const Element& f, const Element& g) { return multiply(f, g); }

/// The set E·h = {x·h : x ∈ E}, tested as x·h^-1 ∈ E.
template <class Point>
Predicate<Point> translated(Predicate<Point> E, const Element& h, std::string h_name, ActFn<Point> act) {
  std::string name = E.name + "." + h_name;
  return {name, [E = std::move(E), h_inv = invert(h), act = std::move(act)](const Point& x) {
            auto y = act(x, h_inv);
            return y && E(*y);
          }};
}

template <class Point>
struct MarginalCertificate;

/// "marginalizer marginalizes subset off the set certified by off".
template <class Point>
struct MarginalPart {
  Predicate<Point> subset;
  Element marginalizer;
  std::string marginalizer_name;
  std::shared_ptr<const MarginalCertificate<Point>> off;
};

/// A witness that a set is marginal. No parts means the empty set, which is
/// 0-marginal; otherwise the set is the union of the parts' subsets.
template <class Point>
struct MarginalCertificate {
  std::string name;
  std::vector<MarginalPart<Point>> parts;

  bool empty() const { return parts.empty(); }

  bool contains(const Point& x) const {
    for (const auto& part : parts) {
      if (part.subset(x)) return true;
    }
    return false;
  }

  Predicate<Point> as_predicate(std::shared_ptr<const MarginalCertificate> self) const {
    return {name, [self = std::move(self)](const Point& x) { return self->contains(x); }};
  }

  /// The k for which the certificate shows k-marginality.
  std::size_t depth() const {
    if (empty()) return 0;
    std::size_t deepest = 0;
    for (const auto& part : parts) deepest = std::max(deepest, part.off->depth());
    return deepest + 1;
  }
};

template <class Point>
using CertificatePtr = std::shared_ptr<const MarginalCertificate<Point>>;

template <class Point>
CertificatePtr<Point> empty_certificate() {
  static const auto empty = std::make_shared<const MarginalCertificate<Point>>(MarginalCertificate<Point>{"empty", {}});
  return empty;
}

/// The certificate for E·h: each part (E_i, g_i, I_i) becomes
/// (E_i·h, h^-1 g_i h, I_i·h). Shared sub-certificates stay shared.
template <class Point>
CertificatePtr<Point> translate(const CertificatePtr<Point>& cert, const Element& h, const std::string& h_name,
                                const std::string& h_inv_name, ActFn<Point> act,
                                std::map<const MarginalCertificate<Point>*, CertificatePtr<Point>>* memo = nullptr) {
  std::map<const MarginalCertificate<Point>*, CertificatePtr<Point>> local;
  if (!memo) memo = &local;
  if (cert->empty()) return cert;
  if (auto it = memo->find(cert.get()); it != memo->end()) return it->second;
  MarginalCertificate<Point> out{cert->name + "." + h_name, {}};
  const Element h_inv = invert(h);
  for (const auto& part : cert->parts) {
    out.parts.push_back(MarginalPart<Point>{
        translated(part.subset, h, h_name, act), multiply(multiply(h_inv, part.marginalizer), h),
        h_inv_name + " " + part.marginalizer_name + " " + h_name,
        translate(part.off, h, h_name, h_inv_name, act, memo)});
  }
  auto result = std::make_shared<const MarginalCertificate<Point>>(std::move(out));
  memo->emplace(cert.get(), result);
  return result;
}

/// One failure of "g marginalizes E off I": start ∈ E, start·g^k ∈ E, and
/// start·g^i is defined and outside I for every i < k.
template <class Point>
struct MarginalCounterexample {
  Point start;
  std::size_t k;
  Point image;
};

template <class Point>
struct MarginalizationReport {
  std::string set;
  std::string marginalizer;
  std::string off;
  std::size_t leaf_bound = 0;
  std::size_t power_bound = 0;
  std::size_t points_scanned = 0;
  std::size_t trees_checked = 0;  // points of the set that were followed
  std::size_t counterexample_count = 0;
  std::vector<MarginalCounterexample<Point>> counterexamples;  // the first few, in scan order

  bool passed() const { return counterexample_count == 0; }
};

inline constexpr std::size_t kStoredCounterexamples = 16;

/// Bounded check of "g marginalizes E off I" over an explicit point stream.
template <class Point>
class MarginalizationChecker {
 public:
  MarginalizationChecker(const Element& g, Predicate<Point> E, Predicate<Point> I, std::size_t power_bound,
                         ActFn<Point> act)
      : E_(std::move(E)), I_(std::move(I)), act_(std::move(act)) {
    if (power_bound == 0) throw ResourceLimit("power bound must be positive");
    Element step;
    for (std::size_t k = 1; k <= power_bound; ++k) {
      step = multiply(step, g);
      powers_.push_back(step);
    }
  }

  void visit(const Point& x, MarginalizationReport<Point>& report) const {
    ++report.points_scanned;
    if (!E_(x)) return;
    ++report.trees_checked;
    std::optional<Point> previous = x;
    for (std::size_t k = 1; k <= powers_.size(); ++k) {
      // x·g^{k-1} undefined or in I blocks every later return.
      if (!previous || I_(*previous)) return;
      std::optional<Point> image = act_(x, powers_[k - 1]);
      if (image && E_(*image)) {
        if (report.counterexamples.size() < kStoredCounterexamples) {
          report.counterexamples.push_back({x, k, *image});
        }
        ++report.counterexample_count;
        return;
      }
      previous = std::move(image);
    }
  }

 private:
  Predicate<Point> E_;
  Predicate<Point> I_;
  ActFn<Point> act_;
  std::vector<Element> powers_;
};

template <class Point>
MarginalizationReport<Point> new_report(const std::string& marginalizer, const Predicate<Point>& E,
                                        const Predicate<Point>& I, std::size_t leaf_bound, std::size_t power_bound) {
  MarginalizationReport<Point> report;
  report.set = E.name;
  report.marginalizer = marginalizer;
  report.off = I.name;
  report.leaf_bound = leaf_bound;
  report.power_bound = power_bound;
  return report;
}

/// Checks every tree with at most leaf_bound leaves.
MarginalizationReport<Tree> marginalizes_off(const Element& g, const std::string& g_name, const TreePredicate& E,
                                             const TreePredicate& I, std::size_t leaf_bound, std::size_t power_bound);

/// Checks the given trees.
MarginalizationReport<Tree> marginalizes_off(const Element& g, const std::string& g_name, const TreePredicate& E,
                                             const TreePredicate& I, const std::vector<Tree>& trees,
                                             std::size_t power_bound);

/// Checks every element whose reduced diagram has at most leaf_bound leaves.
MarginalizationReport<Element> marginalizes_off(const Element& g, const std::string& g_name,
                                                const ElementPredicate& E, const ElementPredicate& I,
                                                std::size_t leaf_bound, std::size_t power_bound);

/// Every element whose reduced diagram has at most n leaves.
std::vector<Element> elements_up_to(std::size_t n);

/// Runs marginalizes_off for every part of every distinct sub-certificate.
template <class Point, class Check>
std::vector<MarginalizationReport<Point>> verify_certificate(const CertificatePtr<Point>& cert, Check check) {
  std::vector<MarginalizationReport<Point>> out;
  std::vector<const MarginalCertificate<Point>*> seen;
  std::vector<CertificatePtr<Point>> todo{cert};
  while (!todo.empty()) {
    auto c = todo.back();
    todo.pop_back();
    if (std::find(seen.begin(), seen.end(), c.get()) != seen.end()) continue;
    seen.push_back(c.get());
    for (const auto& part : c->parts) {
      out.push_back(check(part.marginalizer, part.marginalizer_name, part.subset, part.off->as_predicate(part.off)));
      todo.push_back(part.off);
    }
  }
  return out;
}

struct CertificateConstant {
  std::size_t value = 0;
  bool exact = true;  // false when some d_g was replaced by an upper bound
};

/// C = Σ_i (C(I_i) + d_{g_i}); the empty certificate has C = 0.
template <class Point>
CertificateConstant certificate_constant(const MarginalCertificate<Point>& cert,
                                         std::size_t cap = kDefaultWordLengthCap) {
  CertificateConstant out;
  for (const auto& part : cert.parts) {
    const CertificateConstant inner = certificate_constant(*part.off, cap);
    const LengthBound d = word_length_bound(part.marginalizer, cap);
    out.value += inner.value + d.value;
    out.exact = out.exact && inner.exact && d.exact;
  }
  return out;
}

/// The element g = (L, U) with U all sixteen words of length 4 and
/// L = {1^15} ∪ {1^i 0 : i < 15}.
Element length_four_spreader();

/// Certificates following the marginality proofs for trees:
/// "E", "Estar" and "improper".
std::map<std::string, CertificatePtr<Tree>> tree_certificates();

/// E_u marginalized by localized(u, x0).
CertificatePtr<Element> element_certificate(const BinarySeq& u);

/// The union of E_u over the sixteen words u of length 4: the elements whose
/// range tree does not refine the complete tree of depth 4.
CertificatePtr<Element> not_refining_length_four();

}  // namespace thompson
