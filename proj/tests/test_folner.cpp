#include <doctest.h>

#include <map>
#include <queue>

#include "support.hpp"

using namespace testing_support;

namespace {

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// Σ_γ Σ_s |μ(s·γ) − μ(s)| over every tree with the support's leaf counts;
// the action preserves leaf counts, so nothing else can contribute.
Rational brute_tree_sum(const WeightedSet<Tree>& mu, const std::vector<Element>& gens) {
  std::set<std::size_t> sizes;
  for (const auto& [T, w] : mu.weights()) sizes.insert(T.size());
  Rational sum = 0;
  for (std::size_t n : sizes) {
    for_each_tree(n, [&](const Tree& s) {
      for (const auto& g : gens) {
        const auto t = act_tree(s, g);
        const Rational there = t ? mu[*t] : Rational(0);
        sum += abs(there - mu[s]);
      }
    });
  }
  return sum;
}

// Σ_γ |A·γ △ A| / |A| with plain sets.
Rational set_constant(const std::set<Element>& A) {
  std::size_t sum = 0;
  for (const auto& gamma : standard_generators()) {
    std::set<Element> moved;
    for (const auto& f : A) moved.insert(multiply(f, gamma));
    for (const auto& f : moved) sum += !A.count(f);
    for (const auto& f : A) sum += !moved.count(f);
  }
  return q(static_cast<long>(sum), static_cast<long>(A.size()));
}

template <class Point>
WeightedSet<Point> random_weights(std::mt19937_64& rng, const std::vector<Point>& pool, std::size_t count) {
  WeightedSet<Point> mu;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long> num(1, 9);
  for (std::size_t i = 0; i < count; ++i) mu.add(pool[pick(rng)], q(num(rng), num(rng)));
  return mu;
}

std::vector<Tree> trees_up_to(std::size_t n) {
  std::vector<Tree> out;
  for_each_tree_up_to(n, [&](const Tree& T) { out.push_back(T); });
  return out;
}

std::map<Element, std::size_t> bfs_distances(std::size_t radius) {
  std::map<Element, std::size_t> dist{{Element(), 0}};
  std::queue<Element> todo;
  todo.push(Element());
  while (!todo.empty()) {
    const Element f = todo.front();
    todo.pop();
    if (dist[f] == radius) continue;
    for (const auto& gamma : standard_generators()) {
      const Element h = multiply(f, gamma);
      if (dist.emplace(h, dist[f] + 1).second) todo.push(h);
    }
  }
  return dist;
}

// Elements whose range refines the sixteen length-4 words.
std::vector<Element> range_refining_elements(std::mt19937_64& rng, std::size_t count) {
  std::vector<Element> out;
  const Tree U = Tree::complete(4);
  while (out.size() < count) {
    const Tree R = common_refinement(random_tree(rng, 1 + rng() % 12), U);
    const Tree L = random_tree(rng, R.size());
    const Element f = reduce(TreeDiagram(L, R));
    if (contained_in(U, f.range())) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_SUITE("folner") {
  TEST_CASE("rationals") {
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
  }

  TEST_CASE("weighted sets") {
    WeightedSet<Tree> mu;
    mu.add(Tree(), Rational(1, 2));
    mu.add(Tree(), Rational(-1, 2));
    CHECK(mu.empty());
    CHECK(mu[Tree()] == 0);
    CHECK_THROWS_AS(mu.add(Tree(), -1), InvariantViolation);
    CHECK_THROWS_AS(folner_constant(mu, tree_system()), ZeroMass);
  }

  TEST_CASE("single complete tree of depth 2") {
    const auto mu = indicator<Tree>(std::vector<Tree>{Tree::complete(2)});
    const auto sys = tree_system();
    CHECK(boundary_sum(mu, sys) == 6);
    CHECK(boundary_sum_by_edges(mu, sys) == 6);
    CHECK(brute_tree_sum(mu, sys.generators) == 6);
    CHECK(folner_constant(mu, sys) == 6);
    // x0 and x0^-1 are defined on it, x1 and x1^-1 are not.
    CHECK(act_tree(Tree::complete(2), generator(0)).has_value());
    CHECK(act_tree(Tree::complete(2), invert(generator(0))).has_value());
    CHECK_FALSE(act_tree(Tree::complete(2), generator(1)).has_value());
    CHECK_FALSE(act_tree(Tree::complete(2), invert(generator(1))).has_value());
  }

  TEST_CASE("degenerate systems") {
    const PartialActionSystem<Tree> none{{}, act_on_tree};
    CHECK(boundary_sum(indicator<Tree>(std::vector<Tree>{Tree::complete(2)}), none) == 0);
    // A toy involution swapping 0 and 1.
    const PartialActionSystem<int> flip{{generator(0)}, [](const int& s, const Element&) { return std::optional<int>(1 - s); }};
    WeightedSet<int> mu;
    mu.add(0, Rational(2, 3));
    mu.add(1, Rational(2, 3));
    CHECK(boundary_sum(mu, flip) == 0);
  }

  TEST_CASE("both summation routes and the brute-force sum agree") {
    std::mt19937_64 rng(79);
    const auto pool = trees_up_to(7);
    const auto sys = tree_system();
    for (int trial = 0; trial < 100; ++trial) {
      const auto mu = random_weights(rng, pool, 1 + trial % 12);
      const Rational s = boundary_sum(mu, sys);
      CHECK(s == boundary_sum_by_edges(mu, sys));
      CHECK(s == brute_tree_sum(mu, sys.generators));
      CHECK(folner_constant(mu.scaled(q(7, 3)), sys) == folner_constant(mu, sys));
    }
    const auto elements = ball(3);
    const auto esys = element_system();
    for (int trial = 0; trial < 50; ++trial) {
      const auto mu = random_weights(rng, elements, 1 + trial % 20);
      CHECK(boundary_sum(mu, esys) == boundary_sum_by_edges(mu, esys));
    }
  }

  TEST_CASE("indicator weights match the set formula") {
    std::mt19937_64 rng(83);
    const auto elements = ball(3);
    for (int trial = 0; trial < 50; ++trial) {
      std::set<Element> A;
      for (std::size_t i = 0, n = 1 + rng() % 30; i < n; ++i) A.insert(elements[rng() % elements.size()]);
      CHECK(folner_constant(indicator<Element>(A), element_system()) == set_constant(A));
    }
  }

  TEST_CASE("pushforward") {
    std::mt19937_64 rng(89);
    const auto pool = trees_up_to(6);
    const auto mu = random_weights(rng, pool, 10);
    const std::function<std::optional<Tree>(const Tree&)> same = [](const Tree& T) { return std::optional<Tree>(T); };
    CHECK(pushforward<Tree, Tree>(mu, same) == mu);
    const std::function<std::optional<Tree>(const Tree&)> constant = [](const Tree&) { return std::optional<Tree>(Tree()); };
    const auto point = pushforward<Tree, Tree>(mu, constant);
    CHECK(point.size() == 1);
    CHECK(point[Tree()] == mu.total());
    const std::function<std::optional<Tree>(const Tree&)> nowhere = [](const Tree&) { return std::optional<Tree>(); };
    CHECK_THROWS_AS((pushforward<Tree, Tree>(mu, nowhere)), PartialMap);
  }

  TEST_CASE("equivariant pushforwards do not raise the constant") {
    std::mt19937_64 rng(97);
    const auto pool = range_refining_elements(rng, 300);
    const std::function<std::optional<Tree>(const Element&)> range = [](const Element& f) {
      return std::optional<Tree>(f.range());
    };
    for (int trial = 0; trial < 100; ++trial) {
      const auto mu = random_weights(rng, pool, 1 + trial % 15);
      CHECK(equivariance_failures<Element, Tree>(mu, range, element_system(), tree_system()) == 0);
      const auto nu = pushforward<Element, Tree>(mu, range);
      CHECK(nu.total() == mu.total());
      CHECK(folner_constant(nu, tree_system()) <= folner_constant(mu, element_system()));
    }
    // The range map is not equivariant at the identity.
    const auto id = indicator<Element>(std::vector<Element>{Element()});
    CHECK(equivariance_failures<Element, Tree>(id, range, element_system(), tree_system()) > 0);
  }

  TEST_CASE("restriction") {
    std::mt19937_64 rng(101);
    const auto pool = trees_up_to(6);
    const auto sys = tree_system();
    const auto mu = random_weights(rng, pool, 8);
    const auto all = restrict<Tree>(mu, [](const Tree&) { return true; }, sys);
    CHECK(all.restricted == mu);
    CHECK(all.delta == 0);
    CHECK(all.bound == all.epsilon);
    CHECK_THROWS_AS(restrict<Tree>(mu, [](const Tree&) { return false; }, sys), ZeroMass);

    // Two points of equal weight, one dropped: δ = 1/2, bound = 2(ε + 4).
    WeightedSet<Tree> two;
    two.add(Tree::complete(2), 1);
    two.add(tree("0,10,11"), 1);
    const auto half = restrict<Tree>(two, [](const Tree& T) { return T.size() == 4; }, sys);
    CHECK(half.delta == Rational(1, 2));
    CHECK(half.bound == 2 * (half.epsilon + 4));
    CHECK(folner_constant(half.restricted, sys) <= half.bound);

    for (int trial = 0; trial < 200; ++trial) {
      const auto m = random_weights(rng, pool, 1 + trial % 20);
      const std::size_t cut = 2 + rng() % 5;
      const std::function<bool(const Tree&)> A = [cut](const Tree& T) { return T.size() <= cut || T.leaf(0).size() == 2; };
      bool any = false;
      for (const auto& [T, w] : m.weights()) any = any || A(T);
      if (!any) continue;
      const auto r = restrict<Tree>(m, A, sys);
      CHECK(folner_constant(r.restricted, sys) <= r.bound);
    }
  }

  TEST_CASE("components") {
    const auto sys = tree_system();
    // T and T·x0 are adjacent.
    WeightedSet<Tree> joined;
    joined.add(Tree::complete(2), 1);
    joined.add(*act_tree(Tree::complete(2), generator(0)), 1);
    CHECK(components(joined, sys).size() == 1);
    CHECK(components(joined, sys).front() == joined);

    WeightedSet<Tree> apart;
    apart.add(Tree::complete(2), 1);
    apart.add(Tree::complete(3), 1);
    const auto parts = components(apart, sys);
    REQUIRE(parts.size() == 2);
    CHECK(folner_constant(parts[0], sys) == 6);
    CHECK(folner_constant(parts[1], sys) == folner_constant(indicator<Tree>(std::vector<Tree>{Tree::complete(3)}), sys));

    std::mt19937_64 rng(103);
    const auto pool = trees_up_to(6);
    for (int trial = 0; trial < 100; ++trial) {
      const auto mu = random_weights(rng, pool, 1 + trial % 25);
      const auto cs = components(mu, sys);
      Rational mass = 0;
      Rational best = folner_constant(cs.front(), sys);
      for (const auto& c : cs) {
        mass += c.total();
        best = std::min(best, folner_constant(c, sys));
      }
      CHECK(mass == mu.total());
      CHECK(best <= folner_constant(mu, sys));
    }
  }

  TEST_CASE("word length") {
    CHECK(word_length(Element()) == 0u);
    CHECK(word_length(generator(0)) == 1u);
    CHECK(word_length(named_element('c')) == 2u);
    CHECK(parse_word("x0^2 x2^-1 x0^-1").size() == 4);
    CHECK(generator_word(named_element('c')).size() <= 8);
    const auto dist = bfs_distances(7);
    for (const auto& [f, d] : dist) {
      REQUIRE(word_length(f) == d);
    }
    CHECK_FALSE(word_length(length_four_spreader()).has_value());
    const auto bound = word_length_bound(length_four_spreader());
    CHECK_FALSE(bound.exact);
    CHECK(bound.value == generator_word(length_four_spreader()).size());

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 100; ++trial) {
      const Element g = random_element(rng, 7);
      const Element h = random_element(rng, 7);
      CHECK(word_length(g) == word_length(invert(g)));
      const auto gh = word_length(multiply(g, h));
      REQUIRE(gh.has_value());
      CHECK(*gh <= *word_length(g) + *word_length(h));
    }
  }

  TEST_CASE("displacement") {
    std::mt19937_64 rng(109);
    const auto elements = ball(2);
    const auto sys = element_system();
    const auto tsys = tree_system();
    const auto pool = trees_up_to(7);
    for (int trial = 0; trial < 100; ++trial) {
      const auto mu = random_weights(rng, elements, 1 + trial % 10);
      CHECK(displacement_sum(mu, Element(), sys) == 0);
      for (const auto& gamma : standard_generators()) CHECK(displacement_sum(mu, gamma, sys) <= boundary_sum(mu, sys));
      const auto check = displacement_check(mu, power(generator(0), 2), sys);
      CHECK(check.d.value == 2);
      CHECK(check.holds);
      const auto nu = random_weights(rng, pool, 1 + trial % 10);
      CHECK(displacement_check(nu, multiply(generator(0), generator(1)), tsys).holds);
    }
  }

  TEST_CASE("mass bound") {
    std::mt19937_64 rng(113);
    const auto pool = trees_up_to(10);
    const auto sys = tree_system();
    const auto Ea = tree_set("Ea");
    const Element a = named_element('a');
    std::size_t met = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto mu = random_weights(rng, pool, 1 + trial % 30);
      const auto r = marginal_mass_bound_check<Tree>(mu, Ea.test, a, sys);
      CHECK(r.precondition);
      CHECK(r.holds);
      met += r.mass_of_E > 0;
      const auto none = marginal_mass_bound_check<Tree>(mu, [](const Tree&) { return false; }, a, sys);
      CHECK(none.mass_of_E == 0);
      CHECK(none.holds);
    }
    CHECK(met > 0);
    // E = the whole support, marginalized by the identity: every orbit
    // returns at once.
    WeightedSet<Tree> mu;
    mu.add(Tree::complete(2), 1);
    const auto bad = marginal_mass_bound_check<Tree>(mu, [](const Tree&) { return true; }, Element(), sys);
    CHECK_FALSE(bad.precondition);
  }
}
