#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace testing_support;

namespace {

// Composite map on one finite word, read straight off both leaf lists.
std::optional<std::string> compose_naive(const Element& f, const Element& g, const std::string& t) {
  auto mid = naive_apply(f.diagram(), t);
  if (!mid) return std::nullopt;
  return naive_apply(g.diagram(), *mid);
}

std::string text(const BinarySeq& s) { return s.empty() ? "" : s.to_string(); }

}  // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("reduce") {
    CHECK(reduce(parse_diagram("00,01,1->00,01,1")).is_identity());
    CHECK(reduce(parse_diagram("00,01,1->0,10,11")).to_string() == "00,01,1->0,10,11");
    CHECK(reduce(parse_diagram("000,001,01,1->00,01,10,11")).to_string() == "00,01,1->0,10,11");
    std::set<std::string> fixed;
    all_reductions(parse_diagram("000,001,01,1->00,01,10,11"), fixed);
    CHECK(fixed == std::set<std::string>{"00,01,1->0,10,11"});
    CHECK_THROWS_AS(parse_diagram("0,1->e"), InvalidDiagram);
  }

  TEST_CASE("expand") {
    const Element x0 = generator(0);
    CHECK(expand(Element(), tree("00,01,1"), Side::Range).to_string() == "00,01,1->00,01,1");
    const TreeDiagram d = expand(x0, tree("0,100,101,11"), Side::Range);
    CHECK(d.to_string() == "00,010,011,1->0,100,101,11");
    CHECK(reduce(d) == x0);
    CHECK(expand(x0, x0.domain(), Side::Domain) == x0.diagram());
    CHECK_THROWS_AS(expand(x0, tree("0,1"), Side::Range), NotRefinement);
  }

  TEST_CASE("fixed generators") {
    CHECK(generator(0).to_string() == "00,01,1->0,10,11");
    CHECK(generator(1).to_string() == "0,100,101,11->0,10,110,111");
    CHECK(invert(generator(0)).to_string() == "0,10,11->00,01,1");
    CHECK(invert(Element()).is_identity());
    CHECK(multiply(generator(0), generator(0)).domain() == tree("000,001,01,1"));
  }

  TEST_CASE("multiplication agrees with composing leaf maps") {
    std::mt19937_64 rng(17);
    const auto words = words_of_length(6);
    for (int trial = 0; trial < 60; ++trial) {
      const Element f = random_element(rng, 5);
      const Element g = random_element(rng, 5);
      const Element fg = multiply(f, g);
      for (const auto& w : words) {
        auto composed = compose_naive(f, g, text(w));
        if (!composed) continue;
        auto direct = naive_apply(fg.diagram(), text(w));
        REQUIRE(direct.has_value());
        CHECK(*direct == *composed);
      }
    }
    // x0 x0 by hand: 000 ↦ 00 ↦ 0, 001 ↦ 01 ↦ 10, 01 ↦ 10 ↦ 110, 1 ↦ 11 ↦ 111.
    CHECK(multiply(generator(0), generator(0)).to_string() == "000,001,01,1->0,10,110,111");
  }

  TEST_CASE("group axioms on random words") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
      const Element f = random_element(rng, 8);
      const Element g = random_element(rng, 8);
      const Element h = random_element(rng, 8);
      CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
      CHECK(multiply(f, Element()) == f);
      CHECK(multiply(Element(), f) == f);
      CHECK(multiply(f, invert(f)).is_identity());
      CHECK(multiply(invert(f), f).is_identity());
      CHECK(invert(invert(f)) == f);
      CHECK(f.diagram().reduced());
    }
  }

  TEST_CASE("reduction is confluent") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
      const Element f = random_element(rng, 8);
      for (int k = 0; k < 10; ++k) {
        const TreeDiagram big = random_expansion(rng, f, 1 + static_cast<std::size_t>(k));
        CHECK(reduce(big) == f);
        CHECK(random_collapse(rng, big) == f.diagram());
      }
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::set<std::string> fixed;
      const Element f = random_element(rng, 4);
      all_reductions(random_expansion(rng, f, 4), fixed);
      CHECK(fixed == std::set<std::string>{f.to_string()});
    }
  }

  TEST_CASE("presentation relators") {
    const Element A = generator(0);
    const Element B = generator(1);
    const Element AB = multiply(A, invert(B));
    CHECK(commutator(AB, evaluate_word(parse_word("x0^-1 x1 x0"))).is_identity());
    CHECK(commutator(AB, evaluate_word(parse_word("x0^-2 x1 x0^2"))).is_identity());
  }

  TEST_CASE("conjugation convention") {
    // x_n = x0^-(n-1) x1 x0^(n-1) satisfies x_i^-1 x_n x_i = x_{n+1}; the
    // mirrored conjugation x0^(n-1) x1 x0^-(n-1) does not.
    auto left = [](long n) { return multiply(multiply(power(generator(0), -(n - 1)), generator(1)), power(generator(0), n - 1)); };
    auto right = [](long n) { return multiply(multiply(power(generator(0), n - 1), generator(1)), power(generator(0), -(n - 1))); };
    for (long n = 1; n <= 6; ++n) CHECK(generator(static_cast<std::size_t>(n)) == left(n));
    CHECK(generator(2) == evaluate_word(parse_word("x0^-1 x1 x0")));
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t i = 0; i < n; ++i) {
        const Element gi = generator(i);
        CHECK(multiply(invert(gi), multiply(generator(n), gi)) == generator(n + 1));
      }
    }
    const Element r2 = right(2);
    CHECK(multiply(invert(generator(0)), multiply(r2, generator(0))) != right(3));
  }

  TEST_CASE("named elements match their words") {
    // The displayed leaf map for c is one expansion away from reduced.
    CHECK(named_element('c') == elem("000,001,01,10,11->00,01,100,101,11"));
    CHECK(named_element('c').to_string() == "00,01,10,11->0,100,101,11");
    CHECK(named_element('a') == word("x0^2 x1 x4 x2^-2 x0^-2"));
    CHECK(named_element('b') == word("x0^2 x1 x3^-1 x0^-2"));
    CHECK(named_element('c') == word("x0^2 x2^-1 x0^-1"));
    CHECK(named_element('d') == word("x0^2 x1^-1 x0^-1"));
    CHECK_THROWS_AS(named_element('e'), UnknownSymbol);
  }

  TEST_CASE("localized elements") {
    const Element x0 = generator(0);
    CHECK(localized(BinarySeq{}, x0) == x0);
    CHECK(localized(seq("1"), x0) == generator(1));
    CHECK(localized(seq("0"), x0).to_string() == "000,001,01,1->00,010,011,1");
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const Element f = random_element(rng, 4);
      std::uniform_int_distribution<std::size_t> len(0, 4);
      BinarySeq u;
      for (std::size_t i = len(rng); i > 0; --i) u.push_back(static_cast<int>(rng() & 1u));
      const Element g = localized(u, f);
      for (std::size_t n = 0; n <= u.size() + 6; ++n) {
        for (const auto& t : words_of_length(n)) {
          const auto image = apply_seq(g, t);
          if (!u.is_prefix_of(t)) {
            if (image) CHECK(*image == t);
            // Undefined only on prefixes of u.
            if (!image) CHECK(t.is_prefix_of(u));
            continue;
          }
          const auto inner = apply_seq(f, t.drop(u.size()));
          CHECK(image.has_value() == inner.has_value());
          if (image && inner) CHECK(*image == u.concat(*inner));
        }
      }
    }
  }

  TEST_CASE("words") {
    CHECK(evaluate_word({}).is_identity());
    const Word w = parse_word("x0 x1^-1 a c^-2");
    CHECK(w.size() == 5);
    CHECK(to_string(w) == "x0 x1^-1 a c^-1 c^-1");
    CHECK(evaluate_word(inverse(w)) == invert(evaluate_word(w)));
    CHECK(freely_reduced(parse_word("x0 x1 x1^-1 x0^-1 a")) == parse_word("a"));
    CHECK_THROWS_AS(parse_word("y0"), UnknownSymbol);
    CHECK_THROWS_AS(parse_word("x0^"), UnknownSymbol);
  }

  TEST_CASE("generator words evaluate back") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
      const Element f = random_element(rng, 10);
      const Word w = generator_word(f);
      for (const auto& letter : w) CHECK(letter.index <= 1);
      CHECK(evaluate_word(w) == f);
    }
    for (char c : {'a', 'b', 'c', 'd'}) CHECK(evaluate_word(generator_word(named_element(c))) == named_element(c));
  }
}
