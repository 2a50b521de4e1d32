#include "thompson/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace thompson {

TreeDiagram::TreeDiagram(Tree domain, Tree range) : domain_(std::move(domain)), range_(std::move(range)) {
  if (domain_.size() != range_.size()) {
    throw InvalidDiagram("tree diagram sides have " + std::to_string(domain_.size()) + " and " +
                         std::to_string(range_.size()) + " leaves");
  }
}

std::vector<std::size_t> TreeDiagram::collapsible_pairs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    const auto& s0 = domain_.leaf(i);
    const auto& s1 = domain_.leaf(i + 1);
    const auto& t0 = range_.leaf(i);
    const auto& t1 = range_.leaf(i + 1);
    // Consecutive leaves ending in 0 then 1 are necessarily siblings.
    if (s0.back() == 0 && t0.back() == 0 && s1.back() == 1 && t1.back() == 1) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<BinarySeq> collapse_at(std::span<const BinarySeq> leaves, std::size_t i) {
  std::vector<BinarySeq> out;
  out.reserve(leaves.size() - 1);
  out.insert(out.end(), leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(leaves[i].prefix(leaves[i].size() - 1));
  out.insert(out.end(), leaves.begin() + static_cast<std::ptrdiff_t>(i) + 2, leaves.end());
  return out;
}

}  // namespace

TreeDiagram TreeDiagram::collapse(std::size_t i) const {
  return TreeDiagram(Tree::from_sorted_unchecked(collapse_at(domain_.leaves(), i)),
                     Tree::from_sorted_unchecked(collapse_at(range_.leaves(), i)));
}

std::string TreeDiagram::to_string() const { return domain_.to_string() + "->" + range_.to_string(); }

TreeDiagram parse_diagram(std::string_view text) {
  auto arrow = text.find("->");
  if (arrow == std::string_view::npos) throw ParseError("diagram text needs 'L->R': '" + std::string(text) + "'");
  return TreeDiagram(parse_tree(text.substr(0, arrow)), parse_tree(text.substr(arrow + 2)));
}

Element reduce(const TreeDiagram& d) {
  // Left-to-right stack reduction: a collapse can only create a new pair with
  // the entry directly below it on the stack or with the next input.
  std::vector<BinarySeq> dom;
  std::vector<BinarySeq> ran;
  dom.reserve(d.size());
  ran.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    dom.push_back(d.domain().leaf(i));
    ran.push_back(d.range().leaf(i));
    while (dom.size() >= 2) {
      const auto n = dom.size();
      const auto& s0 = dom[n - 2];
      const auto& s1 = dom[n - 1];
      const auto& t0 = ran[n - 2];
      const auto& t1 = ran[n - 1];
      if (!(s0.back() == 0 && t0.back() == 0 && s1.back() == 1 && t1.back() == 1)) break;
      const BinarySeq sp = s0.prefix(s0.size() - 1);
      const BinarySeq tp = t0.prefix(t0.size() - 1);
      dom.resize(n - 2);
      ran.resize(n - 2);
      dom.push_back(sp);
      ran.push_back(tp);
    }
  }
  return Element(TreeDiagram(Tree::from_sorted_unchecked(std::move(dom)), Tree::from_sorted_unchecked(std::move(ran))));
}

TreeDiagram expand(const TreeDiagram& d, const Tree& W, Side side) {
  const Tree& fixed = side == Side::Range ? d.range() : d.domain();
  const Tree& other = side == Side::Range ? d.domain() : d.range();
  if (!contained_in(fixed, W)) {
    throw NotRefinement(W.to_string() + " does not refine " + fixed.to_string());
  }
  std::vector<BinarySeq> out;
  out.reserve(W.size());
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const auto& t = fixed.leaf(i);
    auto [first, last] = W.extension_range(t);
    for (std::size_t j = first; j < last; ++j) out.push_back(other.leaf(i).concat(W.leaf(j).drop(t.size())));
  }
  Tree grown = Tree::from_sorted_unchecked(std::move(out));
  return side == Side::Range ? TreeDiagram(std::move(grown), W) : TreeDiagram(W, std::move(grown));
}

Element multiply(const Element& f, const Element& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  const Tree W = common_refinement(f.range(), g.domain());
  const TreeDiagram first = expand(f, W, Side::Range);
  const TreeDiagram second = expand(g, W, Side::Domain);
  return reduce(TreeDiagram(first.domain(), second.range()));
}

Element invert(const Element& f) { return reduce(TreeDiagram(f.range(), f.domain())); }

Element power(const Element& f, long k) {
  const Element base = k < 0 ? invert(f) : f;
  Element out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

namespace {

Element from_map(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<BinarySeq> dom;
  std::vector<BinarySeq> ran;
  for (const auto& [s, t] : pairs) {
    dom.push_back(BinarySeq::parse(s));
    ran.push_back(BinarySeq::parse(t));
  }
  return reduce(TreeDiagram(Tree::from_leaves(dom), Tree::from_leaves(ran)));
}

const Element& x0_element() {
  static const Element x0 = from_map({{"00", "0"}, {"01", "10"}, {"1", "11"}});
  return x0;
}

const Element& x1_element() {
  static const Element x1 = from_map({{"0", "0"}, {"100", "10"}, {"101", "110"}, {"11", "111"}});
  return x1;
}

}  // namespace

Element generator(std::size_t n) {
  if (n == 0) return x0_element();
  if (n == 1) return x1_element();
  const auto shift = static_cast<long>(n - 1);
  return multiply(multiply(power(x0_element(), -shift), x1_element()), power(x0_element(), shift));
}

Element named_element(char name) {
  switch (name) {
    case 'a': {
      static const Element a = from_map({{"000", "000"},
                                         {"0010", "001"},
                                         {"0011", "0100"},
                                         {"01", "0101"},
                                         {"100", "011"},
                                         {"101", "10"},
                                         {"11", "11"}});
      return a;
    }
    case 'b': {
      static const Element b = from_map(
          {{"000", "000"}, {"0010", "001"}, {"0011", "01"}, {"01", "100"}, {"10", "101"}, {"11", "11"}});
      return b;
    }
    case 'c': {
      static const Element c = from_map({{"000", "00"}, {"001", "01"}, {"01", "100"}, {"10", "101"}, {"11", "11"}});
      return c;
    }
    case 'd': {
      static const Element d = from_map({{"000", "00"}, {"001", "010"}, {"01", "011"}, {"10", "10"}, {"11", "11"}});
      return d;
    }
    default:
      throw UnknownSymbol(std::string("unknown named element '") + name + "'");
  }
}

Element localized(const BinarySeq& u, const Element& f) {
  std::vector<BinarySeq> dom;
  std::vector<BinarySeq> ran;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const BinarySeq sibling = u.prefix(i).child(1 - u[i]);
    dom.push_back(sibling);
    ran.push_back(sibling);
  }
  for (const auto& s : f.domain().leaves()) dom.push_back(u.concat(s));
  for (const auto& t : f.range().leaves()) ran.push_back(u.concat(t));
  std::sort(dom.begin(), dom.end());
  std::sort(ran.begin(), ran.end());
  return reduce(TreeDiagram(Tree::from_sorted_unchecked(std::move(dom)), Tree::from_sorted_unchecked(std::move(ran))));
}

Element Letter::value() const {
  const Element base = kind == Kind::Generator ? generator(index) : named_element(name);
  return exponent == 1 ? base : invert(base);
}

std::string Letter::to_string() const {
  std::string out = kind == Kind::Generator ? "x" + std::to_string(index) : std::string(1, name);
  if (exponent != 1) out += "^" + std::to_string(exponent);
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    const auto caret = token.find('^');
    const std::string_view head = token.substr(0, caret);
    long exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view tail = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
      if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
        throw UnknownSymbol("bad exponent in token '" + std::string(token) + "'");
      }
    }

    Letter letter;
    if (head.size() >= 2 && head[0] == 'x') {
      std::size_t index = 0;
      auto [ptr, ec] = std::from_chars(head.data() + 1, head.data() + head.size(), index);
      if (ec != std::errc{} || ptr != head.data() + head.size()) {
        throw UnknownSymbol("unknown symbol '" + std::string(head) + "'");
      }
      letter = Letter::x(index);
    } else if (head.size() == 1 && head[0] >= 'a' && head[0] <= 'd') {
      letter = Letter::named(head[0]);
    } else {
      throw UnknownSymbol("unknown symbol '" + std::string(head) + "'");
    }
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
      out.push_back(exponent < 0 ? letter.inverse() : letter);
    }
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += w[i].to_string();
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Element evaluate_word(const Word& w) {
  Element out;
  for (const auto& letter : w) out = multiply(out, letter.value());
  return out;
}

Word freely_reduced(Word w) {
  Word out;
  out.reserve(w.size());
  for (const auto& letter : w) {
    if (!out.empty() && out.back() == letter.inverse()) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

namespace {

// Applies x_j, i.e. x_0 acting below 1^j: p00y ↦ p0y, p01y ↦ p10y, p1y ↦ p11y.
std::vector<BinarySeq> rotate_right(const std::vector<BinarySeq>& leaves, std::size_t j) {
  const BinarySeq p = BinarySeq::repeated(1, j);
  const BinarySeq p00 = p.child(0).child(0);
  const BinarySeq p01 = p.child(0).child(1);
  const BinarySeq p1 = p.child(1);
  std::vector<BinarySeq> out;
  out.reserve(leaves.size());
  for (const auto& s : leaves) {
    if (p00.is_prefix_of(s)) {
      out.push_back(p.child(0).concat(s.drop(j + 2)));
    } else if (p01.is_prefix_of(s)) {
      out.push_back(p.child(1).child(0).concat(s.drop(j + 2)));
    } else if (p1.is_prefix_of(s)) {
      out.push_back(p.child(1).child(1).concat(s.drop(j + 1)));
    } else {
      out.push_back(s);
    }
  }
  return out;
}

// Γ-word w with T·w equal to the right vine on |T| leaves.
Word vine_word(const Tree& T) {
  Word out;
  std::vector<BinarySeq> leaves(T.leaves().begin(), T.leaves().end());
  while (true) {
    // The first spine node 1^j whose left child is internal.
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j + 1 < leaves.size(); ++j) {
      const BinarySeq left = BinarySeq::repeated(1, j).child(0);
      const auto block = std::count_if(leaves.begin(), leaves.end(),
                                       [&](const BinarySeq& s) { return left.is_prefix_of(s); });
      if (block > 1) {
        pivot = j;
        break;
      }
      if (block == 0) break;
    }
    if (!pivot) break;
    leaves = rotate_right(leaves, *pivot);
    if (*pivot == 0) {
      out.push_back(Letter::x(0));
    } else {
      for (std::size_t i = 1; i < *pivot; ++i) out.push_back(Letter::x(0, -1));
      out.push_back(Letter::x(1));
      for (std::size_t i = 1; i < *pivot; ++i) out.push_back(Letter::x(0));
    }
  }
  return out;
}

}  // namespace

Word generator_word(const Element& f) {
  Word w = vine_word(f.domain());
  const Word back = inverse(vine_word(f.range()));
  w.insert(w.end(), back.begin(), back.end());
  return freely_reduced(std::move(w));
}

}  // namespace thompson
