// Command-line front end. Exit codes: 0 ok, 1 usage or input error,
// 2 a check found a counterexample.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thompson/thompson.hpp"

using namespace thompson;
using json = nlohmann::ordered_json;

namespace {

constexpr int kCounterexample = 2;

Element parse_element(const std::string& text) {
  if (text == "id" || text == "e") return Element();
  if (text.find("->") != std::string::npos) return reduce(parse_diagram(text));
  return evaluate_word(parse_word(text));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::string opt_to_string(const std::optional<Tree>& T) { return T ? T->to_string() : "undefined"; }

// Weighted sets as [{"point": ..., "weight": "p/q"}]. Points are trees, or
// elements when written as words or L->R diagrams.
enum class Kind { Trees, Elements };

Kind detect_kind(const json& items, const std::string& forced) {
  if (forced == "trees") return Kind::Trees;
  if (forced == "elements") return Kind::Elements;
  if (!forced.empty() && forced != "auto") throw ParseError("unknown point kind '" + forced + "'");
  for (const auto& item : items) {
    const std::string p = item.at("point").get<std::string>();
    if (p.find("->") != std::string::npos || p.find('x') != std::string::npos || p == "id") return Kind::Elements;
  }
  return Kind::Trees;
}

template <class Point>
WeightedSet<Point> read_weights(const json& items, const std::function<Point(const std::string&)>& parse) {
  WeightedSet<Point> mu;
  for (const auto& item : items) {
    const json& w = item.at("weight");
    const Rational weight = w.is_string() ? parse_rational(w.get<std::string>()) : Rational(w.get<long>());
    if (weight < 0) throw ParseError("negative weight");
    mu.add(parse(item.at("point").get<std::string>()), weight);
  }
  return mu;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <class Point>
json weights_json(const WeightedSet<Point>& mu) {
  json out = json::array();
  for (const auto& [p, w] : mu.weights()) out.push_back({{"point", p.to_string()}, {"weight", to_string(w)}});
  return out;
}

template <class Point>
json counterexamples_json(const MarginalizationReport<Point>& r) {
  json out = json::array();
  for (const auto& c : r.counterexamples) {
    out.push_back({{"start", c.start.to_string()}, {"k", c.k}, {"image", c.image.to_string()}});
  }
  return out;
}

template <class Point>
json report_json(const MarginalizationReport<Point>& r) {
  return {{"set", r.set},
          {"marginalizer", r.marginalizer},
          {"off", r.off},
          {"bounds", {{"leaves", r.leaf_bound}, {"power", r.power_bound}}},
          {"counterexamples", counterexamples_json(r)},
          {"counterexample_count", r.counterexample_count},
          {"trees_checked", r.trees_checked}};
}

json class_json(const Tree& T) {
  const auto c = classify(T);
  const auto& s = c.sizes;
  json sizes{{"001", s.s001}, {"01", s.s01},   {"10", s.s10},  {"0010", s.s0010},
             {"0011", s.s0011}, {"100", s.s100}, {"101", s.s101}};
  json member = json::array();
  const std::pair<const char*, bool> flags[] = {
      {"plus", c.plus}, {"minus", c.minus}, {"twice", c.twice}, {"half", c.half}, {"E", c.in_E},
      {"Estar", c.in_Estar}, {"Ea", c.in_Ea}, {"Eb", c.in_Eb}, {"E1", c.in_E1}, {"E2", c.in_E2},
      {"E3", c.in_E3}, {"E4", c.in_E4}, {"E5", c.in_E5}, {"E6", c.in_E6}, {"E7", c.in_E7},
      {"X", c.in_X}, {"Y", c.in_Y}};
  for (const auto& [name, on] : flags) {
    if (on) member.push_back(name);
  }
  const std::string extra[] = {"N", "improper"};
  for (const auto& name : extra) {
    if (tree_set(name)(T)) member.push_back(name);
  }
  return {{"tree", T.to_string()}, {"sizes", sizes}, {"sets", member}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson's group F: tree diagrams, boundaries, marginal sets and Folner checks"};
  app.require_subcommand(1);
  std::string config_path;
  bool deep = false;
  app.add_option("--config", config_path, "verification bounds (JSON)");
  app.add_flag("--deep", deep, "use the deep leaf and power bounds");

  int status = 0;
  std::function<void()> action;
  auto config = [&] {
    VerificationConfig c = config_path.empty() ? VerificationConfig{} : VerificationConfig::load(config_path);
    return deep ? c.deep() : c;
  };

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "binary trees");
  tree_cmd->require_subcommand(1);
  std::string tree_text, word_text;
  std::size_t leaves = 0;
  bool count_only = false;
  auto* validate = tree_cmd->add_subcommand("validate", "check a comma-separated leaf list");
  validate->add_option("tree", tree_text)->required();
  validate->callback([&] {
    action = [&] {
      const Tree T = parse_tree(tree_text);
      std::cout << T.to_string() << "\nleaves " << T.size() << "\n";
    };
  });
  auto* enumerate = tree_cmd->add_subcommand("enumerate", "every tree with n leaves");
  enumerate->add_option("-n,--leaves", leaves)->required();
  enumerate->add_flag("--count", count_only, "print only the number of trees");
  enumerate->callback([&] {
    action = [&] {
      std::size_t count = 0;
      for_each_tree(leaves, [&](const Tree& T) {
        ++count;
        if (!count_only) std::cout << T.to_string() << "\n";
      });
      if (count_only) std::cout << count << "\n";
    };
  });
  auto* subtree = tree_cmd->add_subcommand("subtree", "T/u");
  subtree->add_option("tree", tree_text)->required();
  subtree->add_option("u", word_text)->required();
  subtree->callback([&] {
    action = [&] {
      const auto S = parse_tree(tree_text).subtree(BinarySeq::parse(word_text));
      if (!S) throw ParseError("no subtree at " + word_text);
      std::cout << S->to_string() << "\nleaves " << S->size() << "\n";
    };
  });

  // elem
  auto* elem_cmd = app.add_subcommand("elem", "elements as words or L->R diagrams");
  elem_cmd->require_subcommand(1);
  std::vector<std::string> elems;
  auto* reduce_cmd = elem_cmd->add_subcommand("reduce", "reduced diagram");
  reduce_cmd->add_option("element", elems)->required()->expected(1);
  reduce_cmd->callback([&] { action = [&] { std::cout << parse_element(elems[0]).to_string() << "\n"; }; });
  auto* mul = elem_cmd->add_subcommand("mul", "product, left to right");
  mul->add_option("elements", elems)->required()->expected(1, -1);
  mul->callback([&] {
    action = [&] {
      Element out;
      for (const auto& e : elems) out = multiply(out, parse_element(e));
      std::cout << out.to_string() << "\n";
    };
  });
  auto* inv = elem_cmd->add_subcommand("inv", "inverse");
  inv->add_option("element", elems)->required()->expected(1);
  inv->callback([&] { action = [&] { std::cout << invert(parse_element(elems[0])).to_string() << "\n"; }; });
  auto* word_cmd = elem_cmd->add_subcommand("word", "a word in x0, x1 and the word length");
  word_cmd->add_option("element", elems)->required()->expected(1);
  word_cmd->callback([&] {
    action = [&] {
      const Element f = parse_element(elems[0]);
      const auto c = config();
      const auto d = word_length_bound(f, c.word_length_cap);
      std::cout << to_string(generator_word(f)) << "\n" << (d.exact ? "length " : "length<= ") << d.value << "\n";
    };
  });

  // act
  auto* act_cmd = app.add_subcommand("act", "the partial right action on trees and sequences");
  act_cmd->require_subcommand(1);
  std::string target, by;
  bool as_seq = false;
  auto* apply = act_cmd->add_subcommand("apply", "T·g or t·g");
  apply->add_option("target", target)->required();
  apply->add_option("element", by)->required();
  apply->add_flag("--seq", as_seq, "target is a binary sequence");
  apply->callback([&] {
    action = [&] {
      const Element g = parse_element(by);
      if (as_seq) {
        const auto t = apply_seq(g, BinarySeq::parse(target));
        std::cout << (t ? (t->empty() ? std::string("e") : t->to_string()) : "undefined") << "\n";
        if (!t) status = 1;
      } else {
        const auto T = act_tree(parse_tree(target), g);
        std::cout << opt_to_string(T) << "\n";
        if (!T) status = 1;
      }
    };
  });
  auto* proper = act_cmd->add_subcommand("proper", "does g act properly");
  proper->add_option("target", target)->required();
  proper->add_option("element", by)->required();
  proper->add_flag("--seq", as_seq, "target is a binary sequence");
  proper->callback([&] {
    action = [&] {
      const Element g = parse_element(by);
      const bool p = as_seq ? acts_properly_seq(g, BinarySeq::parse(target)) : acts_properly_tree(g, parse_tree(target));
      std::cout << (p ? "proper" : "not proper") << "\n";
    };
  });

  // boundary
  auto* boundary_cmd = app.add_subcommand("boundary", "the tree ∂T");
  boundary_cmd->require_subcommand(1);
  bool oracle = false;
  auto* run = boundary_cmd->add_subcommand("run", "∂T as JSON");
  run->add_option("tree", tree_text)->required();
  run->add_flag("--oracle", oracle, "search every pruning instead of building directly");
  run->callback([&] {
    action = [&] {
      const Tree T = parse_tree(tree_text);
      const auto r = boundary_tree(T, oracle ? BoundaryMode::Oracle : BoundaryMode::Fast, config().oracle_leaf_bound);
      json tower = json::array();
      for (const auto& t : boundary_tower(T)) tower.push_back(t.size());
      json out{{"input", T.to_string()},
               {"partial", r.tree.to_string()},
               {"direction", r.direction ? json(to_string(*r.direction)) : json(nullptr)},
               {"sizes", r.witness_sizes},
               {"tower_sizes", tower}};
      std::cout << out.dump(2) << "\n";
    };
  });
  auto* tower_cmd = boundary_cmd->add_subcommand("tower", "T, ∂T, ∂∂T, ...");
  tower_cmd->add_option("tree", tree_text)->required();
  tower_cmd->callback([&] {
    action = [&] {
      for (const auto& t : boundary_tower(parse_tree(tree_text))) std::cout << t.size() << " " << t.to_string() << "\n";
    };
  });

  // marginal
  auto* marginal_cmd = app.add_subcommand("marginal", "marginal sets of trees");
  marginal_cmd->require_subcommand(1);
  std::string set_name, off_name = "empty", certificate;
  std::size_t leaf_bound = 0, power_bound = 0;
  auto* check = marginal_cmd->add_subcommand("check", "bounded check of 'g marginalizes E off I'");
  check->add_option("--set", set_name, "E");
  check->add_option("--by,--marginalizer", by, "g, a word or diagram");
  check->add_option("--off", off_name, "I (comma-separated union)");
  check->add_option("--certificate", certificate, "check every part of E, Estar, improper or not_refining_U");
  check->add_option("--leaves", leaf_bound, "leaf bound (default from config)");
  check->add_option("--power", power_bound, "power bound (default from config)");
  check->callback([&] {
    action = [&] {
      const auto c = config();
      const std::size_t L = leaf_bound ? leaf_bound : c.leaf_bound;
      const std::size_t P = power_bound ? power_bound : c.power_bound;
      json out = json::array();
      bool failed = false;
      if (!certificate.empty()) {
        if (certificate == "not_refining_U") {
          const std::size_t EL = leaf_bound ? leaf_bound : c.element_leaf_bound;
          for (const auto& r : verify_certificate<Element>(not_refining_length_four(), [&](const Element& g,
                                                                                        const std::string& n,
                                                                                        const ElementPredicate& E,
                                                                                        const ElementPredicate& I) {
                 return marginalizes_off(g, n, E, I, EL, P);
               })) {
            failed = failed || !r.passed();
            out.push_back(report_json(r));
          }
        } else {
          const auto certs = tree_certificates();
          auto it = certs.find(certificate);
          if (it == certs.end()) throw UnknownSymbol("unknown certificate '" + certificate + "'");
          for (const auto& r : verify_certificate<Tree>(it->second, [&](const Element& g, const std::string& n,
                                                                      const TreePredicate& E, const TreePredicate& I) {
                 return marginalizes_off(g, n, E, I, L, P);
               })) {
            failed = failed || !r.passed();
            out.push_back(report_json(r));
          }
        }
        std::cout << out.dump(2) << "\n";
      } else {
        if (set_name.empty() || by.empty()) throw ParseError("--set and --by are required without --certificate");
        const auto r = marginalizes_off(parse_element(by), by, tree_set(set_name), tree_set_union(off_name), L, P);
        failed = !r.passed();
        std::cout << report_json(r).dump(2) << "\n";
      }
      if (failed) status = kCounterexample;
    };
  });
  auto* classify_cmd = marginal_cmd->add_subcommand("classify", "subtree sizes and the named sets containing T");
  classify_cmd->add_option("tree", tree_text)->required();
  classify_cmd->callback([&] { action = [&] { std::cout << class_json(parse_tree(tree_text)).dump(2) << "\n"; }; });

  // folner
  auto* folner_cmd = app.add_subcommand("folner", "weighted sets [{\"point\",\"weight\"}]");
  folner_cmd->require_subcommand(1);
  std::string input = "-", kind = "auto", map_name = "range";
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "JSON file, - for stdin");
    cmd->add_option("--kind", kind, "trees, elements or auto");
  };
  const std::function<Tree(const std::string&)> parse_tree_point = [](const std::string& s) { return parse_tree(s); };
  const std::function<Element(const std::string&)> parse_element_point = [](const std::string& s) {
    return parse_element(s);
  };
  auto* constant = folner_cmd->add_subcommand("constant", "Σ_γ Σ_s |μ(s·γ) − μ(s)| / μ(S)");
  add_input(constant);
  constant->callback([&] {
    action = [&] {
      const json items = parse_json(read_input(input));
      json out;
      if (detect_kind(items, kind) == Kind::Trees) {
        const auto mu = read_weights(items, parse_tree_point);
        out = {{"kind", "trees"}, {"support", mu.size()}, {"mass", to_string(mu.total())},
               {"boundary_sum", to_string(boundary_sum(mu, tree_system()))},
               {"constant", to_string(folner_constant(mu, tree_system()))}};
      } else {
        const auto mu = read_weights(items, parse_element_point);
        out = {{"kind", "elements"}, {"support", mu.size()}, {"mass", to_string(mu.total())},
               {"boundary_sum", to_string(boundary_sum(mu, element_system()))},
               {"constant", to_string(folner_constant(mu, element_system()))}};
      }
      std::cout << out.dump(2) << "\n";
    };
  });
  auto* comps = folner_cmd->add_subcommand("components", "restrictions to connected components");
  add_input(comps);
  comps->callback([&] {
    action = [&] {
      const json items = parse_json(read_input(input));
      json out = json::array();
      auto emit = [&](const auto& parts, const auto& sys) {
        for (const auto& part : parts) {
          out.push_back({{"constant", to_string(folner_constant(part, sys))}, {"weights", weights_json(part)}});
        }
      };
      if (detect_kind(items, kind) == Kind::Trees) {
        emit(components(read_weights(items, parse_tree_point), tree_system()), tree_system());
      } else {
        emit(components(read_weights(items, parse_element_point), element_system()), element_system());
      }
      std::cout << out.dump(2) << "\n";
    };
  });
  auto* push = folner_cmd->add_subcommand("pushforward", "along f ↦ R_f (elements) or T ↦ ∂T (trees)");
  add_input(push);
  push->add_option("--map", map_name, "range or boundary");
  push->callback([&] {
    action = [&] {
      const json items = parse_json(read_input(input));
      WeightedSet<Tree> nu;
      std::size_t failures = 0;
      Rational before;
      if (map_name == "range") {
        const auto mu = read_weights(items, parse_element_point);
        const std::function<std::optional<Tree>(const Element&)> f = [](const Element& e) {
          return std::optional<Tree>(e.range());
        };
        nu = pushforward<Element, Tree>(mu, f);
        failures = equivariance_failures<Element, Tree>(mu, f, element_system(), tree_system());
        before = folner_constant(mu, element_system());
      } else if (map_name == "boundary") {
        const auto mu = read_weights(items, parse_tree_point);
        const std::function<std::optional<Tree>(const Tree&)> f = [](const Tree& T) {
          return std::optional<Tree>(boundary_tree(T).tree);
        };
        nu = pushforward<Tree, Tree>(mu, f);
        failures = equivariance_failures<Tree, Tree>(mu, f, tree_system(), tree_system());
        before = folner_constant(mu, tree_system());
      } else {
        throw UnknownSymbol("unknown map '" + map_name + "'");
      }
      json out{{"map", map_name},
               {"constant_before", to_string(before)},
               {"constant_after", to_string(folner_constant(nu, tree_system()))},
               {"equivariance_failures", failures},
               {"weights", weights_json(nu)}};
      std::cout << out.dump(2) << "\n";
    };
  });

  // pipeline
  auto* pipeline_cmd = app.add_subcommand("pipeline", "the Folner-to-tower pipeline");
  pipeline_cmd->require_subcommand(1);
  std::string candidates, out_path, csv_path, right;
  std::size_t depth = 3;
  auto* prun = pipeline_cmd->add_subcommand("run", "run and report each stage as JSON");
  prun->add_option("--input", candidates, "ball:r or file:path")->required();
  prun->add_option("--depth", depth, "boundary steps to attempt (at most 5)");
  prun->add_option("--out", out_path, "JSON report path, stdout if absent");
  prun->add_option("--csv", csv_path, "also write per-stage CSV");
  prun->add_option("--right", right, "translate every candidate on the right by this element");
  prun->callback([&] {
    action = [&] {
      auto A = load_candidates(candidates, config().ball_cap);
      std::string label = candidates;
      if (!right.empty()) {
        const Element h = parse_element(right);
        for (auto& f : A) f = multiply(f, h);
        label += " right " + right;
      }
      const auto report = tower_pipeline(A, depth, label);
      write_output(out_path, to_json(report));
      if (!csv_path.empty()) write_output(csv_path, to_csv(report));
      if (!report.invariants_hold()) status = kCounterexample;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    if (action) action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
