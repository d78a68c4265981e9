#include <doctest.h>

#include <random>
#include <regex>

#include "folp/engine/solver.hpp"
#include "folp/textio/dl_text.hpp"
#include "folp/textio/dot.hpp"
#include "folp/textio/model_text.hpp"
#include "folp/textio/program_text.hpp"
#include "support/corpus.hpp"
#include "support/random_program.hpp"

using namespace folp;
using folp::testing::corpus_program;
using folp::testing::program_of;
using folp::testing::read_corpus;

namespace {

SourceSpan span_of(const std::string& text) {
  try {
    parse_program(text, "t.folp");
  } catch (const ParseError& e) {
    return e.span();
  }
  FAIL("no parse error");
  return {};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

ConceptPtr random_concept(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> names{"A", "Human", "C2"};
  static const std::vector<std::string> roles{"r", "child"};
  auto name = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  const unsigned n = std::uniform_int_distribution<unsigned>(0, 8)(rng);
  switch (std::uniform_int_distribution<int>(0, depth <= 0 ? 1 : 9)(rng)) {
    case 0:
      return Concept::atomic(name(names));
    case 1:
      return Concept::nominal(name(std::vector<std::string>{"john", "o"}));
    case 2:
      return Concept::negation(random_concept(rng, depth - 1));
    case 3:
      return Concept::conjunction(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    case 4:
      return Concept::disjunction(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    case 5:
      return Concept::exists(name(roles), random_concept(rng, depth - 1));
    case 6:
      return Concept::forall(name(roles), random_concept(rng, depth - 1));
    case 7:
      return Concept::at_least(n, name(roles), random_concept(rng, depth - 1));
    default:
      return Concept::at_most(n, name(roles), random_concept(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("program parse errors carry spans") {
  const SourceSpan trailing = span_of("p(X) :- q(X),\n");
  CHECK(trailing.file == "t.folp");
  CHECK(trailing.line == 1);
  const SourceSpan second = span_of("p(X) :- q(X).\nq(X :- r(X).\n");
  CHECK(second.line == 2);
  CHECK(second.col_start == 5);
  CHECK(span_of("p(X) :- q(X)\n").line == 1);
  CHECK(span_of("% comment\n\np(X) :- q(X), X != .\n").line == 3);
  try {
    parse_program("p(X) :-", "a.folp");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("a.folp:1:", 0) == 0);
  }
}

TEST_CASE("checked parsing reports shape diagnostics") {
  const ParsedProgram parsed = parse_program_checked("a(X) :- not f(X,Y).\n");
  CHECK(parsed.program.rules().size() == 1);
  CHECK(parsed.diagnostics.size() == 1);
}

TEST_CASE("predicate names") {
  CHECK(print_predicate_name("happy") == "happy");
  CHECK(print_predicate_name("Father") == "Father");
  CHECK(print_predicate_name("exists child.Human") == "'exists child.Human'");
  CHECK(print_predicate_name("{john}") == "'{john}'");
  const Program p = program_of("'not Female'(X) :- not Female(X).\n");
  CHECK(p.rules().size() == 1);
  CHECK(print_program(p) == "'not Female'(X) :- not Female(X).\n");
}

TEST_CASE("corpus programs roundtrip") {
  for (const auto& f : folp::testing::program_corpus()) {
    INFO(f);
    const Program p = corpus_program(f);
    const std::string printed = print_program(p);
    CHECK(parse_program(printed) == p);
    CHECK(print_program(parse_program(printed)) == printed);
  }
  const std::string happy = print_program(corpus_program("happy.folp"));
  CHECK(count(happy, "\n") == 11);
  CHECK(happy.find("happy(X) :- friend(X,Y), friend(X,Z), Y != Z.") != std::string::npos);
  CHECK(happy.find("sees(X,Y) v not sees(X,Y).") != std::string::npos);
}

TEST_CASE("random programs roundtrip") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 300; ++i) {
    const Program p = folp::testing::random_folp(rng);
    const std::string printed = print_program(p);
    INFO(printed);
    CHECK(parse_program(printed) == p);
  }
}

TEST_CASE("knowledge base text") {
  const DlKnowledgeBase kb = parse_dl(read_corpus("father.dl"), "father.dl");
  REQUIRE(kb.concept_axioms.size() == 2);
  CHECK(kb.concept_axioms[0].sub->str() == "Father");
  CHECK(kb.concept_axioms[0].super->str() == "(exists child.Human and not Female)");
  CHECK(kb.concept_axioms[1].super->str() == "atmost 2 child.Human");
  CHECK(kb.individuals() == std::vector<std::string>{"john"});
  CHECK(print_dl(parse_dl(print_dl(kb))) == print_dl(kb));

  const DlKnowledgeBase roles = parse_dl("# roles\nhasSon <= child\ntrans(ancestor)  % comment\nA <= B or C and D\n");
  CHECK(roles.role_axioms == std::vector<RoleAxiom>{{"hasSon", "child"}});
  CHECK(roles.transitive == std::vector<std::string>{"ancestor"});
  CHECK(roles.concept_axioms[0].super->str() == "((C and D) or B)");
  CHECK(print_dl(parse_dl(print_dl(roles))) == print_dl(roles));

  CHECK(parse_concept("not exists r.(A or B)")->str() == "not exists r.(A or B)");
  CHECK(parse_concept("forall r.not A and B")->str() == "(B and forall r.not A)");
  CHECK(parse_concept("atleast 0 r.A")->n == 0);
}

TEST_CASE("knowledge base parse errors") {
  CHECK_THROWS_AS(parse_dl("A <= atleast 9 r.B\n"), ParseError);
  DlParseOptions wide;
  wide.number_cap = 20;
  CHECK(parse_dl("A <= atleast 9 r.B\n", "<input>", wide).concept_axioms.size() == 1);
  CHECK_THROWS_AS(parse_dl("A <= atleast 21 r.B\n", "<input>", wide), ParseError);
  try {
    parse_dl("A <= B\nA <= exists R.B\n", "k.dl");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().file == "k.dl");
    CHECK(e.span().line == 2);
  }
  CHECK_THROWS_AS(parse_dl("A <=\n"), ParseError);
  CHECK_THROWS_AS(parse_dl("A <= (B and C\n"), ParseError);
  CHECK_THROWS_AS(parse_dl("trans(R)\n"), ParseError);
}

TEST_CASE("concepts roundtrip through text") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 500; ++i) {
    const ConceptPtr c = random_concept(rng, 3);
    INFO(c->str());
    CHECK(same_concept(parse_concept(c->str()), c));
    CHECK(parse_concept(c->str())->str() == c->str());
  }
}

TEST_CASE("models roundtrip") {
  OpenInterpretation m;
  m.universe = {"j", "j.1", "_e"};
  m.atoms = {{"happy", {"j.1"}}, {"friend", {"j", "j.1"}}, {"exists child.Human", {"j"}}};
  const std::string text = print_model(m);
  CHECK(text.rfind("universe _e\nuniverse j\nuniverse j.1\n", 0) == 0);
  CHECK(text.find("atom 'exists child.Human'(j)\n") != std::string::npos);
  CHECK(parse_model(text) == m);
  CHECK(parse_model("SAT\n" + text) == m);
  CHECK(parse_model("").universe.empty());
  CHECK_THROWS(parse_model("atomic p(a)\n"));
}

TEST_CASE("completion structures as DOT") {
  const Verdict v = solve(corpus_program("happy.folp"), {"happy", 1});
  const auto* sat = std::get_if<Sat>(&v);
  REQUIRE(sat);
  const std::string dot = to_dot(sat->structure);
  CHECK(dot.rfind("digraph completion {\n", 0) == 0);
  const std::regex node_line(R"re(^  "[^"]+" \[label=.*\];$)re");
  const std::regex tree_arc(R"re(^  "[^"]+" -> "[^"]+" \[label="\{[^"]*\}"\];$)re");
  std::size_t nodes = 0, arcs = 0;
  std::istringstream in(dot);
  std::string l;
  while (std::getline(in, l)) {
    if (std::regex_match(l, node_line) && l.find(" -> ") == std::string::npos) ++nodes;
    if (std::regex_match(l, tree_arc)) ++arcs;
  }
  CHECK(nodes == 4);
  CHECK(arcs == 3);
  CHECK(count(dot, "label=\"blocks\"") == 2);
  CHECK(dot.find("\"j.1.1\" -> \"j.1\" [label=\"blocks\"") != std::string::npos);
  CHECK(dot.find("\"j\" [label=\"j\\n{happy") != std::string::npos);
  CHECK(count(dot, "shape=box") == 1);

  const std::string deps = dependency_dot(sat->structure);
  CHECK(count(deps, " -> ") == sat->structure.g.arc_count());

  const std::string marked = to_dot(marked_dep_graph(corpus_program("marked-cycle.folp")));
  CHECK(count(marked, "style=bold") == 1);
  CHECK(marked.find("\"f/2\" -> \"q/1\" [label=\"m\", style=bold]") != std::string::npos);
}
