#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "folp/cli/cli.hpp"
#include "folp/core/analysis.hpp"
#include "folp/engine/solver.hpp"
#include "folp/forest/dep_graph.hpp"
#include "folp/oracle/oracle.hpp"
#include "folp/shoq/fhybrid.hpp"
#include "folp/shoq/translate.hpp"
#include "folp/textio/dl_text.hpp"
#include "folp/textio/model_text.hpp"
#include "folp/textio/program_text.hpp"
#include "support/corpus.hpp"
#include "support/random_program.hpp"

using namespace folp;
using folp::testing::corpus_path;
using folp::testing::corpus_program;
using folp::testing::program_of;
using folp::testing::read_corpus;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

GroundAtom atom(const std::string& pred, std::vector<std::string> args) { return {pred, std::move(args)}; }

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

Outcome happy_golden() {
  Outcome o;
  const auto start = Clock::now();
  int code = -1;
  const std::string out = cli({"check", "--pred", "happy", "--emit-model", corpus_path("happy.folp")}, &code);
  const double t = seconds_since(start);
  o.require(code == cli::kSat, "verdict is not SAT");
  o.require(t < 10.0, "took " + std::to_string(t) + " s");
  const OpenInterpretation m = parse_model(out);
  o.require(m.universe == std::set<std::string>{"j", "j.1", "j.1.1", "j.1.2"}, "universe differs");
  const std::set<GroundAtom> pictured{
      atom("happy", {"j"}),           atom("happy", {"j.1"}),          atom("happy", {"j.1.1"}),
      atom("happy", {"j.1.2"}),       atom("friend", {"j", "j.1"}),    atom("friend", {"j.1", "j.1.1"}),
      atom("friend", {"j.1", "j.1.2"}), atom("friend", {"j.1.1", "j.1.1"}), atom("friend", {"j.1.1", "j.1.2"}),
      atom("friend", {"j.1.2", "j.1.1"}), atom("friend", {"j.1.2", "j.1.2"}), atom("sees", {"j", "j.1"}),
      atom("sees", {"j.1", "j.1.1"}), atom("sees", {"j.1.1", "j.1.1"}), atom("sees", {"j.1.2", "j.1.1"}),
  };
  o.require(m.atoms == pictured, "atom set differs from the pictured model");
  o.require(is_answer_set(corpus_program("happy.folp"), m), "model is not an open answer set");
  o.detail = o.pass ? std::to_string(m.atoms.size()) + " atoms, " + std::to_string(t) + " s" : o.detail;
  return o;
}

Outcome pass_fail_golden() {
  Outcome o;
  const Program p = corpus_program("example1.folp");
  const Verdict v = solve(p, {"fail", 1});
  const auto* s = std::get_if<Sat>(&v);
  o.require(s != nullptr, "engine verdict is not SAT");
  if (s) o.require(s->model.universe.size() == 2, "engine universe is not john plus one element");
  const auto one = bounded_sat(p, {"fail", 1}, 1);
  o.require(one && one->atoms == std::set<GroundAtom>{atom("pass", {"john"}), atom("fail", {"x1"})},
            "oracle does not reproduce {pass(john), fail(x1)}");
  o.require(!bounded_sat(p, {"fail", 1}, 0), "oracle finds fail without extra elements");
  o.require(is_answer_set(p, {"john"}, {atom("pass", {"john"})}), "{pass(john)} is not the answer set over {john}");
  return o;
}

Outcome p_without_pa_golden() {
  Outcome o;
  const Program p = corpus_program("example6.folp");
  o.require(std::holds_alternative<Unsat>(solve(p, {"q", 1})), "engine: q is not UNSAT");
  const Verdict v = solve(p, {"p", 1});
  const auto* s = std::get_if<Sat>(&v);
  o.require(s != nullptr, "engine: p is not SAT");
  if (s) o.require(!s->model.atoms.count(atom("p", {"a"})), "engine model contains p(a)");
  o.require(!bounded_sat(p, {"q", 1}, 2), "oracle finds q");
  const auto m = bounded_sat(p, {"p", 1}, 2);
  o.require(m.has_value(), "oracle does not find p");
  if (m) o.require(!m->atoms.count(atom("p", {"a"})), "oracle model contains p(a)");
  return o;
}

Outcome inconsistent_choice_golden() {
  Outcome o;
  const Program p = program_of("a(X) v not a(X).\nb(X) :- not b(X).\n");
  o.require(std::holds_alternative<Unsat>(solve(p, {"a", 1})), "a is not UNSAT");
  o.require(!bounded_sat(p, {"a", 1}, 2), "oracle finds an answer set");
  return o;
}

Outcome simple_classification() {
  Outcome o;
  const MarkedGraph g = marked_dep_graph(corpus_program("marked-cycle.folp"));
  o.require(!is_simple(corpus_program("marked-cycle.folp")), "cyclic program classified simple");
  o.require(g.is_marked({"f", 2}, {"q", 1}) && g.has_arc({"q", 1}, {"p", 1}) && g.has_arc({"p", 1}, {"f", 2}),
            "marked cycle q, p, f, q missing");
  o.require(is_simple(corpus_program("marked-acyclic.folp")), "program without the back rule classified not simple");
  return o;
}

Outcome translation_golden() {
  Outcome o;
  const DlKnowledgeBase kb = parse_dl(read_corpus("father.dl"), "father.dl");
  const Program p = translate(kb);
  const std::string text = print_program(p);
  for (const char* rule : {
           ":- Father(X), not '(exists child.Human and not Female)'(X).",
           "'(exists child.Human and not Female)'(X) :- 'exists child.Human'(X), 'not Female'(X).",
           "'exists child.Human'(X) :- child(X,Y), Human(Y).",
           "'not Female'(X) :- not Female(X).",
           "'{john}'(john).",
           "'atleast 3 child.Human'(X) :- child(X,Y1), Human(Y1), child(X,Y2), Human(Y2), child(X,Y3), Human(Y3), "
           "Y1 != Y2, Y1 != Y3, Y2 != Y3.",
       }) {
    o.require(has_line(text, rule), std::string("missing ") + rule);
  }
  o.require(validate_folp(p).empty(), "translation is not a FoLP");
  o.require(is_simple(eliminate_constraints(translate_simple(kb))), "translation is not simple");
  return o;
}

Outcome fhybrid_golden() {
  Outcome o;
  const FHybridKB kb{parse_dl(read_corpus("father.dl"), "father.dl"), corpus_program("father-rules.folp")};
  const Verdict v = fhybrid_sat(kb, "unhappy");
  o.require(std::holds_alternative<Sat>(v), "unhappy is not SAT via translation");
  const auto m = fhybrid_bounded_check(kb, "unhappy", 2);
  o.require(m.has_value(), "no bounded model with domain <= 2");
  if (!m) return o;
  const GroundProgram pi = project(ground(kb.program, m->universe), m->interpretation, DlSignature::of(kb.sigma));
  const bool fact = pi.rules.size() == 1 && pi.rules[0].head >= 0 && pi.rules[0].pos.empty() &&
                    pi.rules[0].neg.empty() && pi.atoms[static_cast<std::size_t>(pi.rules[0].head)].str() == "unhappy(john)";
  o.require(fact, "projection is not {unhappy(john)}");
  o.require(m->answer_set == std::set<GroundAtom>{atom("unhappy", {"john"})}, "answer set is not {unhappy(john)}");
  o.require(is_fhybrid_model(kb, *m), "triple is not a model");
  return o;
}

Outcome differential() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  int sat = 0, unsat = 0, unknown = 0, hits = 0, inconclusive = 0, bad_models = 0, missed = 0;
  for (int i = 0; i < 500; ++i) {
    const Program p = folp::testing::random_folp(rng);
    const Predicate t = folp::testing::random_target(rng, p);
    SearchConfig config;
    config.max_steps = 200'000;
    const Verdict v = solve(p, t, config);
    if (const auto* s = std::get_if<Sat>(&v)) {
      ++sat;
      if (!is_answer_set(p, s->model)) ++bad_models;
    } else if (std::holds_alternative<Unsat>(v)) {
      ++unsat;
    } else {
      ++unknown;
    }
    OracleLimits limits;
    limits.atom_limit = 64;
    limits.node_budget = 200'000;
    try {
      if (bounded_sat(p, t, 3, limits)) {
        ++hits;
        if (!std::holds_alternative<Sat>(v)) ++missed;
      }
    } catch (const OracleScaleError&) {
      ++inconclusive;
    } catch (const OracleBudgetError&) {
      ++inconclusive;
    }
  }
  const double t = seconds_since(start);
  o.require(bad_models == 0, std::to_string(bad_models) + " engine models fail the oracle");
  o.require(missed == 0, std::to_string(missed) + " oracle hits without an engine SAT");
  o.require(t < 300.0, "took " + std::to_string(t) + " s");
  const std::string stats = "sat " + std::to_string(sat) + " unsat " + std::to_string(unsat) + " unknown " +
                            std::to_string(unknown) + " oracle hits " + std::to_string(hits) + " inconclusive " +
                            std::to_string(inconclusive) + ", " + std::to_string(t) + " s";
  o.detail = o.detail.empty() ? stats : o.detail + "; " + stats;
  return o;
}

// Definition-level answer-set test: M is a model of the reduct and no
// proper subset is.
bool answer_set_by_subsets(const GroundProgram& gp, const std::set<int>& m) {
  std::vector<std::pair<int, std::vector<int>>> reduct;
  for (const auto& r : gp.rules) {
    if (r.kind == GroundRule::Kind::free) {
      if (m.count(r.head)) reduct.push_back({r.head, {}});
      continue;
    }
    if (std::none_of(r.neg.begin(), r.neg.end(), [&](int a) { return m.count(a) > 0; })) {
      reduct.push_back({r.kind == GroundRule::Kind::constraint ? -1 : r.head, r.pos});
    }
  }
  auto model = [&](const std::set<int>& s) {
    return std::all_of(reduct.begin(), reduct.end(), [&](const auto& r) {
      const bool body = std::all_of(r.second.begin(), r.second.end(), [&](int a) { return s.count(a) > 0; });
      return !body || (r.first >= 0 && s.count(r.first) > 0);
    });
  };
  if (!model(m)) return false;
  const std::vector<int> members(m.begin(), m.end());
  for (std::uint32_t mask = 0; mask + 1 < (1u << members.size()); ++mask) {
    std::set<int> smaller;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (mask & (1u << i)) smaller.insert(members[i]);
    }
    if (model(smaller)) return false;
  }
  return true;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(99);

  int reduct_failures = 0;
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = round < 10 ? 12 : std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    GroundProgram gp;
    for (std::size_t i = 0; i < n; ++i) gp.intern({"a" + std::to_string(i), {}});
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    const int rules = std::uniform_int_distribution<int>(1, 14)(rng);
    for (int i = 0; i < rules; ++i) {
      GroundRule r;
      const int kind = std::uniform_int_distribution<int>(0, 9)(rng);
      if (kind == 0) {
        r.kind = GroundRule::Kind::free;
        r.head = pick(rng);
        gp.rules.push_back(r);
        continue;
      }
      if (kind == 1) r.kind = GroundRule::Kind::constraint;
      else r.head = pick(rng);
      for (int k = std::uniform_int_distribution<int>(0, 2)(rng); k > 0; --k) r.pos.push_back(pick(rng));
      for (int k = std::uniform_int_distribution<int>(0, 2)(rng); k > 0; --k) r.neg.push_back(pick(rng));
      gp.rules.push_back(r);
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::set<int> m;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) m.insert(static_cast<int>(i));
      }
      if (is_answer_set(gp, m) != answer_set_by_subsets(gp, m)) ++reduct_failures;
    }
  }
  o.require(reduct_failures == 0, std::to_string(reduct_failures) + " reduct/least-model disagreements");

  int connpr_failures = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const int nodes = 3;
    DepGraph g;
    std::vector<AtomKey> keys;
    for (int v = 0; v < n; ++v) {
      keys.push_back({v % 4, (v / 4) % nodes});
      g.add_vertex(keys.back());
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (std::bernoulli_distribution(0.15)(rng)) {
          g.add_arc(u, v);
          adj[static_cast<std::size_t>(u)].push_back(v);
        }
      }
    }
    const std::vector<bool> is_free{false, true, false, false};
    std::function<void(int, std::vector<bool>&, std::set<int>&)> walk = [&](int v, std::vector<bool>& on, std::set<int>& ends) {
      ends.insert(v);
      on[static_cast<std::size_t>(v)] = true;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!on[static_cast<std::size_t>(w)]) walk(w, on, ends);
      }
      on[static_cast<std::size_t>(v)] = false;
    };
    for (int y = 0; y < nodes; ++y) {
      for (int x = 0; x < nodes; ++x) {
        std::set<std::pair<int, int>> expected;
        for (int u = 0; u < n; ++u) {
          if (keys[static_cast<std::size_t>(u)].node != y) continue;
          std::set<int> ends;
          for (int w : adj[static_cast<std::size_t>(u)]) {
            std::vector<bool> on(static_cast<std::size_t>(n), false);
            walk(w, on, ends);
          }
          for (int v : ends) {
            const auto& k = keys[static_cast<std::size_t>(v)];
            if (k.node == x && !is_free[static_cast<std::size_t>(k.pred)]) expected.insert({keys[static_cast<std::size_t>(u)].pred, k.pred});
          }
        }
        if (connpr(g, y, x, is_free) != expected) ++connpr_failures;
      }
    }
  }
  o.require(connpr_failures == 0, std::to_string(connpr_failures) + " connpr disagreements");

  int roundtrip_failures = 0;
  for (const auto& f : folp::testing::program_corpus()) {
    const Program p = corpus_program(f);
    if (!(parse_program(print_program(p)) == p)) ++roundtrip_failures;
  }
  for (int i = 0; i < 300; ++i) {
    const Program p = folp::testing::random_folp(rng);
    if (!(parse_program(print_program(p)) == p)) ++roundtrip_failures;
  }
  const DlKnowledgeBase father = parse_dl(read_corpus("father.dl"));
  if (print_dl(parse_dl(print_dl(father))) != print_dl(father)) ++roundtrip_failures;
  const Program translated = translate(father);
  if (!(parse_program(print_program(translated)) == translated)) ++roundtrip_failures;
  o.require(roundtrip_failures == 0, std::to_string(roundtrip_failures) + " roundtrip failures");

  std::string sizes;
  for (unsigned n = 1; n <= 6; ++n) {
    const DlKnowledgeBase kb = parse_dl("A <= atleast " + std::to_string(n) + " r.B\nC <= atmost " + std::to_string(n) +
                                        " r.(B and not A)\nD <= exists r.C or forall s.A\n");
    const Closure cl = closure(kb);
    std::size_t squares = 0;
    for (const auto& c : cl.concepts) {
      if (c->is_number_restriction()) squares += std::size_t{c->n} * c->n;
    }
    const Program p = translate(kb);
    std::size_t size = 0;
    for (const auto& r : p.rules()) {
      const FlatRule f = flatten(r);
      size += (f.head ? 1 : 0) + f.body.size() + f.neq.size();
    }
    const bool fits = p.rules().size() <= 3 * cl.size() + squares && size <= 6 * cl.size() + 2 * squares;
    o.require(fits, "size envelope exceeded at n = " + std::to_string(n));
    sizes += (sizes.empty() ? "" : " ") + std::to_string(size);
  }
  if (o.pass) o.detail = "translation sizes " + sizes;
  return o;
}

Outcome determinism() {
  Outcome o;
  std::vector<std::vector<std::string>> runs;
  for (const auto& f : folp::testing::program_corpus()) {
    const Program program = corpus_program(f);
    for (const auto& p : program.unary_predicates()) {
      runs.push_back({"check", "--pred", p.name, "--emit-model", corpus_path(f)});
      runs.push_back({"check", "--pred", p.name, "--mode", "full", "--seed", "17", "--emit-model", corpus_path(f)});
    }
  }
  for (const auto& args : runs) {
    if (cli(args) != cli(args)) o.require(false, "differs: " + args[2] + " " + args.back());
  }
  if (o.pass) o.detail = std::to_string(runs.size()) + " invocations";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 happy golden", happy_golden},
      {"AC2 pass/fail golden", pass_fail_golden},
      {"AC3 p without p(a) golden", p_without_pa_golden},
      {"AC4 inconsistent choice golden", inconsistent_choice_golden},
      {"AC5 simple classification", simple_classification},
      {"AC6 translation golden", translation_golden},
      {"AC7 f-hybrid golden", fhybrid_golden},
      {"AC8 differential suite", differential},
      {"AC9 property suites", properties},
      {"AC10 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : " (" + o.detail + ")") << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
