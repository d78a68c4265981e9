#include "folp/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "folp/core/analysis.hpp"
#include "folp/engine/solver.hpp"
#include "folp/oracle/oracle.hpp"
#include "folp/shoq/fhybrid.hpp"
#include "folp/shoq/translate.hpp"
#include "folp/textio/dl_text.hpp"
#include "folp/textio/dot.hpp"
#include "folp/textio/model_text.hpp"
#include "folp/textio/program_text.hpp"

namespace folp::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Program load_program(const std::string& path) {
  auto parsed = parse_program_checked(read_file(path), path);
  if (!parsed.diagnostics.empty()) {
    std::string msg;
    for (const auto& d : parsed.diagnostics) {
      msg += path + ": rule " + std::to_string(d.rule_index + 1) + ": " + d.message + "\n";
    }
    msg.pop_back();
    throw UsageError(msg);
  }
  return std::move(parsed.program);
}

std::string pred_name(const Predicate& p) { return print_predicate_name(p.name) + "/" + std::to_string(p.arity); }

Predicate unary_target(const Program& program, const std::string& name) {
  const auto& b = program.binary_predicates();
  const auto& u = program.unary_predicates();
  const bool binary = std::any_of(b.begin(), b.end(), [&](const Predicate& p) { return p.name == name; });
  const bool unary = std::any_of(u.begin(), u.end(), [&](const Predicate& p) { return p.name == name; });
  if (binary && !unary) throw UsageError(name + " is a binary predicate; --pred needs a unary one");
  return Predicate{name, 1};
}

int verdict_code(const Verdict& v) {
  if (std::holds_alternative<Sat>(v)) return kSat;
  if (std::holds_alternative<Unsat>(v)) return kUnsat;
  return kUnknown;
}

struct CheckOptions {
  std::string pred;
  std::string file;
  std::string mode = "auto";
  int depth_cap = 50;
  std::string k_variant = "rule9";
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_steps = SearchConfig{}.max_steps;
  bool emit_model = false;
  std::string dot;
  bool trace = false;
};

struct TranslateOptions {
  std::string file;
  std::string output;
  std::string rules;
  bool simple = false;
};

struct AnalyzeOptions {
  std::string file;
  std::string dot;
};

struct OracleOptions {
  std::string file;
  std::string pred;
  std::size_t max_extra = 2;
  std::size_t atom_limit = OracleLimits{}.atom_limit;
  std::string verify;
};

struct FHybridOptions {
  std::string dl;
  std::string rules;
  std::string pred;
  std::size_t bounded = 0;
  bool emit_model = false;
  int depth_cap = 50;
  std::uint64_t seed = kDefaultSeed;
};

SearchConfig search_config(int depth_cap, std::uint64_t seed) {
  SearchConfig c;
  c.depth_cap = depth_cap > 0 ? std::optional<int>(depth_cap) : std::nullopt;
  c.seed = seed;
  if (const char* env = std::getenv("FOLP_SEED"); env && *env) {
    try {
      c.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("FOLP_SEED is not a number: ") + env);
    }
  }
  return c;
}

int report(const Verdict& v, bool emit_model, std::ostream& out, std::ostream& err) {
  out << verdict_name(v) << '\n';
  if (const auto* s = std::get_if<Sat>(&v); s && emit_model) out << print_model(s->model);
  if (const auto* u = std::get_if<Unknown>(&v)) err << u->reason << '\n';
  return verdict_code(v);
}

int do_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const Program program = load_program(o.file);
  SearchConfig config = search_config(o.depth_cap, o.seed);
  static const std::map<std::string, SearchMode> modes{
      {"auto", SearchMode::automatic}, {"full", SearchMode::full}, {"simple", SearchMode::simple}};
  config.mode = modes.at(o.mode);
  config.k_variant = o.k_variant == "appendix" ? KVariant::appendix : KVariant::rule9;
  config.max_steps = o.max_steps;
  config.emit_trace = o.trace;
  config.trace = &err;
  const Verdict v = solve(program, unary_target(program, o.pred), config);
  if (!o.dot.empty()) {
    if (const auto* s = std::get_if<Sat>(&v)) write_file(o.dot, to_dot(s->structure));
  }
  return report(v, o.emit_model, out, err);
}

int do_translate(const TranslateOptions& o, std::ostream& out) {
  const DlKnowledgeBase kb = parse_dl(read_file(o.file), o.file);
  std::vector<Rule> rules = (o.simple ? translate_simple(kb) : translate(kb)).rules();
  if (!o.rules.empty()) {
    const Program extra = load_program(o.rules);
    rules.insert(rules.end(), extra.rules().begin(), extra.rules().end());
  }
  const std::string text = print_program(Program(std::move(rules)));
  if (o.output.empty()) out << text;
  else write_file(o.output, text);
  return 0;
}

int do_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const auto parsed = parse_program_checked(read_file(o.file), o.file);
  const Program& program = parsed.program;
  out << "rules " << program.rules().size() << '\n';
  out << "constants";
  for (const auto& c : program.constants()) out << ' ' << c;
  out << '\n';
  for (const auto& d : parsed.diagnostics) {
    out << "diagnostic rule " << d.rule_index + 1 << ": " << d.message << '\n';
  }
  const bool valid = parsed.diagnostics.empty();
  out << "folp " << (valid ? "yes" : "no") << '\n';
  if (!valid) return kError;
  out << "free";
  for (const auto& p : program.free_predicates()) out << ' ' << pred_name(p);
  out << '\n';
  for (const auto& p : program.unary_predicates()) out << "degree " << pred_name(p) << ' ' << degree_pred(p, program) << '\n';
  out << "rank " << rank(program) << '\n';
  const Program rewritten = eliminate_constraints(program);
  const MarkedGraph g = marked_dep_graph(rewritten);
  std::size_t marked = 0;
  for (const auto& a : g.arcs) marked += a.marked ? 1 : 0;
  out << "marked-graph " << g.vertices.size() << " vertices " << g.arcs.size() << " arcs " << marked << " marked\n";
  out << "simple " << (is_simple(rewritten) ? "yes" : "no") << '\n';
  if (!o.dot.empty()) write_file(o.dot, to_dot(g));
  return 0;
}

int do_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  const Program program = load_program(o.file);
  const Predicate p = unary_target(program, o.pred);
  if (!o.verify.empty()) {
    const OpenInterpretation m = parse_model(read_file(o.verify), o.verify);
    const bool holds = std::any_of(m.atoms.begin(), m.atoms.end(),
                                   [&](const GroundAtom& a) { return a.pred == p.name && a.args.size() == 1; });
    const bool ok = holds && is_answer_set(program, m);
    out << (ok ? "VALID" : "INVALID") << '\n';
    if (!holds) err << "no " << p.name << " atom in the model\n";
    return ok ? 0 : 1;
  }
  OracleLimits limits;
  limits.atom_limit = o.atom_limit;
  try {
    auto found = bounded_sat(program, p, o.max_extra, limits);
    if (!found) {
      out << "UNSAT\n";
      err << "no open answer set with at most " << o.max_extra << " extra elements\n";
      return kUnsat;
    }
    out << "SAT\n" << print_model(*found);
    return kSat;
  } catch (const OracleScaleError& e) {
    out << "UNKNOWN\n";
    err << e.what() << '\n';
  } catch (const OracleBudgetError& e) {
    out << "UNKNOWN\n";
    err << e.what() << '\n';
  }
  return kUnknown;
}

int do_fhybrid(const FHybridOptions& o, std::ostream& out, std::ostream& err) {
  FHybridKB kb{parse_dl(read_file(o.dl), o.dl), o.rules.empty() ? Program{} : load_program(o.rules)};
  if (o.bounded > 0) {
    auto found = fhybrid_bounded_check(kb, o.pred, o.bounded);
    out << (found ? "SAT" : "UNSAT") << '\n';
    if (found && o.emit_model) {
      for (const auto& e : found->universe) out << "universe " << e << '\n';
      for (const auto& [c, ext] : found->interpretation.concepts) {
        for (const auto& e : ext) out << "concept " << c << ' ' << e << '\n';
      }
      for (const auto& [r, rel] : found->interpretation.roles) {
        for (const auto& [a, b] : rel) out << "role " << r << ' ' << a << ' ' << b << '\n';
      }
      for (const auto& a : found->answer_set) out << "atom " << a.str() << '\n';
    }
    return found ? kSat : kUnsat;
  }
  return report(fhybrid_sat(kb, o.pred, search_config(o.depth_cap, o.seed)), o.emit_model, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Forest logic program satisfiability checker", "folp"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "decide satisfiability of a unary predicate");
  c->add_option("--pred", check.pred, "unary predicate")->required();
  c->add_option("file", check.file, "program (.folp)")->required();
  c->add_option("--mode", check.mode)->check(CLI::IsMember({"auto", "full", "simple"}));
  c->add_option("--depth-cap", check.depth_cap, "iterative deepening bound, 0 for none");
  c->add_option("--k-variant", check.k_variant)->check(CLI::IsMember({"rule9", "appendix"}));
  c->add_option("--seed", check.seed);
  c->add_option("--max-steps", check.max_steps);
  c->add_flag("--emit-model", check.emit_model);
  c->add_option("--dot", check.dot, "write the final completion structure as DOT");
  c->add_flag("--trace", check.trace, "print expansion steps to stderr");

  TranslateOptions tr;
  auto* t = app.add_subcommand("translate", "compile a DL knowledge base to a program");
  t->add_option("file", tr.file, "knowledge base (.dl)")->required();
  t->add_option("-o,--output", tr.output);
  t->add_option("--with-rules", tr.rules, "program appended to the translation");
  t->add_flag("--simple", tr.simple, "transitivity-free translation");

  AnalyzeOptions an;
  auto* a = app.add_subcommand("analyze", "report shape diagnostics and program statistics");
  a->add_option("file", an.file)->required();
  a->add_option("--dot", an.dot, "write the marked predicate graph as DOT");

  OracleOptions orc;
  auto* r = app.add_subcommand("oracle", "ground brute-force check over small universes");
  r->add_option("file", orc.file)->required();
  r->add_option("--pred", orc.pred)->required();
  r->add_option("--max-extra", orc.max_extra);
  r->add_option("--atom-limit", orc.atom_limit);
  r->add_option("--verify", orc.verify, "check a model printed by check --emit-model");

  FHybridOptions fh;
  auto* f = app.add_subcommand("fhybrid", "satisfiability over a DL knowledge base and a program");
  f->add_option("--dl", fh.dl)->required();
  f->add_option("--rules", fh.rules);
  f->add_option("--pred", fh.pred)->required();
  f->add_option("--bounded", fh.bounded, "enumerate models over domains up to this size instead");
  f->add_flag("--emit-model", fh.emit_model);
  f->add_option("--depth-cap", fh.depth_cap);
  f->add_option("--seed", fh.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*c) return do_check(check, out, err);
    if (*t) return do_translate(tr, out);
    if (*a) return do_analyze(an, out);
    if (*r) return do_oracle(orc, out, err);
    return do_fhybrid(fh, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace folp::cli
