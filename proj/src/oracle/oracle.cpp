#include "folp/oracle/oracle.hpp"

#include <algorithm>
#include <functional>

namespace folp {

std::string GroundAtom::str() const {
  std::string out = pred + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i];
  }
  return out + ")";
}

int GroundProgram::intern(const GroundAtom& atom) {
  auto [it, inserted] = index.emplace(atom, static_cast<int>(atoms.size()));
  if (inserted) atoms.push_back(atom);
  return it->second;
}

std::optional<int> GroundProgram::find(const GroundAtom& atom) const {
  auto it = index.find(atom);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<std::string> rule_variables(const FlatRule& flat) {
  std::vector<std::string> vars;
  auto note = [&](const Term& t) {
    if (t.is_variable() && std::find(vars.begin(), vars.end(), t.name) == vars.end()) vars.push_back(t.name);
  };
  if (flat.head) {
    for (const auto& t : flat.head->args) note(t);
  }
  for (const auto& lit : flat.body) {
    for (const auto& t : lit.atom.args) note(t);
  }
  for (const auto& ne : flat.neq) {
    note(ne.lhs);
    note(ne.rhs);
  }
  return vars;
}

}  // namespace

GroundProgram ground(const Program& program, const std::vector<std::string>& universe) {
  for (const auto& c : program.constants()) {
    if (std::find(universe.begin(), universe.end(), c) == universe.end()) {
      throw std::invalid_argument("universe is missing constant " + c);
    }
  }
  GroundProgram gp;
  for (const auto& rule : program.rules()) {
    const FlatRule flat = flatten(rule);
    const auto vars = rule_variables(flat);
    std::vector<std::size_t> choice(vars.size(), 0);
    if (!vars.empty() && universe.empty()) continue;

    auto value = [&](const Term& t) -> const std::string& {
      if (t.is_constant()) return t.name;
      auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), t.name) - vars.begin());
      return universe[choice[pos]];
    };
    auto instantiate = [&](const Atom& a) {
      GroundAtom g{a.pred.name, {}};
      for (const auto& t : a.args) g.args.push_back(value(t));
      return g;
    };

    while (true) {
      bool keep = std::all_of(flat.neq.begin(), flat.neq.end(),
                              [&](const Inequality& ne) { return value(ne.lhs) != value(ne.rhs); });
      if (keep) {
        GroundRule gr;
        if (!flat.head) gr.kind = GroundRule::Kind::constraint;
        else if (flat.free) gr.kind = GroundRule::Kind::free;
        if (flat.head) gr.head = gp.intern(instantiate(*flat.head));
        for (const auto& lit : flat.body) {
          int a = gp.intern(instantiate(lit.atom));
          (lit.positive ? gr.pos : gr.neg).push_back(a);
        }
        gp.rules.push_back(std::move(gr));
      }
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < universe.size()) break;
        choice[i] = 0;
      }
      if (i == choice.size()) break;
    }
  }
  return gp;
}

GroundProgram gl_reduct(const GroundProgram& gp, const std::set<int>& interpretation) {
  GroundProgram out;
  out.atoms = gp.atoms;
  out.index = gp.index;
  for (const auto& r : gp.rules) {
    if (r.kind == GroundRule::Kind::free) {
      if (interpretation.count(r.head)) out.rules.push_back({GroundRule::Kind::normal, r.head, r.pos, {}});
      continue;
    }
    bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](int a) { return interpretation.count(a) > 0; });
    if (blocked) continue;
    out.rules.push_back({r.kind, r.head, r.pos, {}});
  }
  return out;
}

std::set<int> least_model(const GroundProgram& gp) {
  const std::size_t n = gp.atoms.size();
  std::vector<std::vector<std::size_t>> watch(n);
  std::vector<std::size_t> missing(gp.rules.size(), 0);
  std::vector<char> in_model(n, 0);
  std::vector<int> queue;

  for (std::size_t i = 0; i < gp.rules.size(); ++i) {
    const auto& r = gp.rules[i];
    if (!r.neg.empty() || r.kind == GroundRule::Kind::free) {
      throw std::invalid_argument("least_model needs a negation-free definite program");
    }
    if (r.kind == GroundRule::Kind::constraint) continue;
    std::vector<int> body = r.pos;
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    missing[i] = body.size();
    for (int a : body) watch[static_cast<std::size_t>(a)].push_back(i);
    if (body.empty() && !in_model[static_cast<std::size_t>(r.head)]) {
      in_model[static_cast<std::size_t>(r.head)] = 1;
      queue.push_back(r.head);
    }
  }
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (std::size_t ri : watch[static_cast<std::size_t>(a)]) {
      if (--missing[ri] == 0) {
        int h = gp.rules[ri].head;
        if (!in_model[static_cast<std::size_t>(h)]) {
          in_model[static_cast<std::size_t>(h)] = 1;
          queue.push_back(h);
        }
      }
    }
  }
  std::set<int> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (in_model[a]) out.insert(static_cast<int>(a));
  }
  return out;
}

bool is_answer_set(const GroundProgram& gp, const std::set<int>& m) {
  const GroundProgram reduct = gl_reduct(gp, m);
  if (least_model(reduct) != m) return false;
  for (const auto& r : reduct.rules) {
    if (r.kind != GroundRule::Kind::constraint) continue;
    if (std::all_of(r.pos.begin(), r.pos.end(), [&](int a) { return m.count(a) > 0; })) return false;
  }
  return true;
}

bool is_answer_set(const Program& program, const std::vector<std::string>& universe,
                   const std::set<GroundAtom>& m) {
  GroundProgram gp = ground(program, universe);
  std::set<int> ids;
  for (const auto& atom : m) {
    for (const auto& arg : atom.args) {
      if (std::find(universe.begin(), universe.end(), arg) == universe.end()) return false;
    }
    ids.insert(gp.intern(atom));
  }
  return is_answer_set(gp, ids);
}

bool is_answer_set(const Program& program, const OpenInterpretation& interpretation) {
  std::vector<std::string> universe(interpretation.universe.begin(), interpretation.universe.end());
  if (universe.empty()) return false;
  return is_answer_set(program, universe, interpretation.atoms);
}

namespace {

class StableSearch {
 public:
  StableSearch(const GroundProgram& gp, const std::vector<int>& targets, std::size_t budget)
      : gp_(gp), targets_(targets), budget_(budget), n_(gp.atoms.size()) {
    watch_.resize(n_);
    for (std::size_t i = 0; i < gp_.rules.size(); ++i) {
      for (int a : gp_.rules[i].pos) watch_[static_cast<std::size_t>(a)].push_back(i);
    }
  }

  std::optional<std::set<int>> run() {
    std::vector<signed char> val(n_, -1);
    return search(val);
  }

 private:
  // Least fixpoint over the rules accepted by `usable`.
  std::vector<char> fixpoint(const std::function<bool(const GroundRule&)>& usable) const {
    std::vector<char> in(n_, 0);
    std::vector<std::size_t> missing(gp_.rules.size(), 0);
    std::vector<int> queue;
    std::vector<char> active(gp_.rules.size(), 0);
    for (std::size_t i = 0; i < gp_.rules.size(); ++i) {
      const auto& r = gp_.rules[i];
      if (r.kind == GroundRule::Kind::constraint || !usable(r)) continue;
      active[i] = 1;
      missing[i] = r.pos.size();
      if (missing[i] == 0 && !in[static_cast<std::size_t>(r.head)]) {
        in[static_cast<std::size_t>(r.head)] = 1;
        queue.push_back(r.head);
      }
    }
    while (!queue.empty()) {
      int a = queue.back();
      queue.pop_back();
      for (std::size_t ri : watch_[static_cast<std::size_t>(a)]) {
        if (!active[ri]) continue;
        if (--missing[ri] == 0) {
          int h = gp_.rules[ri].head;
          if (!in[static_cast<std::size_t>(h)]) {
            in[static_cast<std::size_t>(h)] = 1;
            queue.push_back(h);
          }
        }
      }
    }
    return in;
  }

  bool propagate(std::vector<signed char>& val) const {
    bool changed = true;
    while (changed) {
      changed = false;
      auto lower = fixpoint([&](const GroundRule& r) {
        if (r.kind == GroundRule::Kind::free) return val[static_cast<std::size_t>(r.head)] == 1;
        return std::all_of(r.neg.begin(), r.neg.end(), [&](int a) { return val[static_cast<std::size_t>(a)] == 0; });
      });
      auto upper = fixpoint([&](const GroundRule& r) {
        if (r.kind == GroundRule::Kind::free) return val[static_cast<std::size_t>(r.head)] != 0;
        return std::none_of(r.neg.begin(), r.neg.end(), [&](int a) { return val[static_cast<std::size_t>(a)] == 1; });
      });
      for (std::size_t a = 0; a < n_; ++a) {
        if (lower[a]) {
          if (val[a] == 0) return false;
          if (val[a] == -1) {
            val[a] = 1;
            changed = true;
          }
        }
        if (!upper[a]) {
          if (val[a] == 1) return false;
          if (val[a] == -1) {
            val[a] = 0;
            changed = true;
          }
        }
      }
      for (const auto& r : gp_.rules) {
        if (r.kind != GroundRule::Kind::constraint) continue;
        bool pos_true = std::all_of(r.pos.begin(), r.pos.end(), [&](int a) { return val[static_cast<std::size_t>(a)] == 1; });
        bool neg_false = std::all_of(r.neg.begin(), r.neg.end(), [&](int a) { return val[static_cast<std::size_t>(a)] == 0; });
        if (pos_true && neg_false) return false;
      }
      if (!targets_.empty() &&
          std::none_of(targets_.begin(), targets_.end(), [&](int a) { return val[static_cast<std::size_t>(a)] != 0; })) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::set<int>> search(std::vector<signed char> val) {
    if (++nodes_ > budget_) throw OracleBudgetError("oracle search budget exceeded");
    if (!propagate(val)) return std::nullopt;
    auto open = std::find(val.begin(), val.end(), -1);
    if (open == val.end()) {
      std::set<int> m;
      for (std::size_t a = 0; a < n_; ++a) {
        if (val[a] == 1) m.insert(static_cast<int>(a));
      }
      if (!is_answer_set(gp_, m)) return std::nullopt;
      return m;
    }
    for (signed char choice : {1, 0}) {
      auto next = val;
      next[static_cast<std::size_t>(open - val.begin())] = choice;
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

  const GroundProgram& gp_;
  const std::vector<int>& targets_;
  std::size_t budget_;
  std::size_t n_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> watch_;
};

}  // namespace

std::optional<std::set<int>> find_answer_set(const GroundProgram& gp, const std::vector<int>& targets,
                                             std::size_t node_budget) {
  StableSearch search(gp, targets, node_budget);
  return search.run();
}

std::vector<std::string> fresh_elements(const Program& program, std::size_t count) {
  const auto& cts = program.constants();
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) {
    std::string name = "x" + std::to_string(i);
    while (std::find(cts.begin(), cts.end(), name) != cts.end()) name += "_";
    out.push_back(name);
  }
  return out;
}

std::size_t herbrand_size(const Program& program, std::size_t universe_size) {
  return program.unary_predicates().size() * universe_size +
         program.binary_predicates().size() * universe_size * universe_size;
}

std::optional<OpenInterpretation> bounded_sat(const Program& program, const Predicate& p, std::size_t max_extra,
                                              const OracleLimits& limits) {
  if (p.arity != 1) throw std::invalid_argument("bounded_sat needs a unary predicate");
  for (std::size_t extra = 0; extra <= max_extra; ++extra) {
    std::vector<std::string> universe = program.constants();
    for (auto& x : fresh_elements(program, extra)) universe.push_back(std::move(x));
    if (universe.empty()) continue;
    if (herbrand_size(program, universe.size()) > limits.atom_limit) {
      throw OracleScaleError("oracle scale exceeded");
    }
    GroundProgram gp = ground(program, universe);
    std::vector<int> targets;
    for (const auto& e : universe) targets.push_back(gp.intern({p.name, {e}}));
    auto found = find_answer_set(gp, targets, limits.node_budget);
    if (!found) continue;
    OpenInterpretation out;
    out.universe.insert(universe.begin(), universe.end());
    for (int a : *found) out.atoms.insert(gp.atoms[static_cast<std::size_t>(a)]);
    return out;
  }
  return std::nullopt;
}

Program build_pk(const Program& program, std::size_t k, const Predicate& p) {
  if (k < 1) throw std::invalid_argument("build_pk needs k >= 1");
  std::vector<Rule> rules = program.rules();
  GeneralRule constraint;
  constraint.reason = "bounded-model constraint";
  for (const auto& x : fresh_elements(program, k)) {
    constraint.body.push_back({{p, {Term::constant(x)}}, false});
  }
  for (const auto& c : program.constants()) {
    constraint.body.push_back({{p, {Term::constant(c)}}, false});
  }
  rules.emplace_back(std::move(constraint));
  return Program(std::move(rules));
}

}  // namespace folp
