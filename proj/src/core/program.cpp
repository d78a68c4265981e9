#include "folp/core/program.hpp"

#include <algorithm>
#include <set>

namespace folp {

void insert_unique(SignedSet& set, const SignedPredicate& sp) {
  if (std::find(set.begin(), set.end(), sp) == set.end()) set.push_back(sp);
}

namespace {

Literal unary_lit(const SignedPredicate& sp, const Term& t) { return {{sp.pred, {t}}, sp.positive}; }

Literal binary_lit(const SignedPredicate& sp, const Term& s, const Term& t) {
  return {{sp.pred, {s, t}}, sp.positive};
}

void flatten_unary(const UnaryBody& body, FlatRule& out) {
  for (const auto& sp : body.beta) out.body.push_back(unary_lit(sp, body.root));
  for (const auto& succ : body.successors) {
    for (const auto& sp : succ.gamma) out.body.push_back(binary_lit(sp, body.root, succ.term));
    for (const auto& sp : succ.delta) out.body.push_back(unary_lit(sp, succ.term));
  }
  for (auto [i, j] : body.psi) {
    out.neq.push_back({body.successors.at(static_cast<std::size_t>(i)).term,
                       body.successors.at(static_cast<std::size_t>(j)).term});
  }
}

void flatten_binary(const BinaryBody& body, FlatRule& out) {
  for (const auto& sp : body.beta) out.body.push_back(unary_lit(sp, body.root));
  for (const auto& sp : body.gamma) out.body.push_back(binary_lit(sp, body.root, body.leaf));
  for (const auto& sp : body.delta) out.body.push_back(unary_lit(sp, body.leaf));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

FlatRule flatten(const Rule& rule) {
  FlatRule out;
  std::visit(overloaded{
                 [&](const FreeRule& r) {
                   out.head = Atom{r.pred, r.args};
                   out.free = true;
                 },
                 [&](const UnaryRule& r) {
                   out.head = Atom{r.head, {r.body.root}};
                   flatten_unary(r.body, out);
                 },
                 [&](const BinaryRule& r) {
                   out.head = Atom{r.head, {r.body.root, r.body.leaf}};
                   flatten_binary(r.body, out);
                 },
                 [&](const UnaryConstraint& r) { flatten_unary(r.body, out); },
                 [&](const BinaryConstraint& r) { flatten_binary(r.body, out); },
                 [&](const GeneralRule& r) {
                   out.head = r.head;
                   out.free = r.free;
                   out.body = r.body;
                   out.neq = r.neq;
                 },
             },
             rule);
  return out;
}

Program::Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
  std::set<std::string> seen_constants;
  std::set<Predicate> seen_preds;
  auto note_term = [&](const Term& t) {
    if (t.is_constant() && seen_constants.insert(t.name).second) constants_.push_back(t.name);
  };
  auto note_pred = [&](const Predicate& p) {
    if (!seen_preds.insert(p).second) return;
    if (p.arity == 1) upreds_.push_back(p);
    else if (p.arity == 2) bpreds_.push_back(p);
  };

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const FlatRule flat = flatten(rules_[i]);
    if (flat.head) {
      note_pred(flat.head->pred);
      for (const auto& t : flat.head->args) note_term(t);
    }
    for (const auto& lit : flat.body) {
      note_pred(lit.atom.pred);
      for (const auto& t : lit.atom.args) note_term(t);
    }
    for (const auto& ne : flat.neq) {
      note_term(ne.lhs);
      note_term(ne.rhs);
    }

    if (const auto* fr = std::get_if<FreeRule>(&rules_[i])) {
      std::set<std::string> vars;
      bool all_distinct_vars = true;
      for (const auto& t : fr->args) {
        if (!t.is_variable() || !vars.insert(t.name).second) all_distinct_vars = false;
      }
      if (all_distinct_vars) {
        if (std::find(free_.begin(), free_.end(), fr->pred) == free_.end()) free_.push_back(fr->pred);
      } else {
        ground_free_[fr->pred].push_back(i);
      }
    } else if (const auto* ur = std::get_if<UnaryRule>(&rules_[i])) {
      rules_for_[ur->head].push_back(i);
    } else if (const auto* br = std::get_if<BinaryRule>(&rules_[i])) {
      rules_for_[br->head].push_back(i);
    }
  }
}

bool Program::is_free(const Predicate& p) const {
  return std::find(free_.begin(), free_.end(), p) != free_.end();
}

bool Program::has_predicate(const Predicate& p) const {
  const auto& list = p.arity == 1 ? upreds_ : bpreds_;
  return std::find(list.begin(), list.end(), p) != list.end();
}

std::optional<Predicate> Program::find_predicate(const std::string& name) const {
  for (const auto& p : upreds_) {
    if (p.name == name) return p;
  }
  for (const auto& p : bpreds_) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

const std::vector<std::size_t>& Program::rules_for(const Predicate& p) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = rules_for_.find(p);
  return it == rules_for_.end() ? kEmpty : it->second;
}

const std::vector<std::size_t>& Program::ground_free_rules_for(const Predicate& p) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = ground_free_.find(p);
  return it == ground_free_.end() ? kEmpty : it->second;
}

namespace {

void check_arity(const SignedSet& set, int arity, const char* where, std::size_t idx,
                 std::vector<Diagnostic>& out) {
  for (const auto& sp : set) {
    if (sp.pred.arity != arity) {
      out.push_back({idx, std::string("predicate ") + sp.pred.name + " has wrong arity in " + where});
    }
  }
}

bool has_positive(const SignedSet& set) {
  return std::any_of(set.begin(), set.end(), [](const SignedPredicate& sp) { return sp.positive; });
}

void check_unary_body(const UnaryBody& body, std::size_t idx, std::vector<Diagnostic>& out) {
  check_arity(body.beta, 1, "beta", idx, out);
  std::set<std::string> vars;
  if (body.root.is_variable()) vars.insert(body.root.name);
  for (const auto& succ : body.successors) {
    check_arity(succ.gamma, 2, "gamma", idx, out);
    check_arity(succ.delta, 1, "delta", idx, out);
    if (succ.term.is_variable()) {
      if (!vars.insert(succ.term.name).second) out.push_back({idx, "repeated variable term " + succ.term.name});
      if (!has_positive(succ.gamma)) {
        out.push_back({idx, "gamma+ empty for variable successor " + succ.term.name});
      }
    }
  }
  const int k = static_cast<int>(body.successors.size());
  for (auto [i, j] : body.psi) {
    if (i < 0 || j < 0 || i >= k || j >= k || i == j) {
      out.push_back({idx, "inequality references an invalid successor position"});
      continue;
    }
    if (!body.successors[static_cast<std::size_t>(i)].term.is_variable() ||
        !body.successors[static_cast<std::size_t>(j)].term.is_variable()) {
      out.push_back({idx, "inequality between non-variable terms"});
    }
  }
}

void check_binary_body(const BinaryBody& body, std::size_t idx, std::vector<Diagnostic>& out) {
  check_arity(body.beta, 1, "beta", idx, out);
  check_arity(body.gamma, 2, "gamma", idx, out);
  check_arity(body.delta, 1, "delta", idx, out);
  if (body.root.is_variable() && body.root == body.leaf) {
    out.push_back({idx, "repeated variable term " + body.root.name});
  }
  if (body.leaf.is_variable() && !has_positive(body.gamma)) {
    out.push_back({idx, "gamma+ empty for variable successor " + body.leaf.name});
  }
}

}  // namespace

std::vector<Diagnostic> validate_folp(const Program& program) {
  std::vector<Diagnostic> out;
  const auto& rules = program.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::visit(overloaded{
                   [&](const FreeRule& r) {
                     if (r.pred.arity != 1 && r.pred.arity != 2) {
                       out.push_back({i, "predicate " + r.pred.name + " has arity outside {1,2}"});
                     }
                     if (static_cast<int>(r.args.size()) != r.pred.arity) {
                       out.push_back({i, "argument count does not match arity"});
                     }
                     if (r.args.size() == 2 && r.args[0].is_variable() && r.args[0] == r.args[1]) {
                       out.push_back({i, "repeated variable term " + r.args[0].name});
                     }
                   },
                   [&](const UnaryRule& r) {
                     if (r.head.arity != 1) out.push_back({i, "unary rule head must be unary"});
                     check_unary_body(r.body, i, out);
                   },
                   [&](const BinaryRule& r) {
                     if (r.head.arity != 2) out.push_back({i, "binary rule head must be binary"});
                     check_binary_body(r.body, i, out);
                   },
                   [&](const UnaryConstraint& r) { check_unary_body(r.body, i, out); },
                   [&](const BinaryConstraint& r) { check_binary_body(r.body, i, out); },
                   [&](const GeneralRule& r) {
                     out.push_back({i, "not tree-shaped: " + (r.reason.empty() ? std::string("general rule") : r.reason)});
                   },
               },
               rules[i]);
  }

  std::map<std::string, int> arity_of;
  for (const auto& list : {program.unary_predicates(), program.binary_predicates()}) {
    for (const auto& p : list) {
      auto [it, inserted] = arity_of.emplace(p.name, p.arity);
      if (!inserted && it->second != p.arity) {
        out.push_back({0, "predicate " + p.name + " used with arities 1 and 2"});
      }
    }
  }
  return out;
}

}  // namespace folp
