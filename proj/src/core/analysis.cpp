#include "folp/core/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace folp {

std::size_t degree_rule(const Rule& rule) {
  if (const auto* r = std::get_if<UnaryRule>(&rule)) return r->body.successors.size();
  return 0;
}

std::size_t degree_pred(const Predicate& p, const Program& program) {
  if (p.arity != 1) throw std::invalid_argument("degree of binary predicate " + p.name);
  std::size_t best = 0;
  for (std::size_t idx : program.rules_for(p)) best = std::max(best, degree_rule(program.rules()[idx]));
  return best;
}

std::size_t rank(const Program& program) {
  std::size_t total = 0;
  for (const auto& p : program.unary_predicates()) total += degree_pred(p, program);
  return total;
}

bool is_constraint_predicate(const Predicate& p) { return p.name.rfind(kConstraintPrefix, 0) == 0; }

Program eliminate_constraints(const Program& program) {
  std::set<std::string> names;
  for (const auto& p : program.unary_predicates()) names.insert(p.name);
  for (const auto& p : program.binary_predicates()) names.insert(p.name);

  std::vector<Rule> out;
  out.reserve(program.rules().size());
  int counter = 0;
  auto fresh = [&](int arity) {
    Predicate p{std::string(kConstraintPrefix) + std::to_string(++counter), arity};
    if (names.count(p.name)) throw std::invalid_argument("fresh predicate " + p.name + " collides with program");
    return p;
  };

  for (const auto& rule : program.rules()) {
    if (const auto* uc = std::get_if<UnaryConstraint>(&rule)) {
      UnaryRule r{fresh(1), uc->body};
      r.body.beta.insert(r.body.beta.begin(), SignedPredicate{r.head, false});
      out.emplace_back(std::move(r));
    } else if (const auto* bc = std::get_if<BinaryConstraint>(&rule)) {
      BinaryRule r{fresh(2), bc->body};
      r.body.gamma.insert(r.body.gamma.begin(), SignedPredicate{r.head, false});
      out.emplace_back(std::move(r));
    } else {
      out.push_back(rule);
    }
  }
  return Program(std::move(out));
}

bool MarkedGraph::has_arc(const Predicate& from, const Predicate& to) const {
  return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.from == from && a.to == to; });
}

bool MarkedGraph::is_marked(const Predicate& from, const Predicate& to) const {
  return std::any_of(arcs.begin(), arcs.end(),
                     [&](const Arc& a) { return a.from == from && a.to == to && a.marked; });
}

MarkedGraph marked_dep_graph(const Program& program) {
  MarkedGraph g;
  for (const auto& list : {program.unary_predicates(), program.binary_predicates()}) {
    for (const auto& p : list) {
      if (!program.is_free(p)) g.vertices.push_back(p);
    }
  }
  std::map<std::pair<Predicate, Predicate>, std::size_t> index;
  auto add = [&](const Predicate& from, const SignedSet& set, bool marked) {
    for (const auto& sp : set) {
      if (!sp.positive || program.is_free(sp.pred)) continue;
      auto key = std::make_pair(from, sp.pred);
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(key, g.arcs.size());
        g.arcs.push_back({from, sp.pred, marked});
      } else if (marked) {
        g.arcs[it->second].marked = true;
      }
    }
  };

  for (const auto& rule : program.rules()) {
    if (const auto* r = std::get_if<UnaryRule>(&rule)) {
      if (program.is_free(r->head)) continue;
      add(r->head, r->body.beta, false);
      for (const auto& succ : r->body.successors) {
        add(r->head, succ.gamma, false);
        add(r->head, succ.delta, true);
      }
    } else if (const auto* r = std::get_if<BinaryRule>(&rule)) {
      if (program.is_free(r->head)) continue;
      add(r->head, r->body.beta, false);
      add(r->head, r->body.gamma, false);
      add(r->head, r->body.delta, true);
    } else if (const auto* r = std::get_if<GeneralRule>(&rule)) {
      if (!r->head || r->free || program.is_free(r->head->pred)) continue;
      SignedSet body;
      for (const auto& lit : r->body) insert_unique(body, {lit.atom.pred, lit.positive});
      add(r->head->pred, body, false);
    }
  }
  return g;
}

bool is_simple(const Program& program) {
  const MarkedGraph g = marked_dep_graph(program);
  std::map<Predicate, std::vector<Predicate>> adj;
  for (const auto& a : g.arcs) adj[a.from].push_back(a.to);

  auto reaches = [&](const Predicate& from, const Predicate& to) {
    std::set<Predicate> seen{from};
    std::vector<Predicate> stack{from};
    while (!stack.empty()) {
      Predicate cur = stack.back();
      stack.pop_back();
      if (cur == to) return true;
      for (const auto& nxt : adj[cur]) {
        if (seen.insert(nxt).second) stack.push_back(nxt);
      }
    }
    return false;
  };

  for (const auto& a : g.arcs) {
    if (a.marked && reaches(a.to, a.from)) return false;
  }
  return true;
}

}  // namespace folp
