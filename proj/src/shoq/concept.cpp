#include "folp/shoq/concept.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace folp {

namespace {

ConceptPtr make(Concept c) { return std::make_shared<const Concept>(std::move(c)); }

std::string operand(const ConceptPtr& c) { return c->str(); }

void add_unique(std::vector<std::string>& out, const std::string& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

void collect(const ConceptPtr& c, std::vector<std::string>* concepts, std::vector<std::string>* roles,
             std::vector<std::string>* individuals) {
  if (!c) return;
  switch (c->kind) {
    case Concept::Kind::atomic:
      if (concepts) add_unique(*concepts, c->name);
      break;
    case Concept::Kind::nominal:
      if (individuals) add_unique(*individuals, c->name);
      break;
    case Concept::Kind::exists:
    case Concept::Kind::forall:
    case Concept::Kind::at_least:
    case Concept::Kind::at_most:
      if (roles) add_unique(*roles, c->name);
      break;
    default:
      break;
  }
  collect(c->lhs, concepts, roles, individuals);
  collect(c->rhs, concepts, roles, individuals);
}

}  // namespace

ConceptPtr Concept::atomic(std::string name) { return make({Kind::atomic, std::move(name), 0, nullptr, nullptr}); }
ConceptPtr Concept::nominal(std::string individual) {
  return make({Kind::nominal, std::move(individual), 0, nullptr, nullptr});
}
ConceptPtr Concept::negation(ConceptPtr c) { return make({Kind::negation, "", 0, std::move(c), nullptr}); }
ConceptPtr Concept::conjunction(ConceptPtr a, ConceptPtr b) {
  return make({Kind::conjunction, "", 0, std::move(a), std::move(b)});
}
ConceptPtr Concept::disjunction(ConceptPtr a, ConceptPtr b) {
  return make({Kind::disjunction, "", 0, std::move(a), std::move(b)});
}
ConceptPtr Concept::exists(std::string role, ConceptPtr c) {
  return make({Kind::exists, std::move(role), 0, std::move(c), nullptr});
}
ConceptPtr Concept::forall(std::string role, ConceptPtr c) {
  return make({Kind::forall, std::move(role), 0, std::move(c), nullptr});
}
ConceptPtr Concept::at_least(unsigned n, std::string role, ConceptPtr c) {
  return make({Kind::at_least, std::move(role), n, std::move(c), nullptr});
}
ConceptPtr Concept::at_most(unsigned n, std::string role, ConceptPtr c) {
  return make({Kind::at_most, std::move(role), n, std::move(c), nullptr});
}

bool Concept::is_role_restriction() const {
  return kind == Kind::exists || kind == Kind::forall || kind == Kind::at_least || kind == Kind::at_most;
}

std::string Concept::str() const {
  switch (kind) {
    case Kind::atomic: return name;
    case Kind::nominal: return "{" + name + "}";
    case Kind::negation: return "not " + operand(lhs);
    case Kind::conjunction:
    case Kind::disjunction: {
      std::string a = lhs->str();
      std::string b = rhs->str();
      if (b < a) std::swap(a, b);
      return "(" + a + (kind == Kind::conjunction ? " and " : " or ") + b + ")";
    }
    case Kind::exists: return "exists " + name + "." + operand(lhs);
    case Kind::forall: return "forall " + name + "." + operand(lhs);
    case Kind::at_least: return "atleast " + std::to_string(n) + " " + name + "." + operand(lhs);
    case Kind::at_most: return "atmost " + std::to_string(n) + " " + name + "." + operand(lhs);
  }
  return name;
}

bool same_concept(const ConceptPtr& a, const ConceptPtr& b) { return a->str() == b->str(); }

bool DlKnowledgeBase::is_transitive(const std::string& role) const {
  return std::find(transitive.begin(), transitive.end(), role) != transitive.end();
}

std::vector<std::string> DlKnowledgeBase::subroles(const std::string& role) const {
  std::vector<std::string> out{role};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& ax : role_axioms) {
      if (ax.super == out[i]) add_unique(out, ax.sub);
    }
  }
  return out;
}

bool DlKnowledgeBase::is_simple_role(const std::string& role) const {
  const auto subs = subroles(role);
  return std::none_of(subs.begin(), subs.end(), [&](const std::string& s) { return is_transitive(s); });
}

std::vector<std::string> DlKnowledgeBase::concept_names() const {
  std::vector<std::string> out;
  for (const auto& ax : concept_axioms) {
    collect(ax.sub, &out, nullptr, nullptr);
    collect(ax.super, &out, nullptr, nullptr);
  }
  return out;
}

std::vector<std::string> DlKnowledgeBase::role_names() const {
  std::vector<std::string> out;
  for (const auto& ax : concept_axioms) {
    collect(ax.sub, nullptr, &out, nullptr);
    collect(ax.super, nullptr, &out, nullptr);
  }
  for (const auto& ax : role_axioms) {
    add_unique(out, ax.sub);
    add_unique(out, ax.super);
  }
  for (const auto& r : transitive) add_unique(out, r);
  return out;
}

std::vector<std::string> DlKnowledgeBase::individuals() const {
  std::vector<std::string> out;
  for (const auto& ax : concept_axioms) {
    collect(ax.sub, nullptr, nullptr, &out);
    collect(ax.super, nullptr, nullptr, &out);
  }
  return out;
}

const std::set<std::string>& DlInterpretation::extension(const std::string& concept_name) const {
  static const std::set<std::string> empty;
  auto it = concepts.find(concept_name);
  return it == concepts.end() ? empty : it->second;
}

const std::set<std::pair<std::string, std::string>>& DlInterpretation::role(const std::string& role_name) const {
  static const std::set<std::pair<std::string, std::string>> empty;
  auto it = roles.find(role_name);
  return it == roles.end() ? empty : it->second;
}

std::set<std::string> eval_concept(const ConceptPtr& c, const DlInterpretation& in) {
  using K = Concept::Kind;
  auto fillers = [&](const std::string& x, const std::set<std::string>& target) {
    unsigned count = 0;
    for (const auto& [a, b] : in.role(c->name)) {
      if (a == x && target.count(b)) ++count;
    }
    return count;
  };
  std::set<std::string> out;
  switch (c->kind) {
    case K::atomic:
      for (const auto& e : in.extension(c->name)) {
        if (in.domain.count(e)) out.insert(e);
      }
      return out;
    case K::nominal:
      if (!in.domain.count(c->name)) throw std::invalid_argument("individual " + c->name + " is not in the domain");
      return {c->name};
    case K::negation: {
      const auto inner = eval_concept(c->lhs, in);
      std::set_difference(in.domain.begin(), in.domain.end(), inner.begin(), inner.end(),
                          std::inserter(out, out.end()));
      return out;
    }
    case K::conjunction:
    case K::disjunction: {
      const auto a = eval_concept(c->lhs, in);
      const auto b = eval_concept(c->rhs, in);
      if (c->kind == K::conjunction) {
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
      } else {
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
      }
      return out;
    }
    case K::exists:
    case K::forall:
    case K::at_least:
    case K::at_most: {
      const auto target = eval_concept(c->lhs, in);
      for (const auto& x : in.domain) {
        const unsigned hits = fillers(x, target);
        unsigned total = 0;
        for (const auto& [a, b] : in.role(c->name)) total += a == x ? 1U : 0U;
        bool member = false;
        switch (c->kind) {
          case K::exists: member = hits >= 1; break;
          case K::forall: member = hits == total; break;
          case K::at_least: member = hits >= c->n; break;
          default: member = hits <= c->n; break;
        }
        if (member) out.insert(x);
      }
      return out;
    }
  }
  return out;
}

bool satisfies(const DlInterpretation& in, const DlKnowledgeBase& kb) {
  for (const auto& ax : kb.concept_axioms) {
    const auto sub = eval_concept(ax.sub, in);
    const auto super = eval_concept(ax.super, in);
    if (!std::includes(super.begin(), super.end(), sub.begin(), sub.end())) return false;
  }
  for (const auto& ax : kb.role_axioms) {
    const auto& sub = in.role(ax.sub);
    const auto& super = in.role(ax.super);
    if (!std::includes(super.begin(), super.end(), sub.begin(), sub.end())) return false;
  }
  for (const auto& r : kb.transitive) {
    const auto& rel = in.role(r);
    for (const auto& [a, b] : rel) {
      for (const auto& [c, d] : rel) {
        if (b == c && !rel.count({a, d})) return false;
      }
    }
  }
  return true;
}

}  // namespace folp
