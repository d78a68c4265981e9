#include "folp/shoq/translate.hpp"

#include <algorithm>

namespace folp {

namespace {

using K = Concept::Kind;

Term var(const std::string& n) { return Term::variable(n); }

Literal unary(const Predicate& p, const std::string& v, bool positive = true) {
  return {{p, {var(v)}}, positive};
}

Literal role_lit(const std::string& r, const std::string& a, const std::string& b, bool positive = true) {
  return {{{r, 2}, {var(a), var(b)}}, positive};
}

class ClosureBuilder {
 public:
  explicit ClosureBuilder(const DlKnowledgeBase& sigma) : sigma_(sigma) {}

  void add(const ConceptPtr& c) {
    if (out_.contains(c)) return;
    out_.concepts.push_back(c);
    switch (c->kind) {
      case K::atomic:
      case K::nominal:
        break;
      case K::negation:
        add(c->lhs);
        break;
      case K::conjunction:
      case K::disjunction:
        add(c->lhs);
        add(c->rhs);
        break;
      case K::exists:
        add_role(c->name);
        add(c->lhs);
        for (const auto& s : sigma_.subroles(c->name)) {
          if (s != c->name && sigma_.is_transitive(s)) add(Concept::exists(s, c->lhs));
        }
        break;
      case K::forall:
        add(Concept::exists(c->name, Concept::negation(c->lhs)));
        break;
      case K::at_most:
        add(Concept::at_least(c->n + 1, c->name, c->lhs));
        break;
      case K::at_least:
        add_role(c->name);
        add(c->lhs);
        break;
    }
  }

  void add_role(const std::string& r) {
    if (!out_.contains_role(r)) out_.roles.push_back(r);
  }

  Closure take() { return std::move(out_); }

 private:
  const DlKnowledgeBase& sigma_;
  Closure out_;
};

void check_simple_roles(const DlKnowledgeBase& sigma, const Closure& clos) {
  for (const auto& c : clos.concepts) {
    if (c->is_number_restriction() && !sigma.is_simple_role(c->name)) {
      throw TranslationError("role " + c->name + " in " + c->str() + " is not simple");
    }
  }
}

Program build(const DlKnowledgeBase& sigma, const std::vector<ConceptPtr>& extra, bool with_transitivity) {
  const Closure clos = closure(sigma, extra);
  check_simple_roles(sigma, clos);
  std::vector<FlatRule> out;
  for (const auto& ax : sigma.concept_axioms) {
    out.push_back({std::nullopt, false,
                   {unary(concept_predicate(ax.sub), "X"), unary(concept_predicate(ax.super), "X", false)},
                   {}});
  }
  for (const auto& ax : sigma.role_axioms) {
    out.push_back({std::nullopt, false, {role_lit(ax.sub, "X", "Y"), role_lit(ax.super, "X", "Y", false)}, {}});
  }
  for (const auto& c : clos.concepts) {
    if (c->kind == K::atomic) {
      const Atom a{concept_predicate(c), {var("X")}};
      out.push_back({a, true, {}, {}});
    }
  }
  for (const auto& r : clos.roles) {
    const Atom a{{r, 2}, {var("X"), var("Y")}};
    out.push_back({a, true, {}, {}});
  }
  for (const auto& c : clos.concepts) {
    const Predicate d = concept_predicate(c);
    const Atom head{d, {var("X")}};
    switch (c->kind) {
      case K::atomic:
        break;
      case K::nominal:
        out.push_back({Atom{d, {Term::constant(c->name)}}, false, {}, {}});
        break;
      case K::negation:
        out.push_back({head, false, {unary(concept_predicate(c->lhs), "X", false)}, {}});
        break;
      case K::conjunction:
        out.push_back(
            {head, false, {unary(concept_predicate(c->lhs), "X"), unary(concept_predicate(c->rhs), "X")}, {}});
        break;
      case K::disjunction:
        out.push_back({head, false, {unary(concept_predicate(c->lhs), "X")}, {}});
        out.push_back({head, false, {unary(concept_predicate(c->rhs), "X")}, {}});
        break;
      case K::exists:
        out.push_back({head, false, {role_lit(c->name, "X", "Y"), unary(concept_predicate(c->lhs), "Y")}, {}});
        if (!with_transitivity) break;
        for (const auto& s : sigma.subroles(c->name)) {
          if (s != c->name && sigma.is_transitive(s)) {
            out.push_back({head, false, {unary(concept_predicate(Concept::exists(s, c->lhs)), "X")}, {}});
          }
        }
        if (sigma.is_transitive(c->name)) {
          out.push_back({head, false, {role_lit(c->name, "X", "Y"), unary(d, "Y")}, {}});
        }
        break;
      case K::forall:
        out.push_back({head, false,
                       {unary(concept_predicate(Concept::exists(c->name, Concept::negation(c->lhs))), "X", false)},
                       {}});
        break;
      case K::at_most:
        out.push_back(
            {head, false, {unary(concept_predicate(Concept::at_least(c->n + 1, c->name, c->lhs)), "X", false)}, {}});
        break;
      case K::at_least: {
        FlatRule r{head, false, {}, {}};
        const Predicate e = concept_predicate(c->lhs);
        for (unsigned i = 1; i <= c->n; ++i) {
          const std::string y = "Y" + std::to_string(i);
          r.body.push_back(role_lit(c->name, "X", y));
          r.body.push_back(unary(e, y));
        }
        for (unsigned i = 1; i <= c->n; ++i) {
          for (unsigned j = i + 1; j <= c->n; ++j) {
            r.neq.push_back({var("Y" + std::to_string(i)), var("Y" + std::to_string(j))});
          }
        }
        out.push_back(std::move(r));
        break;
      }
    }
  }
  std::vector<Rule> rules;
  rules.reserve(out.size());
  for (const auto& f : out) rules.push_back(shape_rule(f));
  return Program(std::move(rules));
}

}  // namespace

bool Closure::contains(const ConceptPtr& c) const {
  const std::string s = c->str();
  return std::any_of(concepts.begin(), concepts.end(), [&](const ConceptPtr& x) { return x->str() == s; });
}

bool Closure::contains_role(const std::string& r) const {
  return std::find(roles.begin(), roles.end(), r) != roles.end();
}

Closure closure(const DlKnowledgeBase& sigma, const std::vector<ConceptPtr>& extra) {
  ClosureBuilder b(sigma);
  for (const auto& ax : sigma.concept_axioms) {
    b.add(ax.sub);
    b.add(ax.super);
  }
  for (const auto& ax : sigma.role_axioms) {
    b.add_role(ax.sub);
    b.add_role(ax.super);
  }
  for (const auto& r : sigma.transitive) b.add_role(r);
  for (const auto& c : extra) b.add(c);
  return b.take();
}

Predicate concept_predicate(const ConceptPtr& c) { return {c->str(), 1}; }

Program translate(const DlKnowledgeBase& sigma, const std::vector<ConceptPtr>& extra) {
  return build(sigma, extra, true);
}

Program translate_simple(const DlKnowledgeBase& sigma, const std::vector<ConceptPtr>& extra) {
  if (!sigma.transitive.empty()) throw TranslationError("not ALCHOQ: knowledge base has transitivity axioms");
  return build(sigma, extra, false);
}

}  // namespace folp
