#pragma once

#include <cstddef>
#include <vector>

#include "folp/core/program.hpp"

namespace folp {

std::size_t degree_rule(const Rule& rule);
std::size_t degree_pred(const Predicate& p, const Program& program);
std::size_t rank(const Program& program);

inline constexpr const char* kConstraintPrefix = "__constr";

// Rewrites every constraint `:- body` into a rule for a fresh predicate
// whose negation sits in the body. Unary-shaped bodies get a unary fresh
// predicate over the root term; binary-shaped bodies a binary one over the
// arc, so that `:- f(X,Y), g(X,Y).` becomes `c(X,Y) :- not c(X,Y), f(X,Y), g(X,Y).`
Program eliminate_constraints(const Program& program);

bool is_constraint_predicate(const Predicate& p);

struct MarkedGraph {
  struct Arc {
    Predicate from;
    Predicate to;
    bool marked = false;

    bool operator==(const Arc&) const = default;
  };

  std::vector<Predicate> vertices;
  std::vector<Arc> arcs;

  bool has_arc(const Predicate& from, const Predicate& to) const;
  bool is_marked(const Predicate& from, const Predicate& to) const;
};

MarkedGraph marked_dep_graph(const Program& program);
bool is_simple(const Program& program);

}  // namespace folp
