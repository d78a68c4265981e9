#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "folp/core/term.hpp"

namespace folp {

struct Successor {
  Term term;
  SignedSet gamma;  // binary, on the arc from the root term to `term`
  SignedSet delta;  // unary, on `term`

  bool operator==(const Successor&) const = default;
};

// Body of a unary rule or unary-shaped constraint: local part on `root`,
// one successor group per distinct successor term, and inequalities
// between successor positions.
struct UnaryBody {
  Term root;
  SignedSet beta;
  std::vector<Successor> successors;
  std::vector<std::pair<int, int>> psi;

  bool operator==(const UnaryBody&) const = default;
};

struct BinaryBody {
  Term root;
  Term leaf;
  SignedSet beta;
  SignedSet gamma;
  SignedSet delta;

  bool operator==(const BinaryBody&) const = default;
};

// p(X) v not p(X). or f(X,Y) v not f(X,Y).
struct FreeRule {
  Predicate pred;
  std::vector<Term> args;

  bool operator==(const FreeRule&) const = default;
};

struct UnaryRule {
  Predicate head;
  UnaryBody body;

  bool operator==(const UnaryRule&) const = default;
};

struct BinaryRule {
  Predicate head;
  BinaryBody body;

  bool operator==(const BinaryRule&) const = default;
};

struct UnaryConstraint {
  UnaryBody body;

  bool operator==(const UnaryConstraint&) const = default;
};

struct BinaryConstraint {
  BinaryBody body;

  bool operator==(const BinaryConstraint&) const = default;
};

// Any rule that does not fit the tree shape. Kept so that diagnostics can
// name it and so that the ground oracle can still evaluate it.
struct GeneralRule {
  std::optional<Atom> head;
  bool free = false;
  std::vector<Literal> body;
  std::vector<Inequality> neq;
  std::string reason;

  bool operator==(const GeneralRule&) const = default;
};

using Rule = std::variant<FreeRule, UnaryRule, BinaryRule, UnaryConstraint, BinaryConstraint, GeneralRule>;

// Literal-level view of any rule, used by grounding and printing.
struct FlatRule {
  std::optional<Atom> head;
  bool free = false;
  std::vector<Literal> body;
  std::vector<Inequality> neq;
};

FlatRule flatten(const Rule& rule);

// Inverse of flatten: groups body literals into the tree shape, or falls
// back to a GeneralRule carrying the reason.
Rule shape_rule(const FlatRule& flat);

class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::string>& constants() const { return constants_; }
  const std::vector<Predicate>& unary_predicates() const { return upreds_; }
  const std::vector<Predicate>& binary_predicates() const { return bpreds_; }
  const std::vector<Predicate>& free_predicates() const { return free_; }

  bool is_free(const Predicate& p) const;
  bool has_predicate(const Predicate& p) const;
  std::optional<Predicate> find_predicate(const std::string& name) const;

  // Indexes into rules() of the definite unary/binary rules with head p.
  const std::vector<std::size_t>& rules_for(const Predicate& p) const;

  // Free rules for p that carry at least one constant argument.
  const std::vector<std::size_t>& ground_free_rules_for(const Predicate& p) const;

  bool operator==(const Program& other) const { return rules_ == other.rules_; }

 private:
  std::vector<Rule> rules_;
  std::vector<std::string> constants_;
  std::vector<Predicate> upreds_;
  std::vector<Predicate> bpreds_;
  std::vector<Predicate> free_;
  std::map<Predicate, std::vector<std::size_t>> rules_for_;
  std::map<Predicate, std::vector<std::size_t>> ground_free_;
};

struct Diagnostic {
  std::size_t rule_index = 0;
  std::string message;
};

std::vector<Diagnostic> validate_folp(const Program& program);

}  // namespace folp
