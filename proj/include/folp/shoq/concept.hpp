#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace folp {

struct Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

struct Concept {
  enum class Kind { atomic, nominal, negation, conjunction, disjunction, exists, forall, at_least, at_most };

  Kind kind = Kind::atomic;
  std::string name;  // concept name, individual, or role for restrictions
  unsigned n = 0;
  ConceptPtr lhs;  // operand, filler, or left conjunct
  ConceptPtr rhs;

  static ConceptPtr atomic(std::string name);
  static ConceptPtr nominal(std::string individual);
  static ConceptPtr negation(ConceptPtr c);
  static ConceptPtr conjunction(ConceptPtr a, ConceptPtr b);
  static ConceptPtr disjunction(ConceptPtr a, ConceptPtr b);
  static ConceptPtr exists(std::string role, ConceptPtr c);
  static ConceptPtr forall(std::string role, ConceptPtr c);
  static ConceptPtr at_least(unsigned n, std::string role, ConceptPtr c);
  static ConceptPtr at_most(unsigned n, std::string role, ConceptPtr c);

  bool is_role_restriction() const;
  bool is_number_restriction() const { return kind == Kind::at_least || kind == Kind::at_most; }

  // Canonical text: conjunction and disjunction operands sorted and
  // parenthesized. Doubles as the predicate name in translations and is
  // accepted back by the DL parser.
  std::string str() const;
};

bool same_concept(const ConceptPtr& a, const ConceptPtr& b);

struct ConceptAxiom {
  ConceptPtr sub;
  ConceptPtr super;
};

struct RoleAxiom {
  std::string sub;
  std::string super;

  bool operator==(const RoleAxiom&) const = default;
};

struct DlKnowledgeBase {
  std::vector<ConceptAxiom> concept_axioms;
  std::vector<RoleAxiom> role_axioms;
  std::vector<std::string> transitive;

  bool is_transitive(const std::string& role) const;
  // Reflexive-transitive closure of the role hierarchy: all S with S <=* r.
  std::vector<std::string> subroles(const std::string& role) const;
  bool is_simple_role(const std::string& role) const;

  std::vector<std::string> concept_names() const;
  std::vector<std::string> role_names() const;
  std::vector<std::string> individuals() const;
};

struct DlInterpretation {
  std::set<std::string> domain;
  std::map<std::string, std::set<std::string>> concepts;
  std::map<std::string, std::set<std::pair<std::string, std::string>>> roles;

  const std::set<std::string>& extension(const std::string& concept_name) const;
  const std::set<std::pair<std::string, std::string>>& role(const std::string& role_name) const;
};

std::set<std::string> eval_concept(const ConceptPtr& c, const DlInterpretation& interpretation);
bool satisfies(const DlInterpretation& interpretation, const DlKnowledgeBase& kb);

}  // namespace folp
