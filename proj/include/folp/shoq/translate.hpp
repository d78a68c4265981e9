#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "folp/core/program.hpp"
#include "folp/shoq/concept.hpp"

namespace folp {

class TranslationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Closure {
  std::vector<ConceptPtr> concepts;  // insertion order
  std::vector<std::string> roles;

  bool contains(const ConceptPtr& c) const;
  bool contains_role(const std::string& r) const;
  std::size_t size() const { return concepts.size() + roles.size(); }
};

Closure closure(const DlKnowledgeBase& sigma, const std::vector<ConceptPtr>& extra = {});

// Predicate standing for a concept in translated programs.
Predicate concept_predicate(const ConceptPtr& c);

// Throws TranslationError when a number restriction uses a non-simple role.
Program translate(const DlKnowledgeBase& sigma, const std::vector<ConceptPtr>& extra = {});

// Transitivity-free variant; throws TranslationError("not ALCHOQ") when
// sigma has a transitivity axiom.
Program translate_simple(const DlKnowledgeBase& sigma, const std::vector<ConceptPtr>& extra = {});

}  // namespace folp
