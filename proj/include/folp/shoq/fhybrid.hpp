#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folp/core/program.hpp"
#include "folp/engine/solver.hpp"
#include "folp/oracle/oracle.hpp"
#include "folp/shoq/concept.hpp"

namespace folp {

struct FHybridKB {
  DlKnowledgeBase sigma;
  Program program;
};

struct DlSignature {
  std::set<std::string> concepts;
  std::set<std::string> roles;

  static DlSignature of(const DlKnowledgeBase& sigma);
  bool contains(const GroundAtom& atom) const;
};

// Evaluates DL literals of a ground program against an interpretation:
// rules with a DL head literal true in I or a DL body literal false in I
// are dropped, remaining DL literals are stripped.
GroundProgram project(const GroundProgram& gp, const DlInterpretation& interpretation, const DlSignature& signature);

Program combined_program(const FHybridKB& kb);

Verdict fhybrid_sat(const FHybridKB& kb, const std::string& p, const SearchConfig& config = {});
Verdict concept_sat(const FHybridKB& kb, const ConceptPtr& c, const SearchConfig& config = {});

struct FHybridModel {
  std::vector<std::string> universe;
  DlInterpretation interpretation;
  std::set<GroundAtom> answer_set;
};

// Constants of the program and individuals of sigma, in that order.
std::vector<std::string> fhybrid_constants(const FHybridKB& kb);

bool is_fhybrid_model(const FHybridKB& kb, const FHybridModel& model);

struct FHybridLimits {
  std::size_t interpretation_bits = 20;
  std::size_t node_budget = OracleLimits{}.node_budget;
};

// Enumerates universes of growing size up to max_domain, all DL
// interpretations over each, and answer sets of the projection. Returns the
// first model in which p holds for some element. Throws OracleScaleError
// when an interpretation space exceeds limits.interpretation_bits.
std::optional<FHybridModel> fhybrid_bounded_check(const FHybridKB& kb, const std::string& p, std::size_t max_domain,
                                                  const FHybridLimits& limits = {});

}  // namespace folp
