#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "folp/core/program.hpp"

namespace folp {

struct GroundAtom {
  std::string pred;
  std::vector<std::string> args;

  std::string str() const;
  auto operator<=>(const GroundAtom&) const = default;
  bool operator==(const GroundAtom&) const = default;
};

struct OpenInterpretation {
  std::set<std::string> universe;
  std::set<GroundAtom> atoms;

  bool operator==(const OpenInterpretation&) const = default;
};

struct GroundRule {
  enum class Kind { normal, free, constraint };

  Kind kind = Kind::normal;
  int head = -1;
  std::vector<int> pos;
  std::vector<int> neg;
};

struct GroundProgram {
  std::vector<GroundAtom> atoms;
  std::map<GroundAtom, int> index;
  std::vector<GroundRule> rules;

  int intern(const GroundAtom& atom);
  std::optional<int> find(const GroundAtom& atom) const;
};

class OracleScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroundProgram ground(const Program& program, const std::vector<std::string>& universe);
GroundProgram gl_reduct(const GroundProgram& gp, const std::set<int>& interpretation);
// Bottom-up fixpoint of a negation-free program; constraints are ignored.
std::set<int> least_model(const GroundProgram& gp);

bool is_answer_set(const GroundProgram& gp, const std::set<int>& m);
bool is_answer_set(const Program& program, const std::vector<std::string>& universe,
                   const std::set<GroundAtom>& m);
bool is_answer_set(const Program& program, const OpenInterpretation& interpretation);

struct OracleLimits {
  std::size_t atom_limit = 24;
  std::size_t node_budget = 2'000'000;
};

// Answer set of gp containing at least one atom from `targets` (any answer
// set when targets is empty), found by branching with well-founded style
// bounds propagation.
std::optional<std::set<int>> find_answer_set(const GroundProgram& gp, const std::vector<int>& targets,
                                             std::size_t node_budget = OracleLimits{}.node_budget);

std::vector<std::string> fresh_elements(const Program& program, std::size_t count);
std::size_t herbrand_size(const Program& program, std::size_t universe_size);

std::optional<OpenInterpretation> bounded_sat(const Program& program, const Predicate& p, std::size_t max_extra,
                                              const OracleLimits& limits = {});

Program build_pk(const Program& program, std::size_t k, const Predicate& p);

}  // namespace folp
