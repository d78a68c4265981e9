#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "folp/engine/completion.hpp"

namespace folp {

enum class KVariant { rule9, appendix };

// Seed of the refutation-order permutation.
inline constexpr std::uint64_t kDefaultSeed = 3;

struct SearchConfig {
  SearchMode mode = SearchMode::automatic;
  std::optional<std::uint64_t> redundancy_k;
  KVariant k_variant = KVariant::rule9;
  std::optional<int> depth_cap = 50;
  std::uint64_t seed = kDefaultSeed;
  bool emit_trace = false;
  std::ostream* trace = nullptr;  // std::cerr when null
  std::size_t max_steps = 2'000'000;
};

// 2^p (2^(p^2) - 1) + 2, or +3 for the appendix variant; saturates at the
// largest representable value.
std::uint64_t default_redundancy_k(std::size_t p, KVariant variant = KVariant::rule9);

struct Sat {
  OpenInterpretation model;
  CompletionStructure structure;
};

struct Unsat {};

struct Unknown {
  std::string reason;
};

using Verdict = std::variant<Sat, Unsat, Unknown>;

const char* verdict_name(const Verdict& v);

// Throws std::invalid_argument for programs that are not FoLPs or for a
// binary target.
Verdict solve(const Program& program, const Predicate& p, const SearchConfig& config = {});

SearchMode resolve_mode(const Program& program, SearchMode mode);

}  // namespace folp
