#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "folp/core/program.hpp"
#include "folp/forest/dep_graph.hpp"
#include "folp/forest/extended_forest.hpp"
#include "folp/oracle/oracle.hpp"

namespace folp {

enum class SearchMode { full, simple, automatic };

// Signed predicate over the engine's predicate tables.
struct SLit {
  int pred = 0;
  bool positive = true;

  SLit flipped() const { return {pred, !positive}; }
  bool operator==(const SLit&) const = default;
};

struct CompiledSuccessor {
  Term term;
  int constant = -1;
  std::vector<SLit> gamma;
  std::vector<SLit> delta;
};

struct CompiledUnaryRule {
  std::size_t rule_index = 0;
  Term head;
  std::vector<SLit> beta;
  std::vector<CompiledSuccessor> successors;
  std::vector<std::pair<int, int>> psi;
};

struct CompiledBinaryRule {
  std::size_t rule_index = 0;
  Term root;
  Term leaf;
  std::vector<SLit> beta;
  std::vector<SLit> gamma;
  std::vector<SLit> delta;
};

// The constraint-free program in table form. Shared by every structure of
// one search.
class EngineContext {
 public:
  EngineContext(const Program& program, const Predicate& target);

  const Program& program() const { return program_; }
  const std::vector<Predicate>& upreds() const { return upreds_; }
  const std::vector<Predicate>& bpreds() const { return bpreds_; }
  const std::vector<std::string>& constants() const { return program_.constants(); }
  int upred(const Predicate& p) const;
  int bpred(const Predicate& p) const;
  int constant(const std::string& name) const;

  bool unary_free(int p) const { return ufree_[static_cast<std::size_t>(p)]; }
  bool binary_free(int f) const { return bfree_[static_cast<std::size_t>(f)]; }
  const std::vector<bool>& unary_free_table() const { return ufree_; }
  const std::vector<std::vector<Term>>& unary_free_patterns(int p) const { return upatterns_[static_cast<std::size_t>(p)]; }
  const std::vector<std::vector<Term>>& binary_free_patterns(int f) const { return bpatterns_[static_cast<std::size_t>(f)]; }
  const std::vector<CompiledUnaryRule>& unary_rules(int p) const { return urules_[static_cast<std::size_t>(p)]; }
  const std::vector<CompiledBinaryRule>& binary_rules(int f) const { return brules_[static_cast<std::size_t>(f)]; }
  std::size_t rank() const { return rank_; }

  Predicate upred_at(int p) const { return upreds_[static_cast<std::size_t>(p)]; }
  Predicate bpred_at(int f) const { return bpreds_[static_cast<std::size_t>(f)]; }

 private:
  std::vector<SLit> compile(const SignedSet& set, bool binary) const;

  Program program_;
  std::vector<Predicate> upreds_;
  std::vector<Predicate> bpreds_;
  std::map<Predicate, int> uindex_;
  std::map<Predicate, int> bindex_;
  std::map<std::string, int> cindex_;
  std::vector<bool> ufree_;
  std::vector<bool> bfree_;
  std::vector<std::vector<std::vector<Term>>> upatterns_;
  std::vector<std::vector<std::vector<Term>>> bpatterns_;
  std::vector<std::vector<CompiledUnaryRule>> urules_;
  std::vector<std::vector<CompiledBinaryRule>> brules_;
  std::size_t rank_ = 0;
};

namespace flag {
inline constexpr std::uint8_t pos = 1;
inline constexpr std::uint8_t neg = 2;
inline constexpr std::uint8_t pos_done = 4;
inline constexpr std::uint8_t neg_done = 8;
}  // namespace flag

inline constexpr const char* kAnonymousRoot = "_e";

struct Target {
  int node = -1;
  int arc = -1;

  static Target at_node(int x) { return {x, -1}; }
  static Target at_arc(int a) { return {-1, a}; }
};

enum class UpdateResult { ok, contradiction, cycle };

struct CompletionStructure {
  using Content = std::vector<std::uint8_t>;

  std::shared_ptr<const EngineContext> ctx;
  ExtendedForest ef;
  std::vector<Content> node_ct;
  std::vector<Content> arc_ct;
  DepGraph g;
  std::vector<std::pair<int, int>> bl;  // (blocking, blocked)
  std::vector<std::uint8_t> activated;
  std::vector<std::uint8_t> saturated;
  int anon_root = -1;
  SearchMode mode = SearchMode::full;
  std::uint64_t seed = 0;

  int add_root(const std::string& name);
  int add_child(int parent);
  int add_es(int from, int root);

  std::string name(int x) const { return ef.id(x).str(); }
  std::optional<int> node(const NodeId& id) const { return ef.find(id); }
  int node_depth(int x) const;
  bool is_constant(int x) const { return ef.is_root(x) && x != anon_root; }
  bool is_blocked(int x) const;
  std::optional<int> blocker(int x) const;

  std::uint8_t node_flags(int x, int p) const { return node_ct[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)]; }
  std::uint8_t arc_flags(int a, int f) const { return arc_ct[static_cast<std::size_t>(a)][static_cast<std::size_t>(f)]; }
  bool node_has(int x, SLit l) const { return node_flags(x, l.pred) & (l.positive ? flag::pos : flag::neg); }
  bool arc_has(int a, SLit l) const { return arc_flags(a, l.pred) & (l.positive ? flag::pos : flag::neg); }

  // Signed content in predicate order, positives before negatives per predicate.
  SignedSet content(int x) const;
  SignedSet arc_content(int a) const;
  std::optional<int> atom_vertex(const AtomKey& key) const { return g.find(key); }
};

CompletionStructure init_completion(const Predicate& p, const Program& program, bool anonymous_root,
                                    const std::optional<std::string>& root = std::nullopt);
CompletionStructure init_completion(std::shared_ptr<const EngineContext> ctx, const Predicate& p, bool anonymous_root,
                                    const std::optional<std::string>& root = std::nullopt);

UpdateResult update(CompletionStructure& cs, const std::optional<AtomKey>& from, SLit sp, Target target);
UpdateResult update(CompletionStructure& cs, const std::optional<AtomKey>& from, const SignedPredicate& sp,
                    Target target);

// Emits each surviving branch; returning true from emit stops the
// enumeration and the operation returns true.
using Emit = std::function<bool(CompletionStructure&&)>;

bool expand_unary_positive(const CompletionStructure& cs, int x, int p, const Emit& emit);
bool choose_unary(const CompletionStructure& cs, int x, int p, const Emit& emit);
bool expand_unary_negative(const CompletionStructure& cs, int x, int p, const Emit& emit);
bool expand_binary_positive(const CompletionStructure& cs, int arc, int f, const Emit& emit);
bool expand_binary_negative(const CompletionStructure& cs, int arc, int f, const Emit& emit);
bool choose_binary(const CompletionStructure& cs, int arc, int f, const Emit& emit);

// Adds the ES arcs to every constant that a rule matching x can reach.
void activate(CompletionStructure& cs, int x);

template <typename Op, typename... Args>
std::vector<CompletionStructure> branches(Op op, const CompletionStructure& cs, Args... args) {
  std::vector<CompletionStructure> out;
  op(cs, args..., [&](CompletionStructure&& c) {
    out.push_back(std::move(c));
    return false;
  });
  return out;
}

bool node_matches(const CompletionStructure& cs, const Term& term, int x);
bool unary_decided(const CompletionStructure& cs, int x);
bool is_saturated(const CompletionStructure& cs, int x);
std::optional<int> find_blocker(const CompletionStructure& cs, int x, SearchMode mode);
std::optional<int> check_blocked(CompletionStructure& cs, int x, SearchMode mode);
bool block_still_valid(const CompletionStructure& cs, int y, int x);
bool is_redundant(const CompletionStructure& cs, int x, std::uint64_t k);
bool is_contradictory(const CompletionStructure& cs);
bool is_clash_free(const CompletionStructure& cs, std::uint64_t k);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OpenInterpretation extract_model(const CompletionStructure& cs);

}  // namespace folp
