#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace folp {

// A ground positive atom over forest node indices: p(node) when `leaf` is
// negative, f(node, leaf) otherwise. Predicates are indexes into the
// caller's unary or binary predicate table.
struct AtomKey {
  int pred = 0;
  int node = 0;
  int leaf = -1;

  bool is_binary() const { return leaf >= 0; }
  auto operator<=>(const AtomKey&) const = default;
};

class DepGraph {
 public:
  int add_vertex(const AtomKey& atom);
  std::optional<int> find(const AtomKey& atom) const;
  // Returns true when the arc is new.
  bool add_arc(int from, int to);

  std::size_t vertex_count() const { return atoms_.size(); }
  std::size_t arc_count() const;
  const AtomKey& atom(int v) const { return atoms_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& out(int v) const { return out_.at(static_cast<std::size_t>(v)); }
  std::vector<std::pair<int, int>> arcs() const;

  bool reaches(int from, int to) const;
  bool has_cycle() const;

 private:
  std::vector<AtomKey> atoms_;
  std::map<AtomKey, int> index_;
  std::vector<std::vector<int>> out_;
};

bool has_cycle(const DepGraph& g);

// Pairs (p,q) of unary predicate indexes with a path from p(y) to q(x) in g
// and q not free. `is_free` is indexed by unary predicate.
std::set<std::pair<int, int>> connpr(const DepGraph& g, int y, int x, const std::vector<bool>& is_free);

}  // namespace folp
