#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace folp {

// Address of a forest node: a root name followed by a sequence of child
// numbers, printed with dots, e.g. j.1.11.
struct NodeId {
  std::string root;
  std::vector<int> path;

  bool is_root() const { return path.empty(); }
  NodeId child(int n) const;
  std::string str() const;
  static NodeId parse(const std::string& text);

  auto operator<=>(const NodeId&) const = default;
  bool operator==(const NodeId&) const = default;
};

// Prefix order on node addresses; reflexive.
bool is_ancestor(const NodeId& x, const NodeId& y);
std::vector<NodeId> path_between(const NodeId& x, const NodeId& y);

class ExtendedForest {
 public:
  using Index = int;

  struct Arc {
    Index from = -1;
    Index to = -1;
    bool es = false;
  };

  Index add_root(const std::string& name);
  Index add_child(Index parent);
  // Adds an arc back to a root; returns the existing arc when present.
  int add_es(Index from, Index root);

  std::size_t size() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const NodeId& id(Index x) const { return nodes_.at(static_cast<std::size_t>(x)).id; }
  std::optional<Index> find(const NodeId& id) const;
  Index parent(Index x) const { return nodes_.at(static_cast<std::size_t>(x)).parent; }
  bool is_root(Index x) const { return parent(x) < 0; }
  int depth(Index x) const { return static_cast<int>(id(x).path.size()); }
  Index root_of(Index x) const;

  const std::vector<Index>& children(Index x) const { return nodes_.at(static_cast<std::size_t>(x)).children; }
  const std::vector<int>& out_arcs(Index x) const { return nodes_.at(static_cast<std::size_t>(x)).out; }
  const Arc& arc(int a) const { return arcs_.at(static_cast<std::size_t>(a)); }
  std::optional<int> find_arc(Index from, Index to) const;

  // Tree children and ES targets, in arc creation order.
  std::vector<Index> succ(Index x) const;
  std::vector<Index> roots() const;

  bool is_ancestor(Index x, Index y) const;
  std::vector<Index> path_between(Index x, Index y) const;

 private:
  struct Node {
    NodeId id;
    Index parent = -1;
    std::vector<Index> children;
    std::vector<int> out;
  };

  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
};

// Sorted successor addresses of x; throws std::out_of_range for unknown x.
std::vector<NodeId> succ_ef(const ExtendedForest& ef, const NodeId& x);

}  // namespace folp
