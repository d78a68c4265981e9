#include "folp/forest/extended_forest.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace folp {

NodeId NodeId::child(int n) const {
  NodeId out = *this;
  out.path.push_back(n);
  return out;
}

std::string NodeId::str() const {
  std::string out = root;
  for (int n : path) {
    out += '.';
    out += std::to_string(n);
  }
  return out;
}

NodeId NodeId::parse(const std::string& text) {
  NodeId id;
  std::stringstream in(text);
  std::string part;
  bool first = true;
  while (std::getline(in, part, '.')) {
    if (first) {
      id.root = part;
      first = false;
      continue;
    }
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) {
      throw std::invalid_argument("bad node address " + text);
    }
    const int n = std::stoi(part);
    if (n <= 0) throw std::invalid_argument("bad node address " + text);
    id.path.push_back(n);
  }
  if (id.root.empty()) throw std::invalid_argument("bad node address " + text);
  return id;
}

bool is_ancestor(const NodeId& x, const NodeId& y) {
  if (x.root != y.root || x.path.size() > y.path.size()) return false;
  return std::equal(x.path.begin(), x.path.end(), y.path.begin());
}

std::vector<NodeId> path_between(const NodeId& x, const NodeId& y) {
  if (!is_ancestor(x, y)) throw std::invalid_argument(x.str() + " is not a prefix of " + y.str());
  std::vector<NodeId> out;
  NodeId cur = x;
  out.push_back(cur);
  for (std::size_t i = x.path.size(); i < y.path.size(); ++i) {
    cur = cur.child(y.path[i]);
    out.push_back(cur);
  }
  return out;
}

ExtendedForest::Index ExtendedForest::add_root(const std::string& name) {
  NodeId id{name, {}};
  if (find(id)) throw std::invalid_argument("duplicate root " + name);
  nodes_.push_back({id, -1, {}, {}});
  return static_cast<Index>(nodes_.size() - 1);
}

ExtendedForest::Index ExtendedForest::add_child(Index parent) {
  auto& p = nodes_.at(static_cast<std::size_t>(parent));
  NodeId id = p.id.child(static_cast<int>(p.children.size()) + 1);
  const auto idx = static_cast<Index>(nodes_.size());
  const int arc = static_cast<int>(arcs_.size());
  arcs_.push_back({parent, idx, false});
  nodes_[static_cast<std::size_t>(parent)].children.push_back(idx);
  nodes_[static_cast<std::size_t>(parent)].out.push_back(arc);
  nodes_.push_back({std::move(id), parent, {}, {}});
  return idx;
}

int ExtendedForest::add_es(Index from, Index root) {
  if (!is_root(root)) throw std::invalid_argument("ES arc must target a root");
  if (auto a = find_arc(from, root)) return *a;
  const int arc = static_cast<int>(arcs_.size());
  arcs_.push_back({from, root, true});
  nodes_.at(static_cast<std::size_t>(from)).out.push_back(arc);
  return arc;
}

std::optional<ExtendedForest::Index> ExtendedForest::find(const NodeId& id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return static_cast<Index>(i);
  }
  return std::nullopt;
}

ExtendedForest::Index ExtendedForest::root_of(Index x) const {
  while (!is_root(x)) x = parent(x);
  return x;
}

std::optional<int> ExtendedForest::find_arc(Index from, Index to) const {
  for (int a : out_arcs(from)) {
    if (arcs_[static_cast<std::size_t>(a)].to == to) return a;
  }
  return std::nullopt;
}

std::vector<ExtendedForest::Index> ExtendedForest::succ(Index x) const {
  std::vector<Index> out;
  for (int a : out_arcs(x)) out.push_back(arcs_[static_cast<std::size_t>(a)].to);
  return out;
}

std::vector<ExtendedForest::Index> ExtendedForest::roots() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].parent < 0) out.push_back(static_cast<Index>(i));
  }
  return out;
}

bool ExtendedForest::is_ancestor(Index x, Index y) const {
  for (Index cur = y; cur >= 0; cur = parent(cur)) {
    if (cur == x) return true;
  }
  return false;
}

std::vector<ExtendedForest::Index> ExtendedForest::path_between(Index x, Index y) const {
  std::vector<Index> out;
  for (Index cur = y; cur >= 0; cur = parent(cur)) {
    out.push_back(cur);
    if (cur == x) {
      std::reverse(out.begin(), out.end());
      return out;
    }
  }
  throw std::invalid_argument(id(x).str() + " is not an ancestor of " + id(y).str());
}

std::vector<NodeId> succ_ef(const ExtendedForest& ef, const NodeId& x) {
  auto idx = ef.find(x);
  if (!idx) throw std::out_of_range("unknown node " + x.str());
  std::vector<NodeId> out;
  for (auto s : ef.succ(*idx)) out.push_back(ef.id(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace folp
