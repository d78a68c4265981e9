#include "folp/forest/dep_graph.hpp"

#include <algorithm>

namespace folp {

int DepGraph::add_vertex(const AtomKey& atom) {
  auto [it, inserted] = index_.emplace(atom, static_cast<int>(atoms_.size()));
  if (inserted) {
    atoms_.push_back(atom);
    out_.emplace_back();
  }
  return it->second;
}

std::optional<int> DepGraph::find(const AtomKey& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DepGraph::add_arc(int from, int to) {
  auto& list = out_.at(static_cast<std::size_t>(from));
  if (std::find(list.begin(), list.end(), to) != list.end()) return false;
  list.push_back(to);
  return true;
}

std::size_t DepGraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& l : out_) n += l.size();
  return n;
}

std::vector<std::pair<int, int>> DepGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t v = 0; v < out_.size(); ++v) {
    for (int w : out_[v]) out.emplace_back(static_cast<int>(v), w);
  }
  return out;
}

bool DepGraph::reaches(int from, int to) const {
  std::vector<char> seen(atoms_.size(), 0);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w : out_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

bool DepGraph::has_cycle() const {
  // 0 white, 1 on stack, 2 done
  std::vector<char> color(atoms_.size(), 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (std::size_t start = 0; start < atoms_.size(); ++start) {
    if (color[start]) continue;
    stack.emplace_back(static_cast<int>(start), 0);
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& succ = out_[static_cast<std::size_t>(v)];
      if (next < succ.size()) {
        int w = succ[next++];
        if (color[static_cast<std::size_t>(w)] == 1) return true;
        if (color[static_cast<std::size_t>(w)] == 0) {
          color[static_cast<std::size_t>(w)] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

bool has_cycle(const DepGraph& g) { return g.has_cycle(); }

std::set<std::pair<int, int>> connpr(const DepGraph& g, int y, int x, const std::vector<bool>& is_free) {
  std::set<std::pair<int, int>> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const AtomKey& start = g.atom(static_cast<int>(v));
    if (start.is_binary() || start.node != y) continue;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int w : g.out(static_cast<int>(v))) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      const AtomKey& a = g.atom(cur);
      if (!a.is_binary() && a.node == x && !is_free.at(static_cast<std::size_t>(a.pred))) {
        out.emplace(start.pred, a.pred);
      }
      for (int w : g.out(cur)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

}  // namespace folp
