#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "folp/forest/dep_graph.hpp"
#include "folp/forest/extended_forest.hpp"

using namespace folp;

namespace {

// White/grey/black colouring.
bool cycle_by_colouring(const std::vector<std::vector<int>>& adj) {
  std::vector<int> colour(adj.size(), 0);
  std::function<bool(int)> visit = [&](int v) {
    colour[static_cast<std::size_t>(v)] = 1;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (colour[static_cast<std::size_t>(w)] == 1) return true;
      if (colour[static_cast<std::size_t>(w)] == 0 && visit(w)) return true;
    }
    colour[static_cast<std::size_t>(v)] = 2;
    return false;
  };
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (colour[v] == 0 && visit(static_cast<int>(v))) return true;
  }
  return false;
}

// Endpoints of every simple path starting at v.
void enumerate_paths(const std::vector<std::vector<int>>& adj, int v, std::vector<bool>& on_path, std::set<int>& ends) {
  ends.insert(v);
  on_path[static_cast<std::size_t>(v)] = true;
  for (int w : adj[static_cast<std::size_t>(v)]) {
    if (!on_path[static_cast<std::size_t>(w)]) enumerate_paths(adj, w, on_path, ends);
  }
  on_path[static_cast<std::size_t>(v)] = false;
}

}  // namespace

TEST_CASE("node addresses") {
  const NodeId j = NodeId::parse("j");
  const NodeId j11 = NodeId::parse("j.1.1");
  CHECK(j.is_root());
  CHECK(j.child(1).child(1) == j11);
  CHECK(NodeId::parse("j.1.11").str() == "j.1.11");
  CHECK(NodeId::parse("j.12").path == std::vector<int>{12});
  CHECK_THROWS_AS(NodeId::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(NodeId::parse("j.0"), std::invalid_argument);
}

TEST_CASE("prefix order") {
  const NodeId j = NodeId::parse("j");
  const NodeId j1 = NodeId::parse("j.1");
  const NodeId j2 = NodeId::parse("j.2");
  const NodeId j11 = NodeId::parse("j.1.1");
  CHECK(is_ancestor(j, j11));
  CHECK(path_between(j, j11) == std::vector<NodeId>{j, j1, j11});
  CHECK(is_ancestor(j1, j1));
  CHECK_FALSE(is_ancestor(j1, j2));
  CHECK_FALSE(is_ancestor(j11, j1));
  CHECK_THROWS_AS(path_between(j1, j2), std::invalid_argument);
}

TEST_CASE("extended forest successors") {
  ExtendedForest ef;
  const int a = ef.add_root("a");
  const int b = ef.add_root("b");
  const int b1 = ef.add_child(b);
  const int b2 = ef.add_child(b);
  const int b21 = ef.add_child(b2);
  ef.add_es(b2, a);
  (void)b1;
  (void)b21;
  CHECK(succ_ef(ef, NodeId::parse("b.2")) == std::vector<NodeId>{NodeId::parse("a"), NodeId::parse("b.2.1")});
  CHECK(succ_ef(ef, NodeId::parse("a")).empty());
  CHECK_THROWS_AS(succ_ef(ef, NodeId::parse("c")), std::out_of_range);
  CHECK(ef.add_es(b2, a) == ef.add_es(b2, a));
  CHECK_THROWS_AS(ef.add_es(a, b2), std::invalid_argument);

  ExtendedForest g;
  const int y = g.add_child(g.add_root("x"));
  g.add_root("j");
  g.add_es(y, *g.find(NodeId::parse("j")));
  const auto s = succ_ef(g, g.id(y));
  CHECK(std::find(s.begin(), s.end(), NodeId::parse("j")) != s.end());
}

TEST_CASE("tree arcs relate parent and child") {
  ExtendedForest ef;
  int x = ef.add_root("r");
  for (int i = 0; i < 12; ++i) {
    const int c = ef.add_child(x);
    CHECK(ef.is_ancestor(x, c));
    CHECK(ef.path_between(x, c).size() == 2);
    if (i == 11) CHECK(ef.id(c).str() == "r.12");
  }
  x = ef.children(x).back();
  const int c = ef.add_child(x);
  CHECK(ef.id(c).str() == "r.12.1");
}

TEST_CASE("has_cycle") {
  DepGraph g;
  CHECK_FALSE(has_cycle(g));
  const int a = g.add_vertex({0, 0});
  const int b = g.add_vertex({1, 0});
  g.add_arc(a, b);
  CHECK_FALSE(has_cycle(g));
  g.add_arc(b, a);
  CHECK(has_cycle(g));
}

TEST_CASE("has_cycle agrees with colouring on random graphs") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 400; ++round) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, 0.2)(rng);
    DepGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex({v, 0});
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (std::bernoulli_distribution(density)(rng)) {
          g.add_arc(u, v);
          adj[static_cast<std::size_t>(u)].push_back(v);
        }
      }
    }
    CHECK(has_cycle(g) == cycle_by_colouring(adj));
  }
}

TEST_CASE("connpr") {
  SUBCASE("single vertex without arcs") {
    DepGraph g;
    g.add_vertex({0, 0});
    CHECK(connpr(g, 0, 0, {false}).empty());
  }
  SUBCASE("free targets are excluded") {
    DepGraph g;
    const int p = g.add_vertex({0, 0});
    const int q = g.add_vertex({1, 1});
    const int r = g.add_vertex({2, 1});
    g.add_arc(p, q);
    g.add_arc(p, r);
    CHECK(connpr(g, 0, 1, {false, false, true}) == std::set<std::pair<int, int>>{{0, 1}});
  }
}

TEST_CASE("connpr agrees with path enumeration") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    const int preds = std::uniform_int_distribution<int>(1, 4)(rng);
    const int nodes = std::uniform_int_distribution<int>(1, 3)(rng);
    DepGraph g;
    std::vector<AtomKey> keys;
    for (int x = 0; x < nodes; ++x) {
      for (int p = 0; p < preds && static_cast<int>(keys.size()) < 12; ++p) {
        if (std::bernoulli_distribution(0.8)(rng)) {
          keys.push_back({p, x});
          g.add_vertex(keys.back());
        }
      }
    }
    const int n = static_cast<int>(keys.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (std::bernoulli_distribution(0.2)(rng)) {
          g.add_arc(u, v);
          adj[static_cast<std::size_t>(u)].push_back(v);
        }
      }
    }
    std::vector<bool> is_free(static_cast<std::size_t>(preds));
    for (int p = 0; p < preds; ++p) is_free[static_cast<std::size_t>(p)] = std::bernoulli_distribution(0.25)(rng);
    for (int y = 0; y < nodes; ++y) {
      for (int x = 0; x < nodes; ++x) {
        std::set<std::pair<int, int>> expected;
        for (int u = 0; u < n; ++u) {
          if (keys[static_cast<std::size_t>(u)].node != y) continue;
          // Nonempty simple paths: enumerate from each direct successor.
          std::set<int> ends;
          for (int w : adj[static_cast<std::size_t>(u)]) {
            std::vector<bool> on_path(static_cast<std::size_t>(n), false);
            enumerate_paths(adj, w, on_path, ends);
          }
          for (int v : ends) {
            const auto& k = keys[static_cast<std::size_t>(v)];
            if (k.node == x && !is_free[static_cast<std::size_t>(k.pred)]) {
              expected.insert({keys[static_cast<std::size_t>(u)].pred, k.pred});
            }
          }
        }
        CHECK(connpr(g, y, x, is_free) == expected);
      }
    }
  }
}
