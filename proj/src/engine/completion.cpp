#include <algorithm>
#include <stdexcept>

#include "folp/core/analysis.hpp"
#include "folp/engine/completion.hpp"

namespace folp {

namespace {

constexpr std::uint8_t kSigns = flag::pos | flag::neg;

bool signs_subset(const CompletionStructure::Content& x, const CompletionStructure::Content& y) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if ((x[p] & kSigns) & ~(y[p] & kSigns)) return false;
  }
  return true;
}

bool signs_equal(const CompletionStructure::Content& x, const CompletionStructure::Content& y) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if ((x[p] & kSigns) != (y[p] & kSigns)) return false;
  }
  return true;
}

SignedSet to_signed(const CompletionStructure::Content& content, const std::vector<Predicate>& preds) {
  SignedSet out;
  for (std::size_t p = 0; p < content.size(); ++p) {
    if (content[p] & flag::pos) out.push_back({preds[p], true});
    if (content[p] & flag::neg) out.push_back({preds[p], false});
  }
  return out;
}

}  // namespace

int CompletionStructure::add_root(const std::string& name) {
  int x = ef.add_root(name);
  node_ct.emplace_back(ctx->upreds().size(), 0);
  activated.push_back(0);
  saturated.push_back(0);
  return x;
}

int CompletionStructure::add_child(int parent) {
  if (ef.children(parent).size() >= std::max<std::size_t>(ctx->rank(), 1)) {
    throw std::logic_error("tree arity exceeds rank at " + name(parent));
  }
  int x = ef.add_child(parent);
  node_ct.emplace_back(ctx->upreds().size(), 0);
  arc_ct.emplace_back(ctx->bpreds().size(), 0);
  activated.push_back(0);
  saturated.push_back(0);
  return x;
}

int CompletionStructure::add_es(int from, int root) {
  const std::size_t before = ef.arc_count();
  int a = ef.add_es(from, root);
  if (ef.arc_count() != before) arc_ct.emplace_back(ctx->bpreds().size(), 0);
  return a;
}

int CompletionStructure::node_depth(int x) const {
  return ef.depth(x) + (anon_root >= 0 && ef.root_of(x) == anon_root ? 1 : 0);
}

bool CompletionStructure::is_blocked(int x) const { return blocker(x).has_value(); }

std::optional<int> CompletionStructure::blocker(int x) const {
  for (const auto& [y, b] : bl) {
    if (b == x) return y;
  }
  return std::nullopt;
}

SignedSet CompletionStructure::content(int x) const {
  return to_signed(node_ct.at(static_cast<std::size_t>(x)), ctx->upreds());
}

SignedSet CompletionStructure::arc_content(int a) const {
  return to_signed(arc_ct.at(static_cast<std::size_t>(a)), ctx->bpreds());
}

CompletionStructure init_completion(std::shared_ptr<const EngineContext> ctx, const Predicate& p, bool anonymous_root,
                                    const std::optional<std::string>& root) {
  CompletionStructure cs;
  cs.ctx = std::move(ctx);
  const int target_pred = cs.ctx->upred(p);
  for (const auto& c : cs.ctx->constants()) cs.add_root(c);
  int target = 0;
  if (anonymous_root) {
    cs.anon_root = cs.add_root(kAnonymousRoot);
    target = cs.anon_root;
  } else if (root) {
    target = cs.ctx->constant(*root);
    if (target < 0) throw std::invalid_argument("unknown constant " + *root);
  } else if (cs.ctx->constants().empty()) {
    throw std::invalid_argument("program has no constants; an anonymous root is required");
  }
  update(cs, std::nullopt, SLit{target_pred, true}, Target::at_node(target));
  return cs;
}

CompletionStructure init_completion(const Predicate& p, const Program& program, bool anonymous_root,
                                    const std::optional<std::string>& root) {
  if (!p.is_unary()) throw std::invalid_argument("satisfiability target " + p.name + " must be unary");
  auto ctx = std::make_shared<const EngineContext>(eliminate_constraints(program), p);
  return init_completion(std::move(ctx), p, anonymous_root, root);
}

UpdateResult update(CompletionStructure& cs, const std::optional<AtomKey>& from, SLit sp, Target target) {
  std::uint8_t& fl = target.node >= 0
                         ? cs.node_ct.at(static_cast<std::size_t>(target.node)).at(static_cast<std::size_t>(sp.pred))
                         : cs.arc_ct.at(static_cast<std::size_t>(target.arc)).at(static_cast<std::size_t>(sp.pred));
  const std::uint8_t bit = sp.positive ? flag::pos : flag::neg;
  const std::uint8_t other = sp.positive ? flag::neg : flag::pos;
  fl |= bit;
  UpdateResult result = (fl & other) ? UpdateResult::contradiction : UpdateResult::ok;
  if (!sp.positive) return result;
  AtomKey key;
  if (target.node >= 0) {
    key = AtomKey{sp.pred, target.node, -1};
  } else {
    const auto& arc = cs.ef.arc(target.arc);
    key = AtomKey{sp.pred, arc.from, arc.to};
  }
  const int v = cs.g.add_vertex(key);
  if (from) {
    const int u = cs.g.add_vertex(*from);
    if (cs.g.add_arc(u, v) && (u == v || cs.g.reaches(v, u)) && result == UpdateResult::ok) {
      result = UpdateResult::cycle;
    }
  }
  return result;
}

UpdateResult update(CompletionStructure& cs, const std::optional<AtomKey>& from, const SignedPredicate& sp,
                    Target target) {
  const int idx = sp.pred.is_unary() ? cs.ctx->upred(sp.pred) : cs.ctx->bpred(sp.pred);
  return update(cs, from, SLit{idx, sp.positive}, target);
}

bool node_matches(const CompletionStructure& cs, const Term& term, int x) {
  if (term.is_variable()) return true;
  return cs.is_constant(x) && cs.ef.id(x).root == term.name;
}

void activate(CompletionStructure& cs, int x) {
  const auto& ctx = *cs.ctx;
  for (std::size_t p = 0; p < ctx.upreds().size(); ++p) {
    for (const auto& r : ctx.unary_rules(static_cast<int>(p))) {
      if (!node_matches(cs, r.head, x)) continue;
      for (const auto& s : r.successors) {
        if (s.constant >= 0) cs.add_es(x, s.constant);
      }
    }
  }
  for (std::size_t f = 0; f < ctx.bpreds().size(); ++f) {
    for (const auto& r : ctx.binary_rules(static_cast<int>(f))) {
      if (!node_matches(cs, r.root, x) || !r.leaf.is_constant()) continue;
      cs.add_es(x, ctx.constant(r.leaf.name));
    }
  }
  cs.activated[static_cast<std::size_t>(x)] = 1;
}

bool unary_decided(const CompletionStructure& cs, int x) {
  for (std::uint8_t fl : cs.node_ct.at(static_cast<std::size_t>(x))) {
    if (!(fl & kSigns)) return false;
    if ((fl & flag::pos) && !(fl & flag::pos_done)) return false;
  }
  return true;
}

bool is_saturated(const CompletionStructure& cs, int x) {
  auto done = [](std::uint8_t fl) {
    if (!(fl & kSigns)) return false;
    if ((fl & flag::pos) && !(fl & flag::pos_done)) return false;
    if ((fl & flag::neg) && !(fl & flag::neg_done)) return false;
    return true;
  };
  const auto& ct = cs.node_ct.at(static_cast<std::size_t>(x));
  if (!std::all_of(ct.begin(), ct.end(), done)) return false;
  for (int a : cs.ef.out_arcs(x)) {
    const auto& act = cs.arc_ct.at(static_cast<std::size_t>(a));
    if (!std::all_of(act.begin(), act.end(), done)) return false;
  }
  return true;
}

bool block_still_valid(const CompletionStructure& cs, int y, int x) {
  if (!signs_subset(cs.node_ct[static_cast<std::size_t>(x)], cs.node_ct[static_cast<std::size_t>(y)])) return false;
  if (cs.mode == SearchMode::simple) return true;
  return connpr(cs.g, y, x, cs.ctx->unary_free_table()).empty();
}

std::optional<int> find_blocker(const CompletionStructure& cs, int x, SearchMode mode) {
  if (cs.ef.is_root(x)) return std::nullopt;
  const auto& ctx_x = cs.node_ct[static_cast<std::size_t>(x)];
  if (mode == SearchMode::simple) {
    for (int y = 0; y < static_cast<int>(cs.ef.size()); ++y) {
      if (y == x || cs.is_constant(y) || !cs.saturated[static_cast<std::size_t>(y)] || cs.is_blocked(y)) continue;
      if (signs_subset(ctx_x, cs.node_ct[static_cast<std::size_t>(y)])) return y;
    }
    return std::nullopt;
  }
  for (int y : cs.ef.path_between(cs.ef.root_of(x), x)) {
    if (y == x) break;
    if (cs.is_constant(y)) continue;
    if (!signs_subset(ctx_x, cs.node_ct[static_cast<std::size_t>(y)])) continue;
    if (connpr(cs.g, y, x, cs.ctx->unary_free_table()).empty()) return y;
  }
  return std::nullopt;
}

std::optional<int> check_blocked(CompletionStructure& cs, int x, SearchMode mode) {
  auto y = find_blocker(cs, x, mode);
  if (y) cs.bl.emplace_back(*y, x);
  return y;
}

bool is_redundant(const CompletionStructure& cs, int x, std::uint64_t k) {
  if (cs.is_blocked(x)) return false;
  std::uint64_t equal = 0;
  const auto& ct = cs.node_ct[static_cast<std::size_t>(x)];
  for (int y = cs.ef.parent(x); y >= 0; y = cs.ef.parent(y)) {
    if (signs_equal(ct, cs.node_ct[static_cast<std::size_t>(y)])) ++equal;
  }
  return equal >= k;
}

bool is_contradictory(const CompletionStructure& cs) {
  auto bad = [](const CompletionStructure::Content& c) {
    return std::any_of(c.begin(), c.end(), [](std::uint8_t fl) { return (fl & kSigns) == kSigns; });
  };
  return std::any_of(cs.node_ct.begin(), cs.node_ct.end(), bad) || std::any_of(cs.arc_ct.begin(), cs.arc_ct.end(), bad);
}

bool is_clash_free(const CompletionStructure& cs, std::uint64_t k) {
  if (is_contradictory(cs) || cs.g.has_cycle()) return false;
  for (int x = 0; x < static_cast<int>(cs.ef.size()); ++x) {
    if (cs.saturated[static_cast<std::size_t>(x)] && is_redundant(cs, x, k)) return false;
  }
  return true;
}

OpenInterpretation extract_model(const CompletionStructure& cs) {
  if (is_contradictory(cs)) throw ModelError("completion structure is contradictory");
  if (cs.g.has_cycle()) throw ModelError("dependency graph has a positive cycle");
  const auto& ctx = *cs.ctx;
  OpenInterpretation m;
  auto add_unary = [&](int source, int x) {
    const auto& ct = cs.node_ct[static_cast<std::size_t>(source)];
    for (std::size_t p = 0; p < ct.size(); ++p) {
      if (ct[p] & flag::pos) m.atoms.insert({ctx.upreds()[p].name, {cs.name(x)}});
    }
  };
  auto add_binary = [&](int a, int from, int to) {
    const auto& ct = cs.arc_ct[static_cast<std::size_t>(a)];
    for (std::size_t f = 0; f < ct.size(); ++f) {
      if (ct[f] & flag::pos) m.atoms.insert({ctx.bpreds()[f].name, {cs.name(from), cs.name(to)}});
    }
  };
  for (int x = 0; x < static_cast<int>(cs.ef.size()); ++x) {
    m.universe.insert(cs.name(x));
    auto y = cs.blocker(x);
    add_unary(y ? *y : x, x);
    for (int a : cs.ef.out_arcs(x)) add_binary(a, x, cs.ef.arc(a).to);
    if (y) {
      for (int a : cs.ef.out_arcs(*y)) add_binary(a, x, cs.ef.arc(a).to);
    }
  }
  return m;
}

}  // namespace folp
