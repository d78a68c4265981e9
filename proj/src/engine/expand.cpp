#include <algorithm>
#include <string>

#include "folp/engine/completion.hpp"

namespace folp {

namespace {

struct Flip {
  Target target;
  SLit lit;

  bool operator==(const Flip& o) const {
    return target.node == o.target.node && target.arc == o.target.arc && lit == o.lit;
  }
};

struct Obligation {
  std::string signature;
  std::vector<Flip> flips;
};

bool has(const CompletionStructure& cs, const Flip& f) {
  return f.target.node >= 0 ? cs.node_has(f.target.node, f.lit) : cs.arc_has(f.target.arc, f.lit);
}

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void seeded_shuffle(std::vector<Flip>& flips, std::uint64_t seed, const std::string& signature) {
  std::uint64_t state = seed ^ fnv1a(signature);
  for (std::size_t i = flips.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(splitmix(state) % i);
    std::swap(flips[i - 1], flips[j]);
  }
}

bool matches_pattern(const CompletionStructure& cs, const std::vector<Term>& pattern, std::initializer_list<int> nodes) {
  std::size_t i = 0;
  for (int n : nodes) {
    if (!node_matches(cs, pattern[i++], n)) return false;
  }
  return true;
}

bool apply(CompletionStructure& cs, const std::optional<AtomKey>& from, const std::vector<SLit>& lits, Target t) {
  for (const auto& l : lits) {
    if (update(cs, from, l, t) != UpdateResult::ok) return false;
  }
  return true;
}

void mark(CompletionStructure& cs, Target t, int pred, std::uint8_t bit) {
  auto& content = t.node >= 0 ? cs.node_ct[static_cast<std::size_t>(t.node)] : cs.arc_ct[static_cast<std::size_t>(t.arc)];
  content[static_cast<std::size_t>(pred)] |= bit;
}

int arc_between(const CompletionStructure& cs, int x, int y) {
  auto a = cs.ef.find_arc(x, y);
  if (!a) throw std::logic_error("missing arc " + cs.name(x) + " -> " + cs.name(y));
  return *a;
}

std::vector<Flip> flips_of(const std::vector<SLit>& lits, Target t) {
  std::vector<Flip> out;
  for (const auto& l : lits) out.push_back({t, l.flipped()});
  return out;
}

// Refutes every obligation in turn; obligations are recomputed after each
// choice since earlier flips may discharge later ones.
template <typename Make>
bool refute(const CompletionStructure& cs, const Make& make, Target done_at, int pred, const Emit& emit) {
  std::vector<Obligation> obligations = make(cs);
  for (auto& ob : obligations) {
    if (std::any_of(ob.flips.begin(), ob.flips.end(), [&](const Flip& f) { return has(cs, f); })) continue;
    std::vector<Flip> options;
    for (const auto& f : ob.flips) {
      if (has(cs, Flip{f.target, f.lit.flipped()})) continue;
      if (std::find(options.begin(), options.end(), f) == options.end()) options.push_back(f);
    }
    seeded_shuffle(options, cs.seed, ob.signature);
    for (const auto& f : options) {
      CompletionStructure c = cs;
      if (update(c, std::nullopt, f.lit, f.target) != UpdateResult::ok) continue;
      if (refute(c, make, done_at, pred, emit)) return true;
    }
    return false;
  }
  CompletionStructure c = cs;
  mark(c, done_at, pred, flag::neg_done);
  return emit(std::move(c));
}

struct Assignment {
  const CompiledUnaryRule& rule;
  int x;
  int p;
  AtomKey head;
};

bool assign(const CompletionStructure& cs, const Assignment& job, std::size_t m, std::vector<int>& chosen,
            const Emit& emit) {
  const auto& rule = job.rule;
  if (m == rule.successors.size()) {
    CompletionStructure c = cs;
    mark(c, Target::at_node(job.x), job.p, flag::pos_done);
    return emit(std::move(c));
  }
  const auto& s = rule.successors[m];
  auto psi_ok = [&](int y) {
    for (const auto& [i, j] : rule.psi) {
      const std::size_t other = static_cast<std::size_t>(i) == m ? static_cast<std::size_t>(j)
                                : static_cast<std::size_t>(j) == m ? static_cast<std::size_t>(i)
                                                                   : m;
      if (other < m && chosen[other] == y) return false;
    }
    return true;
  };
  // Candidate encoding: >= 0 an existing node, -1 a fresh child, -2 - c the constant c.
  std::vector<int> candidates;
  if (s.constant >= 0) {
    candidates.push_back(-2 - s.constant);
  } else {
    const auto existing = cs.ef.succ(job.x);
    candidates.insert(candidates.end(), existing.begin(), existing.end());
    candidates.push_back(-1);
    for (int c = 0; c < static_cast<int>(cs.ctx->constants().size()); ++c) {
      if (std::find(existing.begin(), existing.end(), c) == existing.end()) candidates.push_back(-2 - c);
    }
  }
  for (int cand : candidates) {
    if (cand >= 0 && !psi_ok(cand)) continue;
    if (cand <= -2 && !psi_ok(-2 - cand)) continue;
    CompletionStructure c = cs;
    int y = 0;
    if (cand >= 0) {
      y = cand;
    } else if (cand == -1) {
      y = c.add_child(job.x);
    } else {
      y = -2 - cand;
      c.add_es(job.x, y);
    }
    const int a = arc_between(c, job.x, y);
    if (!apply(c, job.head, s.gamma, Target::at_arc(a))) continue;
    if (!apply(c, job.head, s.delta, Target::at_node(y))) continue;
    chosen.push_back(y);
    const bool stop = assign(c, job, m + 1, chosen, emit);
    chosen.pop_back();
    if (stop) return true;
  }
  return false;
}

void tuples(const CompletionStructure& cs, const CompiledUnaryRule& rule, int x, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& out) {
  const std::size_t m = cur.size();
  if (m == rule.successors.size()) {
    out(cur);
    return;
  }
  const auto& s = rule.successors[m];
  std::vector<int> cands;
  if (s.constant >= 0) {
    cands.push_back(s.constant);
  } else {
    cands = cs.ef.succ(x);
  }
  for (int y : cands) {
    bool ok = true;
    for (const auto& [i, j] : rule.psi) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      if ((ui == m && uj < m && cur[uj] == y) || (uj == m && ui < m && cur[ui] == y)) ok = false;
    }
    if (!ok) continue;
    cur.push_back(y);
    tuples(cs, rule, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool expand_unary_positive(const CompletionStructure& cs, int x, int p, const Emit& emit) {
  const auto& ctx = *cs.ctx;
  bool trivially = ctx.unary_free(p);
  for (const auto& pat : ctx.unary_free_patterns(p)) trivially = trivially || matches_pattern(cs, pat, {x});
  if (trivially) {
    CompletionStructure c = cs;
    mark(c, Target::at_node(x), p, flag::pos_done);
    return emit(std::move(c));
  }
  const AtomKey head{p, x, -1};
  for (const auto& rule : ctx.unary_rules(p)) {
    if (!node_matches(cs, rule.head, x)) continue;
    CompletionStructure c = cs;
    if (!apply(c, head, rule.beta, Target::at_node(x))) continue;
    std::vector<int> chosen;
    if (assign(c, Assignment{rule, x, p, head}, 0, chosen, emit)) return true;
  }
  return false;
}

bool choose_unary(const CompletionStructure& cs, int x, int p, const Emit& emit) {
  for (bool positive : {true, false}) {
    CompletionStructure c = cs;
    if (update(c, std::nullopt, SLit{p, positive}, Target::at_node(x)) != UpdateResult::ok) continue;
    if (emit(std::move(c))) return true;
  }
  return false;
}

bool choose_binary(const CompletionStructure& cs, int arc, int f, const Emit& emit) {
  for (bool positive : {true, false}) {
    CompletionStructure c = cs;
    if (update(c, std::nullopt, SLit{f, positive}, Target::at_arc(arc)) != UpdateResult::ok) continue;
    if (emit(std::move(c))) return true;
  }
  return false;
}

bool expand_unary_negative(const CompletionStructure& cs, int x, int p, const Emit& emit) {
  auto make = [x, p](const CompletionStructure& s) {
    std::vector<Obligation> out;
    const auto& rules = s.ctx->unary_rules(p);
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      const auto& rule = rules[ri];
      if (!node_matches(s, rule.head, x)) continue;
      std::vector<int> cur;
      tuples(s, rule, x, cur, [&](const std::vector<int>& tuple) {
        Obligation ob;
        ob.signature = "u" + std::to_string(rule.rule_index) + ":" + s.name(x);
        ob.flips = flips_of(rule.beta, Target::at_node(x));
        for (std::size_t m = 0; m < tuple.size(); ++m) {
          const int y = tuple[m];
          ob.signature += ":" + s.name(y);
          const int a = arc_between(s, x, y);
          for (const auto& f : flips_of(rule.successors[m].gamma, Target::at_arc(a))) ob.flips.push_back(f);
          for (const auto& f : flips_of(rule.successors[m].delta, Target::at_node(y))) ob.flips.push_back(f);
        }
        out.push_back(std::move(ob));
      });
    }
    return out;
  };
  return refute(cs, make, Target::at_node(x), p, emit);
}

bool expand_binary_positive(const CompletionStructure& cs, int arc, int f, const Emit& emit) {
  const auto& ctx = *cs.ctx;
  const auto& a = cs.ef.arc(arc);
  bool trivially = ctx.binary_free(f);
  for (const auto& pat : ctx.binary_free_patterns(f)) trivially = trivially || matches_pattern(cs, pat, {a.from, a.to});
  if (trivially) {
    CompletionStructure c = cs;
    mark(c, Target::at_arc(arc), f, flag::pos_done);
    return emit(std::move(c));
  }
  const AtomKey head{f, a.from, a.to};
  for (const auto& rule : ctx.binary_rules(f)) {
    if (!node_matches(cs, rule.root, a.from) || !node_matches(cs, rule.leaf, a.to)) continue;
    CompletionStructure c = cs;
    if (!apply(c, head, rule.beta, Target::at_node(a.from))) continue;
    if (!apply(c, head, rule.gamma, Target::at_arc(arc))) continue;
    if (!apply(c, head, rule.delta, Target::at_node(a.to))) continue;
    mark(c, Target::at_arc(arc), f, flag::pos_done);
    if (emit(std::move(c))) return true;
  }
  return false;
}

bool expand_binary_negative(const CompletionStructure& cs, int arc, int f, const Emit& emit) {
  auto make = [arc, f](const CompletionStructure& s) {
    std::vector<Obligation> out;
    const auto& a = s.ef.arc(arc);
    for (const auto& rule : s.ctx->binary_rules(f)) {
      if (!node_matches(s, rule.root, a.from) || !node_matches(s, rule.leaf, a.to)) continue;
      Obligation ob;
      ob.signature = "b" + std::to_string(rule.rule_index) + ":" + s.name(a.from) + ":" + s.name(a.to);
      ob.flips = flips_of(rule.beta, Target::at_node(a.from));
      for (const auto& fl : flips_of(rule.gamma, Target::at_arc(arc))) ob.flips.push_back(fl);
      for (const auto& fl : flips_of(rule.delta, Target::at_node(a.to))) ob.flips.push_back(fl);
      out.push_back(std::move(ob));
    }
    return out;
  };
  return refute(cs, make, Target::at_arc(arc), f, emit);
}

}  // namespace folp
