#include "support/random_program.hpp"

#include <vector>

namespace folp::testing {

namespace {

class Gen {
 public:
  Gen(std::mt19937_64& rng, const RandomShape& shape) : rng_(rng), shape_(shape) {}

  Program program() {
    std::vector<Rule> rules;
    const int n = pick(2, shape_.max_rules);
    for (int f = 0; f < shape_.binary && static_cast<int>(rules.size()) + 1 < n; ++f) {
      if (!coin(0.4)) continue;
      const Atom a{{std::string(1, static_cast<char>('f' + f)), 2}, {Term::variable("X"), Term::variable("Y")}};
      rules.push_back(FreeRule{a.pred, a.args});
    }
    for (int u = 0; u < shape_.unary && static_cast<int>(rules.size()) + 1 < n; ++u) {
      if (coin(0.25)) rules.push_back(FreeRule{{std::string(1, static_cast<char>('a' + u)), 1}, {Term::variable("X")}});
    }
    while (static_cast<int>(rules.size()) < n) rules.push_back(shape_rule(rule()));
    return Program(std::move(rules));
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Predicate upred() { return {std::string(1, static_cast<char>('a' + pick(0, shape_.unary - 1))), 1}; }
  Predicate bpred() { return {std::string(1, static_cast<char>('f' + pick(0, shape_.binary - 1))), 2}; }

  Term root_term() {
    if (shape_.constants > 0 && coin(0.2)) return Term::constant("k");
    return Term::variable("X");
  }

  Literal ulit(const Term& t, bool positive) { return {{upred(), {t}}, positive}; }
  Literal blit(const Term& a, const Term& b, bool positive) { return {{bpred(), {a, b}}, positive}; }

  void local(std::vector<Literal>& body, const Term& t, int max) {
    const int k = pick(0, max);
    for (int i = 0; i < k; ++i) body.push_back(ulit(t, coin(0.6)));
  }

  FlatRule rule() {
    const int kind = pick(0, 9);
    FlatRule r;
    const Term x = Term::variable("X");
    const Term y = Term::variable("Y");
    if (kind <= 1) {
      r.free = true;
      if (kind == 0 || shape_.binary == 0) r.head = Atom{upred(), {root_term()}};
      else r.head = Atom{bpred(), {x, y}};
      return r;
    }
    if (kind == 8 && shape_.binary > 0) {
      r.head = Atom{bpred(), {x, y}};
      local(r.body, x, 1);
      const int g = pick(0, 2);
      for (int i = 0; i < g; ++i) r.body.push_back(blit(x, y, coin(0.6)));
      local(r.body, y, 1);
      return r;
    }
    const Term root = root_term();
    if (kind != 9) r.head = Atom{upred(), {root}};
    local(r.body, root, 2);
    const int succ = shape_.binary > 0 ? pick(0, 2) : 0;
    for (int s = 1; s <= succ; ++s) {
      const Term ys = Term::variable("Y" + std::to_string(s));
      r.body.push_back(blit(root, ys, true));
      if (coin(0.3)) r.body.push_back(blit(root, ys, false));
      local(r.body, ys, 1);
    }
    if (succ == 2 && coin(0.4)) r.neq.push_back({Term::variable("Y1"), Term::variable("Y2")});
    if (!r.head && r.body.empty()) r.body.push_back(ulit(root, true));
    return r;
  }

  std::mt19937_64& rng_;
  RandomShape shape_;
};

}  // namespace

Program random_folp(std::mt19937_64& rng, const RandomShape& shape) {
  Gen gen(rng, shape);
  while (true) {
    Program p = gen.program();
    if (validate_folp(p).empty()) return p;
  }
}

Predicate random_target(std::mt19937_64& rng, const Program& program) {
  std::vector<Predicate> ps;
  for (const auto& p : program.unary_predicates()) {
    if (program.is_free(p) || !program.rules_for(p).empty()) ps.push_back(p);
  }
  if (ps.empty() || std::bernoulli_distribution(0.2)(rng)) ps = program.unary_predicates();
  if (ps.empty()) return {"a", 1};
  return ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
}

}  // namespace folp::testing
