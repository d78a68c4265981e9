#include "folp/shoq/fhybrid.hpp"

#include <algorithm>

#include "folp/shoq/translate.hpp"

namespace folp {

namespace {

bool holds(const GroundAtom& a, const DlInterpretation& in) {
  if (a.args.size() == 1) return in.extension(a.pred).count(a.args[0]) > 0;
  if (a.args.size() == 2) return in.role(a.pred).count({a.args[0], a.args[1]}) > 0;
  return false;
}

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; out.size() < count; ++i) {
    std::string name = "x" + std::to_string(i);
    if (std::find(taken.begin(), taken.end(), name) == taken.end()) out.push_back(std::move(name));
  }
  return out;
}

std::string fresh_predicate(const Program& program, std::string base) {
  while (program.find_predicate(base)) base += "_";
  return base;
}

}  // namespace

DlSignature DlSignature::of(const DlKnowledgeBase& sigma) {
  DlSignature s;
  for (auto& c : sigma.concept_names()) s.concepts.insert(std::move(c));
  for (auto& r : sigma.role_names()) s.roles.insert(std::move(r));
  return s;
}

bool DlSignature::contains(const GroundAtom& atom) const {
  if (atom.args.size() == 1) return concepts.count(atom.pred) > 0;
  if (atom.args.size() == 2) return roles.count(atom.pred) > 0;
  return false;
}

GroundProgram project(const GroundProgram& gp, const DlInterpretation& in, const DlSignature& sig) {
  GroundProgram out;
  out.atoms = gp.atoms;
  out.index = gp.index;
  auto is_dl = [&](int a) { return sig.contains(gp.atoms[static_cast<std::size_t>(a)]); };
  auto truth = [&](int a) { return holds(gp.atoms[static_cast<std::size_t>(a)], in); };
  for (const auto& r : gp.rules) {
    GroundRule nr = r;
    if (r.kind != GroundRule::Kind::constraint && is_dl(r.head)) {
      // A free head a v not a always has one disjunct agreeing with I.
      if (r.kind == GroundRule::Kind::free || truth(r.head)) continue;
      nr.kind = GroundRule::Kind::constraint;
      nr.head = -1;
    }
    bool drop = false;
    nr.pos.clear();
    nr.neg.clear();
    for (int a : r.pos) {
      if (!is_dl(a)) nr.pos.push_back(a);
      else if (!truth(a)) drop = true;
    }
    for (int a : r.neg) {
      if (!is_dl(a)) nr.neg.push_back(a);
      else if (truth(a)) drop = true;
    }
    if (!drop) out.rules.push_back(std::move(nr));
  }
  return out;
}

Program combined_program(const FHybridKB& kb) {
  std::vector<Rule> rules = translate(kb.sigma).rules();
  for (const auto& r : kb.program.rules()) rules.push_back(r);
  return Program(std::move(rules));
}

Verdict fhybrid_sat(const FHybridKB& kb, const std::string& p, const SearchConfig& config) {
  return solve(combined_program(kb), Predicate{p, 1}, config);
}

Verdict concept_sat(const FHybridKB& kb, const ConceptPtr& c, const SearchConfig& config) {
  std::vector<Rule> rules = translate(kb.sigma, {c}).rules();
  for (const auto& r : kb.program.rules()) rules.push_back(r);
  const Program base(rules);
  const Predicate target{fresh_predicate(base, "p_C"), 1};
  rules.push_back(shape_rule({Atom{target, {Term::variable("X")}},
                              false,
                              {{Atom{concept_predicate(c), {Term::variable("X")}}, true}},
                              {}}));
  return solve(Program(std::move(rules)), target, config);
}

std::vector<std::string> fhybrid_constants(const FHybridKB& kb) {
  std::vector<std::string> out = kb.program.constants();
  for (const auto& o : kb.sigma.individuals()) {
    if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
  }
  return out;
}

bool is_fhybrid_model(const FHybridKB& kb, const FHybridModel& model) {
  if (!satisfies(model.interpretation, kb.sigma)) return false;
  const GroundProgram gp = project(ground(kb.program, model.universe), model.interpretation, DlSignature::of(kb.sigma));
  std::set<int> m;
  for (const auto& a : model.answer_set) {
    auto idx = gp.find(a);
    if (!idx) return false;
    m.insert(*idx);
  }
  return is_answer_set(gp, m);
}

std::optional<FHybridModel> fhybrid_bounded_check(const FHybridKB& kb, const std::string& p, std::size_t max_domain,
                                                  const FHybridLimits& limits) {
  const DlSignature sig = DlSignature::of(kb.sigma);
  const std::vector<std::string> concepts(sig.concepts.begin(), sig.concepts.end());
  const std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());
  const std::vector<std::string> cts = fhybrid_constants(kb);
  const bool dl_target = sig.concepts.count(p) > 0;

  for (std::size_t size = std::max<std::size_t>(cts.size(), 1); size <= max_domain; ++size) {
    std::vector<std::string> universe = cts;
    for (auto& x : fresh_names(cts, size - cts.size())) universe.push_back(std::move(x));
    const std::size_t bits = concepts.size() * size + roles.size() * size * size;
    if (bits > limits.interpretation_bits) throw OracleScaleError("interpretation space exceeds guard");

    GroundProgram gp = ground(kb.program, universe);
    std::vector<int> targets;
    if (!dl_target) {
      for (const auto& e : universe) targets.push_back(gp.intern({p, {e}}));
    }

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      DlInterpretation in;
      in.domain.insert(universe.begin(), universe.end());
      std::size_t bit = 0;
      for (const auto& c : concepts) {
        auto& ext = in.concepts[c];
        for (const auto& e : universe) {
          if (mask >> bit++ & 1U) ext.insert(e);
        }
      }
      for (const auto& r : roles) {
        auto& rel = in.roles[r];
        for (const auto& a : universe) {
          for (const auto& b : universe) {
            if (mask >> bit++ & 1U) rel.insert({a, b});
          }
        }
      }
      if (dl_target && in.extension(p).empty()) continue;
      if (!satisfies(in, kb.sigma)) continue;
      const GroundProgram projected = project(gp, in, sig);
      auto found = find_answer_set(projected, targets, limits.node_budget);
      if (!found) continue;
      FHybridModel model{universe, std::move(in), {}};
      for (int a : *found) model.answer_set.insert(projected.atoms[static_cast<std::size_t>(a)]);
      return model;
    }
  }
  return std::nullopt;
}

}  // namespace folp
