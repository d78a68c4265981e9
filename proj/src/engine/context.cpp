#include <algorithm>
#include <stdexcept>

#include "folp/core/analysis.hpp"
#include "folp/engine/completion.hpp"

namespace folp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

EngineContext::EngineContext(const Program& program, const Predicate& target) : program_(program) {
  if (!target.is_unary()) throw std::invalid_argument("satisfiability target " + target.name + " must be unary");
  upreds_ = program_.unary_predicates();
  bpreds_ = program_.binary_predicates();
  if (std::find(upreds_.begin(), upreds_.end(), target) == upreds_.end()) upreds_.push_back(target);
  for (std::size_t i = 0; i < upreds_.size(); ++i) uindex_[upreds_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < bpreds_.size(); ++i) bindex_[bpreds_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < program_.constants().size(); ++i) cindex_[program_.constants()[i]] = static_cast<int>(i);

  ufree_.assign(upreds_.size(), false);
  bfree_.assign(bpreds_.size(), false);
  upatterns_.resize(upreds_.size());
  bpatterns_.resize(bpreds_.size());
  urules_.resize(upreds_.size());
  brules_.resize(bpreds_.size());
  for (std::size_t i = 0; i < upreds_.size(); ++i) ufree_[i] = program_.is_free(upreds_[i]);
  for (std::size_t i = 0; i < bpreds_.size(); ++i) bfree_[i] = program_.is_free(bpreds_[i]);

  const auto& rules = program_.rules();
  for (std::size_t ri = 0; ri < rules.size(); ++ri) {
    std::visit(overloaded{
                   [&](const FreeRule& r) {
                     if (r.pred.is_unary()) {
                       upatterns_[static_cast<std::size_t>(upred(r.pred))].push_back(r.args);
                     } else {
                       bpatterns_[static_cast<std::size_t>(bpred(r.pred))].push_back(r.args);
                     }
                   },
                   [&](const UnaryRule& r) {
                     CompiledUnaryRule c;
                     c.rule_index = ri;
                     c.head = r.body.root;
                     c.beta = compile(r.body.beta, false);
                     for (const auto& s : r.body.successors) {
                       CompiledSuccessor cs;
                       cs.term = s.term;
                       if (s.term.is_constant()) cs.constant = constant(s.term.name);
                       cs.gamma = compile(s.gamma, true);
                       cs.delta = compile(s.delta, false);
                       c.successors.push_back(std::move(cs));
                     }
                     c.psi = r.body.psi;
                     urules_[static_cast<std::size_t>(upred(r.head))].push_back(std::move(c));
                   },
                   [&](const BinaryRule& r) {
                     CompiledBinaryRule c;
                     c.rule_index = ri;
                     c.root = r.body.root;
                     c.leaf = r.body.leaf;
                     c.beta = compile(r.body.beta, false);
                     c.gamma = compile(r.body.gamma, true);
                     c.delta = compile(r.body.delta, false);
                     brules_[static_cast<std::size_t>(bpred(r.head))].push_back(std::move(c));
                   },
                   [&](const UnaryConstraint&) { throw std::invalid_argument("constraints must be eliminated first"); },
                   [&](const BinaryConstraint&) { throw std::invalid_argument("constraints must be eliminated first"); },
                   [&](const GeneralRule& r) { throw std::invalid_argument("rule is not a forest rule: " + r.reason); },
               },
               rules[ri]);
  }
  rank_ = folp::rank(program_);
}

std::vector<SLit> EngineContext::compile(const SignedSet& set, bool binary) const {
  std::vector<SLit> out;
  for (const auto& sp : set) out.push_back({binary ? bpred(sp.pred) : upred(sp.pred), sp.positive});
  return out;
}

int EngineContext::upred(const Predicate& p) const {
  auto it = uindex_.find(p);
  if (it == uindex_.end()) throw std::out_of_range("unknown unary predicate " + p.name);
  return it->second;
}

int EngineContext::bpred(const Predicate& p) const {
  auto it = bindex_.find(p);
  if (it == bindex_.end()) throw std::out_of_range("unknown binary predicate " + p.name);
  return it->second;
}

int EngineContext::constant(const std::string& name) const {
  auto it = cindex_.find(name);
  return it == cindex_.end() ? -1 : it->second;
}

}  // namespace folp
