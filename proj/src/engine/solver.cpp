#include "folp/engine/solver.hpp"

#include <pthread.h>

#include <exception>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "folp/core/analysis.hpp"

namespace folp {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

struct BudgetExhausted {};

class Search {
 public:
  Search(const SearchConfig& config, SearchMode mode, std::uint64_t k, bool k_sound, int limit, std::size_t& steps)
      : config_(config), mode_(mode), k_(k), k_sound_(k_sound), limit_(limit), steps_(steps) {
    if (config.emit_trace) trace_ = config.trace ? config.trace : &std::cerr;
  }

  std::optional<CompletionStructure> run(CompletionStructure cs) {
    if (explore(std::move(cs))) return std::move(found_);
    return std::nullopt;
  }

  bool pruned() const { return pruned_; }

 private:
  void step(const CompletionStructure& cs, const char* rule, const std::string& target, const std::string& detail) {
    if (++steps_ > config_.max_steps) throw BudgetExhausted{};
    if (trace_) *trace_ << "STEP " << steps_ << ' ' << rule << ' ' << target << ' ' << detail << '\n';
    (void)cs;
  }

  std::string arc_name(const CompletionStructure& cs, int a) const {
    const auto& arc = cs.ef.arc(a);
    return "(" + cs.name(arc.from) + "," + cs.name(arc.to) + ")";
  }

  static std::string signed_name(const Predicate& p, bool positive) { return (positive ? "" : "not ") + p.name; }

  int select(const CompletionStructure& cs) const {
    for (int x = 0; x < static_cast<int>(cs.ef.size()); ++x) {
      if (cs.saturated[static_cast<std::size_t>(x)] || cs.is_blocked(x)) continue;
      if (!cs.ef.is_root(x) && !cs.saturated[static_cast<std::size_t>(cs.ef.parent(x))]) continue;
      return x;
    }
    return -1;
  }

  bool explore(CompletionStructure cs) {
    const Emit next = [this](CompletionStructure&& c) { return explore(std::move(c)); };
    const auto& ctx = *cs.ctx;
    const int np = static_cast<int>(ctx.upreds().size());
    const int nb = static_cast<int>(ctx.bpreds().size());
    while (true) {
      const int x = select(cs);
      if (x < 0) {
        bool changed = false;
        if (mode_ == SearchMode::full) {
          for (std::size_t i = 0; i < cs.bl.size();) {
            auto [y, b] = cs.bl[i];
            if (block_still_valid(cs, y, b)) {
              ++i;
              continue;
            }
            step(cs, "unblock", cs.name(b), cs.name(y));
            cs.bl.erase(cs.bl.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
          }
        }
        if (changed) continue;
        step(cs, "complete", "-", std::to_string(cs.ef.size()) + " nodes");
        found_ = std::move(cs);
        return true;
      }
      const std::string xn = cs.name(x);
      if (!cs.activated[static_cast<std::size_t>(x)]) {
        if (auto y = check_blocked(cs, x, mode_)) {
          step(cs, "viii", xn, "blocked by " + cs.name(*y));
          continue;
        }
        if (cs.node_depth(x) >= limit_) {
          step(cs, "prune", xn, "depth " + std::to_string(cs.node_depth(x)));
          pruned_ = true;
          return false;
        }
        activate(cs, x);
        step(cs, "activate", xn, std::to_string(cs.ef.out_arcs(x).size()) + " arcs");
        continue;
      }
      for (int p = 0; p < np; ++p) {
        const auto fl = cs.node_flags(x, p);
        if ((fl & flag::pos) && !(fl & flag::pos_done)) {
          step(cs, "i", xn, ctx.upred_at(p).name);
          return expand_unary_positive(cs, x, p, next);
        }
      }
      for (int a : cs.ef.out_arcs(x)) {
        for (int f = 0; f < nb; ++f) {
          const auto fl = cs.arc_flags(a, f);
          if ((fl & flag::pos) && !(fl & flag::pos_done)) {
            step(cs, "iv", arc_name(cs, a), ctx.bpred_at(f).name);
            return expand_binary_positive(cs, a, f, next);
          }
          if ((fl & flag::neg) && !(fl & flag::neg_done)) {
            step(cs, "v", arc_name(cs, a), "not " + ctx.bpred_at(f).name);
            return expand_binary_negative(cs, a, f, next);
          }
        }
      }
      for (int p = 0; p < np; ++p) {
        if (!(cs.node_flags(x, p) & (flag::pos | flag::neg))) {
          step(cs, "ii", xn, ctx.upred_at(p).name);
          return choose_unary(cs, x, p, next);
        }
      }
      for (int p = 0; p < np; ++p) {
        const auto fl = cs.node_flags(x, p);
        if ((fl & flag::neg) && !(fl & flag::neg_done)) {
          if (!unary_decided(cs, x)) throw std::logic_error("negative expansion before " + xn + " is decided");
          step(cs, "iii", xn, "not " + ctx.upred_at(p).name);
          return expand_unary_negative(cs, x, p, next);
        }
      }
      for (int a : cs.ef.out_arcs(x)) {
        for (int f = 0; f < nb; ++f) {
          if (!(cs.arc_flags(a, f) & (flag::pos | flag::neg))) {
            step(cs, "vi", arc_name(cs, a), ctx.bpred_at(f).name);
            return choose_binary(cs, a, f, next);
          }
        }
      }
      cs.saturated[static_cast<std::size_t>(x)] = 1;
      step(cs, "vii", xn, "saturated");
      if (mode_ == SearchMode::full && is_redundant(cs, x, k_)) {
        step(cs, "ix", xn, "redundant");
        if (!k_sound_) pruned_ = true;
        return false;
      }
    }
  }

  const SearchConfig& config_;
  SearchMode mode_;
  std::uint64_t k_;
  bool k_sound_;
  int limit_;
  std::size_t& steps_;
  std::ostream* trace_ = nullptr;
  bool pruned_ = false;
  std::optional<CompletionStructure> found_;
};

Verdict run_search(const Program& program, const Predicate& p, const SearchConfig& config) {
  if (!p.is_unary()) throw std::invalid_argument("satisfiability target " + p.name + " must be unary");
  const auto diagnostics = validate_folp(program);
  if (!diagnostics.empty()) {
    throw std::invalid_argument("rule " + std::to_string(diagnostics.front().rule_index + 1) + ": " +
                                diagnostics.front().message);
  }
  const Program rewritten = eliminate_constraints(program);
  const SearchMode mode = resolve_mode(rewritten, config.mode);
  auto ctx = std::make_shared<const EngineContext>(rewritten, p);
  const std::uint64_t paper_k = default_redundancy_k(ctx->upreds().size(), config.k_variant);
  const std::uint64_t k = config.redundancy_k.value_or(paper_k);
  const bool k_sound = k >= default_redundancy_k(ctx->upreds().size(), KVariant::rule9);

  std::vector<std::optional<std::string>> roots;
  for (const auto& c : ctx->constants()) roots.emplace_back(c);
  roots.emplace_back(std::nullopt);

  const int cap = config.depth_cap.value_or(std::numeric_limits<int>::max());
  const int first = config.depth_cap ? 1 : cap;
  std::size_t steps = 0;
  try {
    for (int d = first; d <= cap; ++d) {
      bool pruned = false;
      for (const auto& root : roots) {
        CompletionStructure cs = init_completion(ctx, p, !root.has_value(), root);
        cs.mode = mode;
        cs.seed = config.seed;
        Search search(config, mode, k, k_sound, d, steps);
        if (auto done = search.run(std::move(cs))) {
          OpenInterpretation model = extract_model(*done);
          return Sat{std::move(model), std::move(*done)};
        }
        pruned = pruned || search.pruned();
      }
      if (!pruned) return Unsat{};
      if (d == std::numeric_limits<int>::max()) break;
    }
  } catch (const BudgetExhausted&) {
    return Unknown{"step budget of " + std::to_string(config.max_steps) + " exhausted"};
  }
  return Unknown{"depth cap " + std::to_string(cap) + " reached"};
}

struct Job {
  const Program* program;
  const Predicate* p;
  const SearchConfig* config;
  std::optional<Verdict> result;
  std::exception_ptr error;
};

void* run_job(void* arg) {
  auto* job = static_cast<Job*>(arg);
  try {
    job->result = run_search(*job->program, *job->p, *job->config);
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

std::uint64_t default_redundancy_k(std::size_t p, KVariant variant) {
  const std::uint64_t extra = variant == KVariant::rule9 ? 2 : 3;
  if (p >= 64 || p * p >= 64) return kMax;
  const std::uint64_t a = std::uint64_t{1} << p;
  const std::uint64_t b = (std::uint64_t{1} << (p * p)) - 1;
  if (b != 0 && a > (kMax - extra) / b) return kMax;
  return a * b + extra;
}

const char* verdict_name(const Verdict& v) {
  if (std::holds_alternative<Sat>(v)) return "SAT";
  if (std::holds_alternative<Unsat>(v)) return "UNSAT";
  return "UNKNOWN";
}

SearchMode resolve_mode(const Program& program, SearchMode mode) {
  if (mode != SearchMode::automatic) return mode;
  return is_simple(program) ? SearchMode::simple : SearchMode::full;
}

Verdict solve(const Program& program, const Predicate& p, const SearchConfig& config) {
  // Deep searches recurse once per expansion step, so run on a large stack.
  Job job{&program, &p, &config, std::nullopt, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run_job, &job) != 0) {
    pthread_attr_destroy(&attr);
    run_job(&job);
  } else {
    pthread_attr_destroy(&attr);
    pthread_join(thread, nullptr);
  }
  if (job.error) std::rethrow_exception(job.error);
  return std::move(*job.result);
}

}  // namespace folp
