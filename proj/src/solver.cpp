#include "nwfs/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>
#include <vector>

namespace nwfs {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Time kNoIncumbent = std::numeric_limits<Time>::max();

Instance effective_instance(const Instance& inst, const SolveOptions& opts) {
  Instance eff = inst;
  if (opts.delay_cap) eff.delay_cap = *opts.delay_cap;
  if (opts.strict_local_storage)
    eff.strict_local_storage = *opts.strict_local_storage;
  validate(eff);
  if (opts.worker_count < 1)
    throw ValidationError("worker_count must be >= 1");
  if (opts.time_limit_s && *opts.time_limit_s <= 0.0)
    throw ValidationError("time_limit must be > 0");
  return eff;
}

// Slot order is bath-major: slot s covers bath s/n + 1, job s%n + 1. All of
// bath b is assigned before bath b+1, so every same-bath and previous-bath
// value is known when a slot is placed.
struct SearchContext {
  const Instance* inst = nullptr;
  int n = 0, m = 0, slots = 0;
  bool use_ranges = true;
  std::vector<Time> dur;        // per slot
  std::vector<Time> remaining;  // per slot: job's processing from this bath on
  std::vector<Time> dom_lo, dom_hi;

  int job_of(int s) const { return s % n + 1; }
  int bath_of(int s) const { return s / n + 1; }
};

SearchContext make_context(const Instance& inst, bool use_ranges) {
  SearchContext ctx;
  ctx.inst = &inst;
  ctx.n = inst.num_jobs;
  ctx.m = inst.num_baths;
  ctx.slots = ctx.n * ctx.m;
  ctx.use_ranges = use_ranges;
  ctx.dur.resize(static_cast<std::size_t>(ctx.slots));
  ctx.remaining.resize(static_cast<std::size_t>(ctx.slots));
  ctx.dom_lo.resize(static_cast<std::size_t>(ctx.slots));
  ctx.dom_hi.resize(static_cast<std::size_t>(ctx.slots));
  for (int j = 1; j <= ctx.n; ++j) {
    Time rest = 0;
    for (int b = ctx.m; b >= 1; --b) {
      int s = (b - 1) * ctx.n + (j - 1);
      ctx.dur[static_cast<std::size_t>(s)] = inst.duration_of(j, b);
      rest += inst.duration_of(j, b);
      ctx.remaining[static_cast<std::size_t>(s)] = rest;
      if (use_ranges) {
        StartRange r = start_range(inst, j, b);
        ctx.dom_lo[static_cast<std::size_t>(s)] = r.lower;
        ctx.dom_hi[static_cast<std::size_t>(s)] = r.upper;
      } else {
        ctx.dom_lo[static_cast<std::size_t>(s)] = 1;
        ctx.dom_hi[static_cast<std::size_t>(s)] = inst.deadline;
      }
    }
  }
  return ctx;
}

struct SharedState {
  std::atomic<Time> best_makespan{kNoIncumbent};
  std::atomic<bool> abort{false};
  Clock::time_point t0;
  double limit_s = 0.0;
  bool has_limit = false;
};

struct BranchResult {
  bool found = false;
  Time makespan = 0;
  std::vector<Time> flat;  // bath-major start vector
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
};

// (makespan, start vector) lexicographic order; the deterministic tie-break.
bool better_than(Time mk_a, const std::vector<Time>& a, Time mk_b,
                 const std::vector<Time>& b) {
  if (mk_a != mk_b) return mk_a < mk_b;
  return a < b;
}

class DepthFirstSearch {
 public:
  DepthFirstSearch(const SearchContext& ctx, SharedState& shared)
      : ctx_(ctx),
        shared_(shared),
        sched_(make_schedule(*ctx.inst)),
        flat_(static_cast<std::size_t>(ctx.slots), 0) {}

  void run_from(int slot) { descend(slot); }

  // Places one explicit value at `slot` and explores below it; used to fan
  // the root slot out across workers.
  void run_branch(int slot, Time value) { try_value(slot, value); }

  BranchResult take_result() { return std::move(result_); }

 private:
  void descend(int s) {
    if (shared_.abort.load(std::memory_order_relaxed)) return;
    if (s == ctx_.slots) {
      at_leaf();
      return;
    }
    int b = ctx_.bath_of(s);
    if (b % 2 == 0) {
      // Even baths follow a chemical bath: zero wait fixes the start.
      int prev = s - ctx_.n;
      Time forced = flat_[static_cast<std::size_t>(prev)] +
                    ctx_.dur[static_cast<std::size_t>(prev)];
      try_value(s, forced);
    } else {
      Time lo = ctx_.dom_lo[static_cast<std::size_t>(s)];
      Time hi = ctx_.dom_hi[static_cast<std::size_t>(s)];
      for (Time t = lo; t <= hi; ++t) {
        try_value(s, t);
        if (shared_.abort.load(std::memory_order_relaxed)) return;
      }
    }
  }

  void try_value(int s, Time t) {
    ++result_.nodes;
    if (++since_time_check_ >= 4096) {
      since_time_check_ = 0;
      check_time();
    }
    if (shared_.abort.load(std::memory_order_relaxed)) return;
    flat_[static_cast<std::size_t>(s)] = t;
    sched_.start_of(ctx_.job_of(s), ctx_.bath_of(s)) = t;
    if (placement_ok(s, t)) descend(s + 1);
  }

  bool placement_ok(int s, Time t) const {
    const Instance& inst = *ctx_.inst;
    const int j = ctx_.job_of(s), b = ctx_.bath_of(s);
    const Time dur = ctx_.dur[static_cast<std::size_t>(s)];
    if (t < 1) return false;
    if (t + dur > inst.deadline) return false;
    // No completion of this job can meet the deadline from here.
    if (t + ctx_.remaining[static_cast<std::size_t>(s)] > inst.deadline)
      return false;
    if (b > 1) {
      int prev = s - ctx_.n;
      Time f1 = flat_[static_cast<std::size_t>(prev)] +
                ctx_.dur[static_cast<std::size_t>(prev)];
      if (t < f1) return false;
      if ((b - 1) % 2 != 0) {
        if (t > f1) return false;  // zero wait after chemical
      } else {
        if (t - f1 > inst.delay_cap) return false;
      }
    }
    // Same bath, already-assigned jobs.
    int base = (b - 1) * ctx_.n;
    for (int s2 = base; s2 < s; ++s2) {
      Time t2 = flat_[static_cast<std::size_t>(s2)];
      Time d2 = ctx_.dur[static_cast<std::size_t>(s2)];
      if (t < t2 + d2 && t2 < t + dur) return false;
    }
    if (j == ctx_.n) {
      // Bath b is now fully assigned.
      if (b == 1) {
        Time min_start = flat_[0];
        for (int s2 = 1; s2 < ctx_.n; ++s2)
          min_start = std::min(min_start, flat_[static_cast<std::size_t>(s2)]);
        if (min_start != 1) return false;
      }
      if (inst.strict_local_storage && b > 1 && (b - 1) % 2 == 0) {
        // Local-storage waits into bath b depend on every bath-b start, so
        // they are only decidable once the bath is complete.
        for (int j2 = 1; j2 <= ctx_.n; ++j2) {
          Time f1 = sched_.start_of(j2, b - 1) + inst.duration_of(j2, b - 1);
          Time t2 = sched_.start_of(j2, b);
          if (t2 <= f1) continue;
          bool covered = false;
          for (int j3 = 1; j3 <= ctx_.n && !covered; ++j3) {
            if (j3 == j2) continue;
            Time t3 = sched_.start_of(j3, b);
            covered = t3 <= f1 && t3 + inst.duration_of(j3, b) == t2;
          }
          if (!covered) return false;
        }
      }
    }
    Time lower_bound = t + ctx_.remaining[static_cast<std::size_t>(s)] - 1;
    if (result_.found && lower_bound >= result_.makespan) return false;
    if (lower_bound > shared_.best_makespan.load(std::memory_order_relaxed))
      return false;
    return true;
  }

  void at_leaf() {
    ++result_.leaves;
    if (!is_feasible(*ctx_.inst, sched_)) return;
    Time mk = makespan(*ctx_.inst, sched_);
    if (!result_.found ||
        better_than(mk, flat_, result_.makespan, result_.flat)) {
      result_.found = true;
      result_.makespan = mk;
      result_.flat = flat_;
    }
    Time seen = shared_.best_makespan.load(std::memory_order_relaxed);
    while (mk < seen &&
           !shared_.best_makespan.compare_exchange_weak(
               seen, mk, std::memory_order_relaxed)) {
    }
  }

  void check_time() {
    if (!shared_.has_limit) return;
    double elapsed =
        std::chrono::duration<double>(Clock::now() - shared_.t0).count();
    if (elapsed > shared_.limit_s)
      shared_.abort.store(true, std::memory_order_relaxed);
  }

  const SearchContext& ctx_;
  SharedState& shared_;
  Schedule sched_;
  std::vector<Time> flat_;
  BranchResult result_;
  int since_time_check_ = 0;
};

Schedule schedule_from_flat(const SearchContext& ctx,
                            const std::vector<Time>& flat) {
  Schedule s = make_schedule(*ctx.inst);
  for (int i = 0; i < ctx.slots; ++i)
    s.start_of(ctx.job_of(i), ctx.bath_of(i)) =
        flat[static_cast<std::size_t>(i)];
  return s;
}

SolveReport finish_report(const Instance& inst, const SearchContext& ctx,
                          const SharedState& shared, const BranchResult& best,
                          Clock::time_point t0) {
  SolveReport report;
  report.nodes_explored = best.nodes;
  report.candidates_tested = best.leaves;
  report.domain = domain_count(inst);
  if (best.found) {
    report.best = schedule_from_flat(ctx, best.flat);
    report.makespan_tenths = best.makespan;
    report.max_finish_tenths = max_finish(inst, *report.best);
  }
  if (shared.abort.load())
    report.status = SolveStatus::FeasibleTimeout;
  else
    report.status = best.found ? SolveStatus::Optimal
                               : SolveStatus::ExhaustedNoSolution;
  report.wall_time_s =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

}  // namespace

const char* status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::FeasibleTimeout: return "feasible_timeout";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::ExhaustedNoSolution: return "exhausted_no_solution";
  }
  return "unknown";
}

SolveReport solve_branch_and_bound(const Instance& raw_inst,
                                   const SolveOptions& opts) {
  Instance inst = effective_instance(raw_inst, opts);
  SearchContext ctx = make_context(inst, opts.use_ranges);
  SharedState shared;
  shared.t0 = Clock::now();
  if (opts.time_limit_s) {
    shared.has_limit = true;
    shared.limit_s = *opts.time_limit_s;
  }

  if (opts.worker_count == 1 || ctx.slots == 1) {
    // Reference mode: one depth-first pass, incumbent carried across the
    // whole tree, bit-identical reports for identical inputs.
    DepthFirstSearch dfs(ctx, shared);
    dfs.run_from(0);
    return finish_report(inst, ctx, shared, dfs.take_result(), shared.t0);
  }

  // Fan the root slot out across workers. Every branch keeps its own
  // incumbent (pruned with >=) and only prunes strictly above the shared
  // bound, so each branch's best is timing-independent whenever it matters;
  // the reduction below is in fixed branch order.
  std::vector<Time> roots;
  for (Time t = ctx.dom_lo[0]; t <= ctx.dom_hi[0]; ++t) roots.push_back(t);
  std::vector<BranchResult> results(roots.size());
  int workers = std::min<int>(opts.worker_count,
                              static_cast<int>(roots.size()));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = static_cast<std::size_t>(w); i < roots.size();
           i += static_cast<std::size_t>(workers)) {
        DepthFirstSearch dfs(ctx, shared);
        dfs.run_branch(0, roots[i]);
        results[i] = dfs.take_result();
      }
    });
  }
  for (auto& th : pool) th.join();

  BranchResult merged;
  for (const auto& r : results) {
    merged.nodes += r.nodes;
    merged.leaves += r.leaves;
    if (r.found && (!merged.found || better_than(r.makespan, r.flat,
                                                 merged.makespan,
                                                 merged.flat))) {
      merged.found = true;
      merged.makespan = r.makespan;
      merged.flat = r.flat;
    }
  }
  return finish_report(inst, ctx, shared, merged, shared.t0);
}

SolveReport solve_generate_and_test(const Instance& raw_inst,
                                    const SolveOptions& opts) {
  Instance inst = effective_instance(raw_inst, opts);
  SearchContext ctx = make_context(inst, opts.use_ranges);
  auto t0 = Clock::now();

  BigInt product = 1;
  for (int s = 0; s < ctx.slots; ++s)
    product *= BigInt(ctx.dom_hi[static_cast<std::size_t>(s)] -
                      ctx.dom_lo[static_cast<std::size_t>(s)] + 1);
  if (!opts.force_enumeration && product > kEnumerationGuard)
    throw GuardError("generate-and-test would enumerate " +
                     to_scientific(product) + " candidates (guard " +
                     std::to_string(kEnumerationGuard) +
                     "); use force_enumeration to override");

  Schedule sched = make_schedule(inst);
  std::vector<Time> flat(static_cast<std::size_t>(ctx.slots));
  for (int s = 0; s < ctx.slots; ++s) {
    flat[static_cast<std::size_t>(s)] = ctx.dom_lo[static_cast<std::size_t>(s)];
    sched.start_of(ctx.job_of(s), ctx.bath_of(s)) =
        ctx.dom_lo[static_cast<std::size_t>(s)];
  }

  SolveReport report;
  report.domain = domain_count(inst);
  bool timed_out = false;
  bool found = false;
  Time best_mk = 0;
  std::vector<Time> best_flat;
  std::int64_t tested = 0;
  int since_check = 0;

  // Odometer over the slot array, last slot fastest: lexicographic order on
  // the bath-major start vector.
  bool done = false;
  while (!done) {
    ++tested;
    if (++since_check >= 8192) {
      since_check = 0;
      if (opts.time_limit_s &&
          std::chrono::duration<double>(Clock::now() - t0).count() >
              *opts.time_limit_s) {
        timed_out = true;
        break;
      }
    }
    if (is_feasible(inst, sched)) {
      Time mk = makespan(inst, sched);
      if (!found || better_than(mk, flat, best_mk, best_flat)) {
        found = true;
        best_mk = mk;
        best_flat = flat;
      }
    }
    int s = ctx.slots - 1;
    for (; s >= 0; --s) {
      Time& v = flat[static_cast<std::size_t>(s)];
      if (v < ctx.dom_hi[static_cast<std::size_t>(s)]) {
        ++v;
        sched.start_of(ctx.job_of(s), ctx.bath_of(s)) = v;
        break;
      }
      v = ctx.dom_lo[static_cast<std::size_t>(s)];
      sched.start_of(ctx.job_of(s), ctx.bath_of(s)) = v;
    }
    if (s < 0) done = true;
  }

  report.nodes_explored = tested;
  report.candidates_tested = tested;
  if (found) {
    report.best = schedule_from_flat(ctx, best_flat);
    report.makespan_tenths = best_mk;
    report.max_finish_tenths = max_finish(inst, *report.best);
  }
  if (timed_out)
    report.status = SolveStatus::FeasibleTimeout;
  else
    report.status =
        found ? SolveStatus::Optimal : SolveStatus::ExhaustedNoSolution;
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

SolveReport solve(const Instance& inst, const SolveOptions& opts) {
  if (opts.mode == SolveMode::GenerateAndTest)
    return solve_generate_and_test(inst, opts);
  return solve_branch_and_bound(inst, opts);
}

}  // namespace nwfs
