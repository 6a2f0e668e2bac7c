#pragma once

#include <cstdint>
#include <optional>

#include "nwfs/ranges.hpp"
#include "nwfs/schedule.hpp"

namespace nwfs {

enum class SolveMode { BranchAndBound, GenerateAndTest };

enum class SolveStatus {
  Optimal,
  FeasibleTimeout,
  Infeasible,
  ExhaustedNoSolution,
};

const char* status_name(SolveStatus status);

struct SolveOptions {
  bool use_ranges = true;
  SolveMode mode = SolveMode::BranchAndBound;
  std::optional<double> time_limit_s;
  int worker_count = 1;
  std::optional<Time> delay_cap;             // instance override
  std::optional<bool> strict_local_storage;  // instance override
  bool force_enumeration = false;            // bypass the candidate guard
};

struct SolveReport {
  SolveStatus status = SolveStatus::ExhaustedNoSolution;
  std::optional<Schedule> best;
  std::optional<Time> makespan_tenths;
  Time max_finish_tenths = 0;
  std::int64_t nodes_explored = 0;
  std::int64_t candidates_tested = 0;
  DomainCount domain;
  double wall_time_s = 0.0;
};

// Generate-and-test refuses Cartesian products above this many candidates
// unless SolveOptions::force_enumeration is set.
inline constexpr std::int64_t kEnumerationGuard = 1'000'000'000;

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Depth-first search over per-(job, bath) start domains in bath-major slot
// order (all bath-1 starts, then bath-2, ...), pruned by the constraint
// rules, a completion deadline bound, and the incumbent makespan. Domains
// are the reduced start ranges, or the full grid [1, deadline] when
// use_ranges is off. Even baths always follow a chemical bath, so their
// starts are propagated rather than searched. Among equal-makespan optima
// the lexicographically smallest start vector (in slot order) wins.
SolveReport solve_branch_and_bound(const Instance& inst,
                                   const SolveOptions& opts = {});

// Enumerates the full Cartesian product of the slot domains in lexicographic
// order, testing each candidate; candidates_tested equals the domain product
// exactly when the run completes. Same tie-break as branch and bound.
SolveReport solve_generate_and_test(const Instance& inst,
                                    const SolveOptions& opts = {});

// Dispatch on opts.mode.
SolveReport solve(const Instance& inst, const SolveOptions& opts = {});

}  // namespace nwfs
