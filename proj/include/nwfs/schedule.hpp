#pragma once

#include <string>
#include <vector>

#include "nwfs/instance.hpp"

namespace nwfs {

// A fully populated assignment of start times: every job visits every bath.
struct Schedule {
  std::vector<std::vector<Time>> start;  // start[job-1][bath-1], >= 1

  Time start_of(int job, int bath) const {
    return start[static_cast<std::size_t>(job - 1)]
                [static_cast<std::size_t>(bath - 1)];
  }
  Time& start_of(int job, int bath) {
    return start[static_cast<std::size_t>(job - 1)]
                [static_cast<std::size_t>(bath - 1)];
  }

  bool operator==(const Schedule&) const = default;
};

// All-ones schedule shaped for `inst`, ready to be filled in.
Schedule make_schedule(const Instance& inst);

// Schedule with the given start matrix; throws ValidationError when the
// matrix does not match the instance's jobs x baths shape.
Schedule make_schedule(const Instance& inst,
                       std::vector<std::vector<Time>> start);

enum class Rule {
  OverlapBath,     // two jobs' processing windows intersect in one bath
  OverlapJob,      // a job starts bath b+1 before finishing bath b
  BadStarting,     // a job starts a later bath before an earlier one finishes
  ZeroWait,        // waiting after a chemical bath
  DelayCap,        // water -> chemical delay above the cap
  FirstStart,      // no job starts bath 1 at time 1
  DuplicateStart,  // two jobs start the same bath at the same instant
  LocalStorage,    // a water-bath wait without a busy successor covering it
  Deadline,        // an operation finishes past the deadline
};

const char* rule_name(Rule rule);

struct Violation {
  Rule rule{};
  std::vector<int> jobs;
  std::vector<int> baths;
  std::vector<Time> times;

  bool operator==(const Violation&) const = default;
};

struct ViolationReport {
  std::vector<Violation> violations;
  bool feasible = false;
};

// finish = start + duration; occupation is half-open [start, finish), so a
// bath may admit a new job at the exact instant the previous one finishes.
Time finish_time(const Instance& inst, const Schedule& s, int job, int bath);

// overlap_bath / duplicate_start across job pairs within each bath.
std::vector<Violation> check_resource_exclusivity(const Instance& inst,
                                                  const Schedule& s);

// overlap_job for consecutive baths, bad_starting for any later bath
// started before an earlier one finishes.
std::vector<Violation> check_job_flow(const Instance& inst, const Schedule& s);

// zero_wait after chemical baths, delay_cap and local_storage after water
// baths. The local-storage policy accepts a wait in a water bath only while
// another job occupies the successor bath for the whole wait and frees it at
// the exact instant the waiting job moves in.
std::vector<Violation> check_timing_policies(const Instance& inst,
                                             const Schedule& s);

// first_start (some job must start bath 1 at time 1) and deadline.
std::vector<Violation> check_global(const Instance& inst, const Schedule& s);

// Union of the four checkers, deterministically ordered by
// (rule name, jobs, baths, times).
ViolationReport check_all(const Instance& inst, const Schedule& s);

// Allocation-free equivalent of check_all(...).feasible with early exit;
// this is the hot path for candidate enumeration.
bool is_feasible(const Instance& inst, const Schedule& s);

// Elapsed time units: max finish in the last bath minus 1 (the first start
// is pinned to time 1).
Time makespan(const Instance& inst, const Schedule& s);

// Raw latest finish over all operations, for comparing against data that
// uses the other makespan convention.
Time max_finish(const Instance& inst, const Schedule& s);

// Schedule file format: one "s <job> <bath> <start>" line per operation.
Schedule parse_schedule(const Instance& inst, const std::string& text);
std::string render_schedule(const Schedule& s);

}  // namespace nwfs
