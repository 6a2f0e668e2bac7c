#include "nwfs/solver.hpp"

#include <vector>

#include "doctest.h"

using nwfs::Instance;
using nwfs::Schedule;
using nwfs::SolveOptions;
using nwfs::SolveReport;
using nwfs::SolveStatus;
using nwfs::Time;

namespace {

Instance make(int baths, std::vector<std::vector<Time>> duration,
              Time deadline) {
  Instance inst;
  inst.num_baths = baths;
  inst.num_jobs = static_cast<int>(duration.size());
  inst.duration = std::move(duration);
  inst.deadline = deadline;
  return inst;
}

SolveOptions oracle_opts(bool use_ranges = true) {
  SolveOptions opts;
  opts.mode = nwfs::SolveMode::GenerateAndTest;
  opts.use_ranges = use_ranges;
  return opts;
}

}  // namespace

TEST_CASE("a single job is scheduled as early as possible") {
  Instance inst = make(2, {{3, 2}}, 10);

  SolveReport bb = nwfs::solve_branch_and_bound(inst);
  REQUIRE(bb.status == SolveStatus::Optimal);
  REQUIRE(bb.best.has_value());
  CHECK(*bb.makespan_tenths == 5);
  CHECK(bb.best->start_of(1, 1) == 1);
  CHECK(bb.best->start_of(1, 2) == 4);
  CHECK(bb.max_finish_tenths == 6);
  CHECK(bb.candidates_tested == 1);  // one leaf survives the bounds

  SolveReport gt = nwfs::solve_generate_and_test(inst, oracle_opts());
  CHECK(gt.status == SolveStatus::Optimal);
  CHECK(*gt.makespan_tenths == 5);
  CHECK(gt.candidates_tested == 25);  // 5 x 5 range grid
  CHECK(*gt.best == *bb.best);

  SolveReport full = nwfs::solve_generate_and_test(inst, oracle_opts(false));
  CHECK(full.candidates_tested == 100);  // 10 x 10 raw grid
  CHECK(*full.makespan_tenths == 5);
  CHECK(*full.best == *bb.best);
}

TEST_CASE("two identical jobs interleave at makespan 6") {
  Instance inst = make(2, {{2, 2}, {2, 2}}, 10);

  SolveReport bb = nwfs::solve_branch_and_bound(inst);
  REQUIRE(bb.status == SolveStatus::Optimal);
  CHECK(*bb.makespan_tenths == 6);
  // Lexicographically smallest optimum: job 1 first.
  CHECK(bb.best->start_of(1, 1) == 1);
  CHECK(bb.best->start_of(2, 1) == 3);
  CHECK(bb.best->start_of(1, 2) == 3);
  CHECK(bb.best->start_of(2, 2) == 5);

  SolveReport gt = nwfs::solve_generate_and_test(inst, oracle_opts());
  CHECK(*gt.makespan_tenths == 6);
  CHECK(*gt.best == *bb.best);
  CHECK(gt.candidates_tested == 1296);  // (6*6)^2 range grid

  SolveReport full = nwfs::solve_generate_and_test(inst, oracle_opts(false));
  CHECK(full.candidates_tested == 10000);
  CHECK(*full.best == *bb.best);
}

TEST_CASE("the deadline floor comes from validation") {
  Instance inst = make(2, {{3, 2}}, 5);  // lambda == deadline
  CHECK_THROWS_AS(nwfs::solve_branch_and_bound(inst), nwfs::ValidationError);
  CHECK_THROWS_AS(nwfs::solve_generate_and_test(inst, oracle_opts()),
                  nwfs::ValidationError);
}

TEST_CASE("option validation rejects nonsense") {
  Instance inst = make(2, {{3, 2}}, 10);
  SolveOptions opts;
  opts.worker_count = 0;
  CHECK_THROWS_AS(nwfs::solve_branch_and_bound(inst, opts),
                  nwfs::ValidationError);
  opts = SolveOptions{};
  opts.time_limit_s = 0.0;
  CHECK_THROWS_AS(nwfs::solve_branch_and_bound(inst, opts),
                  nwfs::ValidationError);
  opts = SolveOptions{};
  opts.delay_cap = -1;
  CHECK_THROWS_AS(nwfs::solve_branch_and_bound(inst, opts),
                  nwfs::ValidationError);
}

TEST_CASE("slack-1 domains leave a single candidate") {
  // Both jobs need the whole horizon; the lone candidate double-books the
  // bath, so there is no schedule at all.
  Instance inst = make(1, {{2}, {2}}, 3);

  SolveReport gt = nwfs::solve_generate_and_test(inst, oracle_opts());
  CHECK(gt.status == SolveStatus::ExhaustedNoSolution);
  CHECK(gt.candidates_tested == 1);
  CHECK_FALSE(gt.best.has_value());
  CHECK_FALSE(gt.makespan_tenths.has_value());

  SolveReport bb = nwfs::solve_branch_and_bound(inst);
  CHECK(bb.status == SolveStatus::ExhaustedNoSolution);
  CHECK_FALSE(bb.best.has_value());
}

TEST_CASE("the enumeration guard refuses runaway products") {
  Instance inst =
      make(3, {{4, 4, 4}, {4, 4, 4}, {4, 4, 4}}, 18);  // 18^9 candidates raw
  CHECK_THROWS_WITH_AS(nwfs::solve_generate_and_test(inst, oracle_opts(false)),
                       doctest::Contains("force"), nwfs::GuardError);
  // The reduced grid (6^9) is under the guard, so the sweep runs to the end.
  // Three rigid 12-long chains cannot share the first bath inside slack 6,
  // so the verdict is a proven no-solution rather than a refusal.
  SolveReport gt = nwfs::solve_generate_and_test(inst, oracle_opts());
  CHECK(gt.status == SolveStatus::ExhaustedNoSolution);
  CHECK(gt.candidates_tested == 10077696);  // 6^9, the whole reduced grid
}

TEST_CASE("range pruning preserves the optimum and shrinks the tree") {
  std::vector<Instance> samples = {
      make(2, {{2, 2}, {2, 2}}, 10),
      make(3, {{1, 2, 1}, {2, 1, 2}}, 12),
      make(2, {{3, 2}, {1, 4}, {2, 2}}, 13),
  };
  for (const Instance& inst : samples) {
    SolveOptions with;
    SolveOptions without;
    without.use_ranges = false;
    SolveReport on = nwfs::solve_branch_and_bound(inst, with);
    SolveReport off = nwfs::solve_branch_and_bound(inst, without);
    CHECK(on.status == off.status);
    if (on.best) {
      CHECK(*on.makespan_tenths == *off.makespan_tenths);
      CHECK(*on.best == *off.best);
    }
    CHECK(on.nodes_explored < off.nodes_explored);
  }
}

TEST_CASE("a timeout surrenders with the incumbent in hand") {
  SUBCASE("during branch and bound") {
    // Three unit jobs, one bath, an enormous horizon: the optimum is found
    // within a handful of nodes but proving it needs thousands more.
    Instance inst = make(1, {{1}, {1}, {1}}, 2000);
    SolveOptions opts;
    opts.time_limit_s = 1e-6;
    SolveReport r = nwfs::solve_branch_and_bound(inst, opts);
    CHECK(r.status == SolveStatus::FeasibleTimeout);
    REQUIRE(r.best.has_value());
    CHECK(*r.makespan_tenths == 3);
    CHECK(r.best->start_of(1, 1) == 1);
    CHECK(r.best->start_of(2, 1) == 2);
    CHECK(r.best->start_of(3, 1) == 3);
  }
  SUBCASE("during generate and test") {
    // 170^4 candidates; the first feasible one appears after a few
    // thousand, far inside the limit, and the sweep cannot finish.
    Instance inst = make(2, {{1, 1}, {1, 1}}, 172);
    SolveOptions opts = oracle_opts();
    opts.time_limit_s = 0.05;
    SolveReport r = nwfs::solve_generate_and_test(inst, opts);
    CHECK(r.status == SolveStatus::FeasibleTimeout);
    REQUIRE(r.best.has_value());
    CHECK(*r.makespan_tenths == 3);
  }
}

TEST_CASE("identical inputs give identical reports") {
  Instance inst = make(3, {{2, 1, 2}, {1, 2, 1}, {2, 2, 1}}, 12);

  SolveReport a = nwfs::solve_branch_and_bound(inst);
  SolveReport b = nwfs::solve_branch_and_bound(inst);
  REQUIRE(a.best.has_value());
  CHECK(*a.best == *b.best);
  CHECK(*a.makespan_tenths == *b.makespan_tenths);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.candidates_tested == b.candidates_tested);
  CHECK(a.status == b.status);
}

TEST_CASE("worker fan-out returns the single-threaded answer") {
  Instance inst = make(3, {{2, 1, 2}, {1, 2, 1}, {2, 2, 1}}, 12);

  SolveReport one = nwfs::solve_branch_and_bound(inst);
  for (int workers : {2, 4, 8}) {
    SolveOptions opts;
    opts.worker_count = workers;
    SolveReport many = nwfs::solve_branch_and_bound(inst, opts);
    REQUIRE(many.best.has_value());
    CHECK(many.status == one.status);
    CHECK(*many.makespan_tenths == *one.makespan_tenths);
    CHECK(*many.best == *one.best);
  }
}

TEST_CASE("solve dispatches on the requested mode") {
  Instance inst = make(2, {{3, 2}}, 10);
  SolveReport bb = nwfs::solve(inst, SolveOptions{});
  SolveReport gt = nwfs::solve(inst, oracle_opts());
  CHECK(bb.candidates_tested == 1);
  CHECK(gt.candidates_tested == 25);
  CHECK(*bb.best == *gt.best);
}

TEST_CASE("status names are stable") {
  CHECK(std::string(nwfs::status_name(SolveStatus::Optimal)) == "optimal");
  CHECK(std::string(nwfs::status_name(SolveStatus::FeasibleTimeout)) ==
        "feasible_timeout");
  CHECK(std::string(nwfs::status_name(SolveStatus::Infeasible)) ==
        "infeasible");
  CHECK(std::string(nwfs::status_name(SolveStatus::ExhaustedNoSolution)) ==
        "exhausted_no_solution");
}
