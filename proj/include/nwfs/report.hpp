#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nwfs/instance.hpp"
#include "nwfs/schedule.hpp"
#include "nwfs/solver.hpp"

namespace nwfs {

// Tenth-unit value rendered back on the original scale (÷ 10).
double to_unit(Time tenths);

// JSON report for a solve run: status, makespan in both scales, the start
// matrix, search counters, and the domain-size comparison.
std::string solve_report_to_json(const Instance& inst,
                                 const SolveReport& report);

// JSON report for a feasibility check: overall verdict plus one entry per
// violation with the rule name and the jobs/baths/times involved.
std::string violation_report_to_json(const ViolationReport& report);

// ASCII Gantt chart, one row per bath. Presentation only: nothing in the
// engine reads this back.
std::string render_gantt(const Instance& inst, const Schedule& s);

// One benchmark measurement: a labelled instance solved by one approach.
struct BenchRow {
  std::string label;     // "[BxJ]"
  std::string approach;  // "no_ranges" or "with_ranges"
  SolveStatus status = SolveStatus::Optimal;
  std::optional<Time> makespan_tenths;
  double cpu_time_s = 0.0;
};

// Solves `inst` twice (full domains first, then reduced ranges) and returns
// the two rows.
std::vector<BenchRow> bench_instance(const std::string& label,
                                     const Instance& inst,
                                     std::optional<double> time_limit_s);

// CSV with header `label,approach,status,makespan,cpu_time_s`; makespan in
// unit scale, times with millisecond resolution, blank makespan when the
// run produced none.
std::string bench_csv(const std::vector<BenchRow>& rows);

// Aligned text table; rows without a proven optimum render "NS" in the
// makespan column.
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace nwfs
