#include "nwfs/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "nwfs/ranges.hpp"

namespace nwfs {

namespace {

using json = nlohmann::ordered_json;

// Unit-scale rendering of a tenth-unit value: "18" when whole, "18.3"
// otherwise.
std::string unit_string(Time tenths) {
  std::string s = std::to_string(tenths / 10);
  if (tenths % 10 != 0) {
    s += '.';
    s += static_cast<char>('0' + tenths % 10);
  }
  return s;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

char job_symbol(int job) {
  if (job <= 9) return static_cast<char>('0' + job);
  return static_cast<char>('A' + (job - 10) % 26);
}

}  // namespace

double to_unit(Time tenths) { return static_cast<double>(tenths) / 10.0; }

std::string solve_report_to_json(const Instance& inst,
                                 const SolveReport& report) {
  json out;
  out["status"] = status_name(report.status);
  if (report.makespan_tenths) {
    out["makespan_tenths"] = *report.makespan_tenths;
    out["makespan"] = to_unit(*report.makespan_tenths);
    out["max_finish_tenths"] = report.max_finish_tenths;
  } else {
    out["makespan_tenths"] = nullptr;
    out["makespan"] = nullptr;
    out["max_finish_tenths"] = nullptr;
  }
  if (report.best) {
    json starts = json::array();
    for (int j = 1; j <= inst.num_jobs; ++j) {
      json row = json::array();
      for (int b = 1; b <= inst.num_baths; ++b)
        row.push_back(report.best->start_of(j, b));
      starts.push_back(std::move(row));
    }
    out["starts"] = std::move(starts);
  } else {
    out["starts"] = nullptr;
  }
  out["nodes_explored"] = report.nodes_explored;
  out["candidates_tested"] = report.candidates_tested;
  out["domain_full"] = report.domain.full.str();
  out["domain_full_sci"] = to_scientific(report.domain.full);
  out["domain_ranged"] = report.domain.ranged.str();
  out["domain_ranged_sci"] = to_scientific(report.domain.ranged);
  out["reduction_percent"] = report.domain.reduction_percent;
  out["wall_time_s"] = report.wall_time_s;
  return out.dump(2) + "\n";
}

std::string violation_report_to_json(const ViolationReport& report) {
  json out;
  out["feasible"] = report.feasible;
  json list = json::array();
  for (const auto& v : report.violations) {
    json item;
    item["rule"] = rule_name(v.rule);
    item["jobs"] = v.jobs;
    item["baths"] = v.baths;
    item["times"] = v.times;
    list.push_back(std::move(item));
  }
  out["violations"] = std::move(list);
  return out.dump(2) + "\n";
}

std::string render_gantt(const Instance& inst, const Schedule& s) {
  Time last = 0;
  for (int j = 1; j <= inst.num_jobs; ++j)
    for (int b = 1; b <= inst.num_baths; ++b)
      last = std::max(last, finish_time(inst, s, j, b) - 1);

  // Ruler: every 5th tick '+', every 10th the tens digit.
  std::string ruler(static_cast<std::size_t>(last), '-');
  for (Time t = 10; t <= last; t += 5)
    ruler[static_cast<std::size_t>(t - 1)] =
        t % 10 == 0 ? static_cast<char>('0' + (t / 10) % 10) : '+';
  if (last >= 5) ruler[4] = '+';

  std::ostringstream out;
  out << "                 |" << ruler << "|\n";
  for (int b = 1; b <= inst.num_baths; ++b) {
    std::string row(static_cast<std::size_t>(last), '.');
    for (int j = 1; j <= inst.num_jobs; ++j) {
      Time t0 = s.start_of(j, b);
      Time t1 = finish_time(inst, s, j, b);
      for (Time t = t0; t < t1; ++t)
        row[static_cast<std::size_t>(t - 1)] = job_symbol(j);
    }
    const char* kind =
        bath_kind(inst, b) == BathKind::Chemical ? "chemical" : "water";
    char prefix[32];
    std::snprintf(prefix, sizeof prefix, "bath %2d %-8s", b, kind);
    out << prefix << " |" << row << "|\n";
  }
  return out.str();
}

std::vector<BenchRow> bench_instance(const std::string& label,
                                     const Instance& inst,
                                     std::optional<double> time_limit_s) {
  std::vector<BenchRow> rows;
  for (bool use_ranges : {false, true}) {
    SolveOptions opts;
    opts.use_ranges = use_ranges;
    opts.time_limit_s = time_limit_s;
    BenchRow row;
    row.label = label;
    row.approach = use_ranges ? "with_ranges" : "no_ranges";
    SolveReport rep = solve_branch_and_bound(inst, opts);
    row.status = rep.status;
    row.makespan_tenths = rep.makespan_tenths;
    row.cpu_time_s = rep.wall_time_s;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "label,approach,status,makespan,cpu_time_s\n";
  for (const auto& r : rows) {
    out << r.label << ',' << r.approach << ',' << status_name(r.status) << ',';
    if (r.makespan_tenths) out << unit_string(*r.makespan_tenths);
    out << ',' << fixed3(r.cpu_time_s) << '\n';
  }
  return out.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  const std::array<std::string, 4> header = {"P:[BxJ]", "makespan", "CPU time",
                                             "approach"};
  std::vector<std::array<std::string, 4>> cells;
  cells.reserve(rows.size());
  for (const auto& r : rows) {
    // Proven-optimal rows show their value; everything else is "NS".
    std::string mk = r.status == SolveStatus::Optimal && r.makespan_tenths
                         ? unit_string(*r.makespan_tenths)
                         : "NS";
    cells.push_back({r.label, mk, fixed3(r.cpu_time_s), r.approach});
  }
  std::array<std::size_t, 4> width;
  for (std::size_t c = 0; c < 4; ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](std::ostringstream& out, const std::array<std::string, 4>& row) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c) out << "  ";
      if (c == 3) {  // final column stays ragged: no trailing spaces
        out << row[c];
        continue;
      }
      // Numeric columns right-aligned, text columns left-aligned.
      bool right = c == 1 || c == 2;
      std::string pad(width[c] - row[c].size(), ' ');
      out << (right ? pad + row[c] : row[c] + pad);
    }
    out << '\n';
  };
  std::ostringstream out;
  emit(out, header);
  for (const auto& row : cells) emit(out, row);
  return out.str();
}

}  // namespace nwfs
