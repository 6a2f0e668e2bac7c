#include "nwfs/schedule.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <tuple>

namespace nwfs {

Schedule make_schedule(const Instance& inst) {
  Schedule s;
  s.start.assign(static_cast<std::size_t>(inst.num_jobs),
                 std::vector<Time>(static_cast<std::size_t>(inst.num_baths), 0));
  return s;
}

Schedule make_schedule(const Instance& inst,
                       std::vector<std::vector<Time>> start) {
  if (start.size() != static_cast<std::size_t>(inst.num_jobs))
    throw ValidationError("schedule has " + std::to_string(start.size()) +
                          " job rows, instance has " +
                          std::to_string(inst.num_jobs));
  for (const auto& row : start)
    if (row.size() != static_cast<std::size_t>(inst.num_baths))
      throw ValidationError("schedule row has " + std::to_string(row.size()) +
                            " baths, instance has " +
                            std::to_string(inst.num_baths));
  Schedule s;
  s.start = std::move(start);
  return s;
}

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::OverlapBath: return "overlap_bath";
    case Rule::OverlapJob: return "overlap_job";
    case Rule::BadStarting: return "bad_starting";
    case Rule::ZeroWait: return "zero_wait";
    case Rule::DelayCap: return "delay_cap";
    case Rule::FirstStart: return "first_start";
    case Rule::DuplicateStart: return "duplicate_start";
    case Rule::LocalStorage: return "local_storage";
    case Rule::Deadline: return "deadline";
  }
  return "unknown";
}

Time finish_time(const Instance& inst, const Schedule& s, int job, int bath) {
  return s.start_of(job, bath) + inst.duration_of(job, bath);
}

namespace {

Violation make_violation(Rule rule, std::vector<int> jobs,
                         std::vector<int> baths, std::vector<Time> times) {
  Violation v;
  v.rule = rule;
  v.jobs = std::move(jobs);
  v.baths = std::move(baths);
  v.times = std::move(times);
  return v;
}

// Does another job hold bath `bath` from time `from` and free it exactly at
// `until`? Overlap rules already forbid longer occupation, so a single
// covering job is the only way a wait can be backed by local storage.
bool wait_is_covered(const Instance& inst, const Schedule& s, int waiting_job,
                     int bath, Time from, Time until) {
  for (int j2 = 1; j2 <= inst.num_jobs; ++j2) {
    if (j2 == waiting_job) continue;
    Time t3 = s.start_of(j2, bath);
    if (t3 <= from && t3 + inst.duration_of(j2, bath) == until) return true;
  }
  return false;
}

}  // namespace

std::vector<Violation> check_resource_exclusivity(const Instance& inst,
                                                  const Schedule& s) {
  std::vector<Violation> out;
  for (int b = 1; b <= inst.num_baths; ++b) {
    for (int j1 = 1; j1 <= inst.num_jobs; ++j1) {
      for (int j2 = j1 + 1; j2 <= inst.num_jobs; ++j2) {
        Time t1 = s.start_of(j1, b), t2 = s.start_of(j2, b);
        Time f1 = finish_time(inst, s, j1, b), f2 = finish_time(inst, s, j2, b);
        if (t1 < f2 && t2 < f1)
          out.push_back(make_violation(Rule::OverlapBath, {j1, j2}, {b},
                                       {t1, t2}));
        if (t1 == t2)
          out.push_back(make_violation(Rule::DuplicateStart, {j1, j2}, {b},
                                       {t1}));
      }
    }
  }
  return out;
}

std::vector<Violation> check_job_flow(const Instance& inst, const Schedule& s) {
  std::vector<Violation> out;
  for (int j = 1; j <= inst.num_jobs; ++j) {
    for (int b1 = 1; b1 <= inst.num_baths; ++b1) {
      Time t1 = s.start_of(j, b1);
      Time f1 = finish_time(inst, s, j, b1);
      for (int b2 = b1 + 1; b2 <= inst.num_baths; ++b2) {
        Time t2 = s.start_of(j, b2);
        if (b2 == b1 + 1 && t1 <= t2 && f1 > t2)
          out.push_back(make_violation(Rule::OverlapJob, {j}, {b1, b2},
                                       {t1, t2}));
        if (t2 < f1)
          out.push_back(make_violation(Rule::BadStarting, {j}, {b1, b2},
                                       {f1, t2}));
      }
    }
  }
  return out;
}

std::vector<Violation> check_timing_policies(const Instance& inst,
                                             const Schedule& s) {
  std::vector<Violation> out;
  for (int j = 1; j <= inst.num_jobs; ++j) {
    for (int b = 1; b < inst.num_baths; ++b) {
      Time f1 = finish_time(inst, s, j, b);
      Time t2 = s.start_of(j, b + 1);
      if (b % 2 != 0) {
        // Chemical: the next operation must start the instant this one ends.
        if (t2 > f1)
          out.push_back(make_violation(Rule::ZeroWait, {j}, {b, b + 1},
                                       {f1, t2}));
      } else {
        Time delay = t2 - f1;
        if (delay > inst.delay_cap)
          out.push_back(make_violation(Rule::DelayCap, {j}, {b, b + 1},
                                       {f1, t2}));
        if (inst.strict_local_storage && delay > 0 &&
            !wait_is_covered(inst, s, j, b + 1, f1, t2))
          out.push_back(make_violation(Rule::LocalStorage, {j}, {b, b + 1},
                                       {f1, t2}));
      }
    }
  }
  return out;
}

std::vector<Violation> check_global(const Instance& inst, const Schedule& s) {
  std::vector<Violation> out;
  int first_job = 1;
  Time min_start = s.start_of(1, 1);
  for (int j = 2; j <= inst.num_jobs; ++j) {
    if (s.start_of(j, 1) < min_start) {
      min_start = s.start_of(j, 1);
      first_job = j;
    }
  }
  if (min_start != 1)
    out.push_back(make_violation(Rule::FirstStart, {first_job}, {1},
                                 {min_start}));
  for (int j = 1; j <= inst.num_jobs; ++j) {
    for (int b = 1; b <= inst.num_baths; ++b) {
      Time f = finish_time(inst, s, j, b);
      if (f > inst.deadline)
        out.push_back(make_violation(Rule::Deadline, {j}, {b}, {f}));
    }
  }
  return out;
}

ViolationReport check_all(const Instance& inst, const Schedule& s) {
  ViolationReport report;
  auto append = [&report](std::vector<Violation> vs) {
    for (auto& v : vs) report.violations.push_back(std::move(v));
  };
  append(check_resource_exclusivity(inst, s));
  append(check_job_flow(inst, s));
  append(check_timing_policies(inst, s));
  append(check_global(inst, s));
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              int c = std::strcmp(rule_name(a.rule), rule_name(b.rule));
              if (c != 0) return c < 0;
              return std::tie(a.jobs, a.baths, a.times) <
                     std::tie(b.jobs, b.baths, b.times);
            });
  report.feasible = report.violations.empty();
  return report;
}

bool is_feasible(const Instance& inst, const Schedule& s) {
  const int n = inst.num_jobs, m = inst.num_baths;
  Time min_start = s.start_of(1, 1);
  for (int j = 1; j <= n; ++j) {
    Time prev_finish = 0;
    for (int b = 1; b <= m; ++b) {
      Time t = s.start_of(j, b);
      Time f = t + inst.duration_of(j, b);
      if (f > inst.deadline) return false;
      if (b > 1) {
        if (t < prev_finish) return false;  // sequence broken
        if ((b - 1) % 2 != 0) {
          if (t > prev_finish) return false;  // wait after chemical
        } else {
          Time delay = t - prev_finish;
          if (delay > inst.delay_cap) return false;
          if (inst.strict_local_storage && delay > 0 &&
              !wait_is_covered(inst, s, j, b, prev_finish, t))
            return false;
        }
      }
      prev_finish = f;
    }
    if (s.start_of(j, 1) < min_start) min_start = s.start_of(j, 1);
  }
  if (min_start != 1) return false;
  for (int b = 1; b <= m; ++b) {
    for (int j1 = 1; j1 <= n; ++j1) {
      Time t1 = s.start_of(j1, b);
      Time f1 = t1 + inst.duration_of(j1, b);
      for (int j2 = j1 + 1; j2 <= n; ++j2) {
        Time t2 = s.start_of(j2, b);
        if (t1 < t2 + inst.duration_of(j2, b) && t2 < f1) return false;
      }
    }
  }
  return true;
}

Time makespan(const Instance& inst, const Schedule& s) {
  Time latest = 0;
  for (int j = 1; j <= inst.num_jobs; ++j)
    latest = std::max(latest, finish_time(inst, s, j, inst.num_baths));
  return latest - 1;
}

Time max_finish(const Instance& inst, const Schedule& s) {
  Time latest = 0;
  for (int j = 1; j <= inst.num_jobs; ++j)
    for (int b = 1; b <= inst.num_baths; ++b)
      latest = std::max(latest, finish_time(inst, s, j, b));
  return latest;
}

Schedule parse_schedule(const Instance& inst, const std::string& text) {
  Schedule s = make_schedule(inst);
  std::vector<std::vector<bool>> seen(
      static_cast<std::size_t>(inst.num_jobs),
      std::vector<bool>(static_cast<std::size_t>(inst.num_baths), false));
  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    if (auto hash = raw_line.find('#'); hash != std::string::npos)
      raw_line.erase(hash);
    std::istringstream ls(raw_line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key != "s")
      throw ParseError("expected 's <job> <bath> <start>', got '" + key + "'",
                       line_no);
    long long j = 0, b = 0, t = 0;
    if (!(ls >> j >> b >> t))
      throw ParseError("expected 's <job> <bath> <start>'", line_no);
    std::string extra;
    if (ls >> extra)
      throw ParseError("trailing token '" + extra + "'", line_no);
    if (j < 1 || j > inst.num_jobs)
      throw ParseError("job index " + std::to_string(j) + " outside 1.." +
                           std::to_string(inst.num_jobs),
                       line_no);
    if (b < 1 || b > inst.num_baths)
      throw ParseError("bath index " + std::to_string(b) + " outside 1.." +
                           std::to_string(inst.num_baths),
                       line_no);
    if (t < 1)
      throw ValidationError("start for job " + std::to_string(j) + " bath " +
                            std::to_string(b) + " must be >= 1");
    auto cell = seen[static_cast<std::size_t>(j - 1)]
                    [static_cast<std::size_t>(b - 1)];
    if (cell)
      throw ParseError("duplicate start for job " + std::to_string(j) +
                           " bath " + std::to_string(b),
                       line_no);
    cell = true;
    s.start_of(static_cast<int>(j), static_cast<int>(b)) = t;
  }
  for (int j = 1; j <= inst.num_jobs; ++j)
    for (int b = 1; b <= inst.num_baths; ++b)
      if (!seen[static_cast<std::size_t>(j - 1)]
               [static_cast<std::size_t>(b - 1)])
        throw ValidationError("missing start for job " + std::to_string(j) +
                              " bath " + std::to_string(b));
  return s;
}

std::string render_schedule(const Schedule& s) {
  std::ostringstream out;
  for (std::size_t j = 0; j < s.start.size(); ++j)
    for (std::size_t b = 0; b < s.start[j].size(); ++b)
      out << "s " << (j + 1) << " " << (b + 1) << " " << s.start[j][b] << "\n";
  return out.str();
}

}  // namespace nwfs
