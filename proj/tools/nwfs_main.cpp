#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nwfs/gen.hpp"
#include "nwfs/instance.hpp"
#include "nwfs/ranges.hpp"
#include "nwfs/report.hpp"
#include "nwfs/schedule.hpp"
#include "nwfs/solver.hpp"

namespace {

using json = nlohmann::ordered_json;

// Exit codes: 0 success / feasible check; 1 infeasible check; 2 bad input
// (parse, validation, missing file, enumeration guard); 3 no solution;
// 4 time limit hit with an incumbent in hand.
constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitTimeout = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nwfs::ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nwfs::ValidationError("cannot write " + path);
  out << text;
}

struct SolveArgs {
  std::string instance_path;
  bool no_ranges = false;
  bool oracle = false;
  bool force = false;
  bool scale10 = false;
  bool gantt = false;
  std::optional<double> time_limit_s;
  int workers = 1;
  std::optional<nwfs::Time> delay_cap;
  std::optional<std::string> strict_ls;
  std::string out_path;
  std::string out_schedule_path;
};

int run_solve(const SolveArgs& args) {
  nwfs::Instance inst =
      nwfs::parse_instance(read_file(args.instance_path), args.scale10);
  nwfs::SolveOptions opts;
  opts.use_ranges = !args.no_ranges;
  opts.mode = args.oracle ? nwfs::SolveMode::GenerateAndTest
                          : nwfs::SolveMode::BranchAndBound;
  opts.force_enumeration = args.force;
  opts.time_limit_s = args.time_limit_s;
  opts.worker_count = args.workers;
  opts.delay_cap = args.delay_cap;
  if (args.strict_ls) opts.strict_local_storage = *args.strict_ls == "on";

  nwfs::SolveReport report = nwfs::solve(inst, opts);
  std::string body = nwfs::solve_report_to_json(inst, report);
  if (args.out_path.empty())
    std::cout << body;
  else
    write_file(args.out_path, body);
  if (report.best) {
    if (args.gantt) std::cout << nwfs::render_gantt(inst, *report.best);
    if (!args.out_schedule_path.empty())
      write_file(args.out_schedule_path, nwfs::render_schedule(*report.best));
  }

  switch (report.status) {
    case nwfs::SolveStatus::Optimal:
      return kExitOk;
    case nwfs::SolveStatus::FeasibleTimeout:
      return report.best ? kExitTimeout : kExitNoSolution;
    default:
      return kExitNoSolution;
  }
}

struct CheckArgs {
  std::string instance_path;
  std::string schedule_path;
  bool scale10 = false;
  std::optional<nwfs::Time> delay_cap;
  std::optional<std::string> strict_ls;
};

int run_check(const CheckArgs& args) {
  nwfs::Instance inst =
      nwfs::parse_instance(read_file(args.instance_path), args.scale10);
  if (args.delay_cap) inst.delay_cap = *args.delay_cap;
  if (args.strict_ls) inst.strict_local_storage = *args.strict_ls == "on";
  nwfs::Schedule sched =
      nwfs::parse_schedule(inst, read_file(args.schedule_path));
  nwfs::ViolationReport report = nwfs::check_all(inst, sched);
  std::cout << nwfs::violation_report_to_json(report);
  return report.feasible ? kExitOk : kExitInfeasible;
}

struct CountArgs {
  std::string instance_path;
  bool scale10 = false;
  bool inclusive_prefix = false;
  std::optional<int> nb, nj;
  std::optional<nwfs::Time> dd;
};

int run_count(const CountArgs& args) {
  if (args.nb || args.nj || args.dd) {
    if (!(args.nb && args.nj && args.dd))
      throw nwfs::ValidationError("--nb, --nj and --dd must be given together");
    nwfs::BigInt full =
        nwfs::count_full_combinations(*args.nb, *args.nj, *args.dd);
    json out;
    out["full"] = full.str();
    out["full_sci"] = nwfs::to_scientific(full);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (args.instance_path.empty())
    throw nwfs::ValidationError(
        "count needs an instance file or --nb/--nj/--dd");
  nwfs::Instance inst =
      nwfs::parse_instance(read_file(args.instance_path), args.scale10);
  nwfs::DomainCount domain = nwfs::domain_count(inst);
  nwfs::PrefixMode mode = args.inclusive_prefix
                              ? nwfs::PrefixMode::InclusiveListing
                              : nwfs::PrefixMode::Exclusive;
  json out;
  out["full"] = domain.full.str();
  out["full_sci"] = nwfs::to_scientific(domain.full);
  out["ranged"] = domain.ranged.str();
  out["ranged_sci"] = nwfs::to_scientific(domain.ranged);
  out["reduction_percent"] = domain.reduction_percent;
  json per_job = json::array();
  json ranges = json::array();
  for (int j = 1; j <= inst.num_jobs; ++j) {
    nwfs::JobSlack slack = nwfs::job_slack(inst, j);
    per_job.push_back({{"lambda", slack.lambda}, {"chi", slack.chi}});
    for (int b = 1; b <= inst.num_baths; ++b) {
      nwfs::StartRange r = nwfs::start_range(inst, j, b, mode);
      ranges.push_back({r.lower, r.upper});
    }
  }
  out["per_job"] = std::move(per_job);
  out["ranges"] = std::move(ranges);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct GenArgs {
  nwfs::GenSpec spec;
  std::string out_path;
};

int run_gen(const GenArgs& args) {
  nwfs::Instance inst = nwfs::generate_instance(args.spec);
  std::string body = nwfs::render_instance(inst);
  if (args.out_path.empty())
    std::cout << body;
  else
    write_file(args.out_path, body);
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> paths;
  bool scale10 = false;
  std::optional<double> time_limit_s;
  std::string csv_path;
  int gen_count = 0;
  nwfs::GenSpec gen_spec;
};

int run_bench(const BenchArgs& args) {
  struct Entry {
    std::string name;
    nwfs::Instance inst;
  };
  std::vector<Entry> entries;
  std::vector<std::string> files;
  for (const auto& p : args.paths) {
    if (std::filesystem::is_directory(p)) {
      for (const auto& e : std::filesystem::directory_iterator(p))
        if (e.is_regular_file()) files.push_back(e.path().string());
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      entries.push_back({f, nwfs::parse_instance(read_file(f), args.scale10)});
    } catch (const std::exception& e) {
      std::cerr << "skipping " << f << ": " << e.what() << "\n";
    }
  }
  for (int i = 0; i < args.gen_count; ++i) {
    nwfs::GenSpec spec = args.gen_spec;
    spec.seed += static_cast<std::uint64_t>(i);
    entries.push_back({"seed " + std::to_string(spec.seed),
                       nwfs::generate_instance(spec)});
  }
  if (entries.empty())
    throw nwfs::ValidationError("bench has no instances to run");

  std::vector<nwfs::BenchRow> rows;
  for (const auto& e : entries) {
    std::string label = "[" + std::to_string(e.inst.num_baths) + "x" +
                        std::to_string(e.inst.num_jobs) + "]";
    auto pair = nwfs::bench_instance(label, e.inst, args.time_limit_s);
    rows.insert(rows.end(), pair.begin(), pair.end());
  }
  if (args.csv_path == "-")
    std::cout << nwfs::bench_csv(rows);
  else
    std::cout << nwfs::bench_table(rows);
  if (!args.csv_path.empty() && args.csv_path != "-")
    write_file(args.csv_path, nwfs::bench_csv(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"no-wait flowshop scheduler for wet-etch bath lines"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd =
      app.add_subcommand("solve", "find a minimum-makespan schedule");
  solve_cmd->add_option("instance", solve_args.instance_path, "instance file")
      ->required();
  solve_cmd->add_flag("--no-ranges", solve_args.no_ranges,
                      "search full start domains instead of reduced ranges");
  solve_cmd->add_flag("--oracle", solve_args.oracle,
                      "exhaustive generate-and-test instead of branch-and-bound");
  solve_cmd->add_flag("--force", solve_args.force,
                      "override the enumeration size guard");
  solve_cmd->add_option("--time-limit", solve_args.time_limit_s,
                        "wall-clock limit in seconds");
  solve_cmd->add_option("--workers", solve_args.workers, "worker thread count")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--delay-cap", solve_args.delay_cap,
                        "max post-water delay in tenth-units");
  solve_cmd->add_option("--strict-ls", solve_args.strict_ls,
                        "require covered waits in water baths")
      ->check(CLI::IsMember({"on", "off"}));
  solve_cmd->add_flag("--scale10", solve_args.scale10,
                      "input uses one-decimal units; scale by 10 on read");
  solve_cmd->add_flag("--gantt", solve_args.gantt, "print an ASCII Gantt chart");
  solve_cmd->add_option("--out", solve_args.out_path,
                        "write the JSON report here instead of stdout");
  solve_cmd->add_option("--out-schedule", solve_args.out_schedule_path,
                        "write the best schedule as a schedule file");

  CheckArgs check_args;
  auto* check_cmd =
      app.add_subcommand("check", "validate a schedule against an instance");
  check_cmd->add_option("instance", check_args.instance_path, "instance file")
      ->required();
  check_cmd->add_option("schedule", check_args.schedule_path, "schedule file")
      ->required();
  check_cmd->add_flag("--scale10", check_args.scale10,
                      "instance uses one-decimal units; scale by 10 on read");
  check_cmd->add_option("--delay-cap", check_args.delay_cap,
                        "max post-water delay in tenth-units");
  check_cmd->add_option("--strict-ls", check_args.strict_ls,
                        "require covered waits in water baths")
      ->check(CLI::IsMember({"on", "off"}));

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand(
      "count", "search-space sizes with and without range reduction");
  count_cmd->add_option("instance", count_args.instance_path, "instance file");
  count_cmd->add_flag("--scale10", count_args.scale10,
                      "instance uses one-decimal units; scale by 10 on read");
  count_cmd->add_flag("--inclusive-prefix", count_args.inclusive_prefix,
                      "list ranges with the inclusive prefix variant");
  count_cmd->add_option("--nb", count_args.nb, "bath count (no instance file)");
  count_cmd->add_option("--nj", count_args.nj, "job count (no instance file)");
  count_cmd->add_option("--dd", count_args.dd,
                        "deadline in tenth-units (no instance file)");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--baths", gen_args.spec.num_baths, "bath count");
  gen_cmd->add_option("--jobs", gen_args.spec.num_jobs, "job count");
  gen_cmd->add_option("--low", gen_args.spec.duration_low,
                      "min duration in tenth-units");
  gen_cmd->add_option("--high", gen_args.spec.duration_high,
                      "max duration in tenth-units");
  gen_cmd->add_option("--slack", gen_args.spec.slack,
                      "deadline slack over the longest job");
  gen_cmd->add_option("--seed", gen_args.spec.seed, "RNG seed");
  gen_cmd->add_option("-o,--out", gen_args.out_path,
                      "write the instance here instead of stdout");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand(
      "bench", "solve each instance with and without range reduction");
  bench_cmd->add_option("paths", bench_args.paths,
                        "instance files or directories");
  bench_cmd->add_flag("--scale10", bench_args.scale10,
                      "instances use one-decimal units; scale by 10 on read");
  bench_cmd->add_option("--time-limit", bench_args.time_limit_s,
                        "per-run wall-clock limit in seconds");
  bench_cmd->add_option("--csv", bench_args.csv_path,
                        "write CSV here ('-' for stdout instead of the table)");
  bench_cmd->add_option("--gen-count", bench_args.gen_count,
                        "number of generated instances to add");
  bench_cmd->add_option("--gen-baths", bench_args.gen_spec.num_baths,
                        "generated bath count");
  bench_cmd->add_option("--gen-jobs", bench_args.gen_spec.num_jobs,
                        "generated job count");
  bench_cmd->add_option("--gen-low", bench_args.gen_spec.duration_low,
                        "generated min duration");
  bench_cmd->add_option("--gen-high", bench_args.gen_spec.duration_high,
                        "generated max duration");
  bench_cmd->add_option("--gen-slack", bench_args.gen_spec.slack,
                        "generated deadline slack");
  bench_cmd->add_option("--gen-seed", bench_args.gen_spec.seed,
                        "base RNG seed for generated instances");

  int rc = kExitOk;
  auto guarded = [&rc](auto fn) {
    return [&rc, fn]() {
      try {
        rc = fn();
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitBadInput;
      }
    };
  };
  solve_cmd->callback(guarded([&] { return run_solve(solve_args); }));
  check_cmd->callback(guarded([&] { return run_check(check_args); }));
  count_cmd->callback(guarded([&] { return run_count(count_args); }));
  gen_cmd->callback(guarded([&] { return run_gen(gen_args); }));
  bench_cmd->callback(guarded([&] { return run_bench(bench_args); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return rc;
}
