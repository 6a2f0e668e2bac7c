#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "nwfs/instance.hpp"

namespace nwfs {

// Search-space counts overflow any machine word (a 8x8 grid with deadline 120
// has 120^64 start combinations), so all counting is exact bignum.
using BigInt = boost::multiprecision::cpp_int;

struct JobSlack {
  int job = 0;
  Time lambda = 0;  // total processing time across all baths
  Time chi = 0;     // slack: deadline - lambda, total absorbable delay
};

// Inclusive start-time window for one (job, bath) pair. Any feasible
// schedule's start lies inside it; the window width always equals the
// job's slack chi.
struct StartRange {
  int job = 0;
  int bath = 0;
  Time lower = 0;
  Time upper = 0;

  Time width() const { return upper - lower + 1; }
  bool contains(Time t) const { return t >= lower && t <= upper; }
};

struct DomainCount {
  BigInt full;
  BigInt ranged;
  double reduction_percent = 0.0;
};

// The published encoding sums processing times up to and including the
// current bath; the correct window arithmetic needs the strictly-previous
// baths. Exclusive is the default; InclusiveListing reproduces the published
// behavior for comparison.
enum class PrefixMode { Exclusive, InclusiveListing };

// lambda_j: sum of job j's durations over every bath.
Time total_processing(const Instance& inst, int job);

// chi_j = deadline - lambda_j. Throws ValidationError when chi_j < 1
// (no start >= 1 can finish by the deadline).
Time max_delay(const Instance& inst, int job);

JobSlack job_slack(const Instance& inst, int job);

// rho_{j,b}: processing accumulated before bath b (exclusive mode),
// so rho_{j,1} = 0 and rho_{j,b} = rho_{j,b-1} + t[j][b-1].
Time prefix_processing(const Instance& inst, int job, int bath,
                       PrefixMode mode = PrefixMode::Exclusive);

// upper = chi_j + rho_{j,b}, lower = upper - chi_j + 1 = rho_{j,b} + 1.
StartRange start_range(const Instance& inst, int job, int bath,
                       PrefixMode mode = PrefixMode::Exclusive);

// ranges[job-1][bath-1] for the whole instance.
std::vector<std::vector<StartRange>> all_start_ranges(
    const Instance& inst, PrefixMode mode = PrefixMode::Exclusive);

// Unrestricted grid size: deadline^(num_baths * num_jobs).
BigInt count_full_combinations(int num_baths, int num_jobs, Time deadline);

// Exact cardinality of the range-restricted grid:
// product over jobs of chi_j^num_baths (every bath window has width chi_j).
BigInt count_range_combinations(const Instance& inst);

// 100 * (1 - ranged/full), rounded to one decimal place.
// Requires 0 < ranged <= full; throws std::logic_error otherwise.
double reduction_percent(const BigInt& full, const BigInt& ranged);

DomainCount domain_count(const Instance& inst);

// "1.1684e+133" style rendering with the given significant digit count.
std::string to_scientific(const BigInt& value, int significant_digits = 5);

// Exact inverse for integer-valued scientific notation: "8.0995e+96",
// "1.2e3", or a plain integer. Throws ValidationError when the value is not
// an integer or is malformed.
BigInt parse_scientific(const std::string& text);

}  // namespace nwfs
