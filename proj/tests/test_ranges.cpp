#include "nwfs/ranges.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"

using nwfs::BigInt;
using nwfs::Instance;
using nwfs::StartRange;
using nwfs::Time;
using nwfs::ValidationError;

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

}  // namespace

TEST_CASE("total_processing sums a job's durations") {
  CHECK(nwfs::total_processing(make(2, {{3, 2}}, 10), 1) == 5);
  CHECK(nwfs::total_processing(make(1, {{7}}, 10), 1) == 7);
  CHECK(nwfs::total_processing(make(4, {{1, 1, 1, 1}}, 10), 1) == 4);
  CHECK_THROWS_AS(nwfs::total_processing(make(2, {{3, 2}}, 10), 2),
                  std::out_of_range);
}

TEST_CASE("max_delay is the slack left by the deadline") {
  CHECK(nwfs::max_delay(make(2, {{3, 2}}, 10), 1) == 5);
  CHECK(nwfs::max_delay(make(2, {{3, 2}}, 6), 1) == 1);
  CHECK_THROWS_AS(nwfs::max_delay(make(2, {{3, 2}}, 5), 1), ValidationError);
}

TEST_CASE("prefix_processing sums strictly earlier baths") {
  Instance two = make(2, {{3, 2}}, 10);
  CHECK(nwfs::prefix_processing(two, 1, 1) == 0);
  CHECK(nwfs::prefix_processing(two, 1, 2) == 3);
  CHECK(nwfs::prefix_processing(make(3, {{1, 2, 3}}, 10), 1, 3) == 3);
}

TEST_CASE("prefix_processing inclusive mode also counts the current bath") {
  Instance two = make(2, {{3, 2}}, 10);
  CHECK(nwfs::prefix_processing(two, 1, 1,
                                nwfs::PrefixMode::InclusiveListing) == 3);
  CHECK(nwfs::prefix_processing(two, 1, 2,
                                nwfs::PrefixMode::InclusiveListing) == 5);
}

TEST_CASE("start_range matches brute force on the two-bath example") {
  Instance inst = make(2, {{3, 2}}, 10);

  StartRange b1 = nwfs::start_range(inst, 1, 1);
  CHECK(b1.lower == 1);
  CHECK(b1.upper == 5);

  // Independent check: bath-1 starts that leave room for the whole job.
  std::vector<Time> ok;
  for (Time t = 1; t <= inst.deadline; ++t)
    if (t + 5 <= inst.deadline) ok.push_back(t);
  CHECK(ok.front() == b1.lower);
  CHECK(ok.back() == b1.upper);

  StartRange b2 = nwfs::start_range(inst, 1, 2);
  CHECK(b2.lower == 4);  // earliest: 1 + 3
  CHECK(b2.upper == 8);  // latest: 8 + 2 == deadline
  CHECK(b2.contains(4));
  CHECK_FALSE(b2.contains(9));
}

TEST_CASE("start_range degenerates to one slot at minimal slack") {
  Instance inst = make(2, {{3, 2}}, 6);
  for (int b = 1; b <= 2; ++b) {
    StartRange r = nwfs::start_range(inst, 1, b);
    Time rho = nwfs::prefix_processing(inst, 1, b);
    CHECK(r.lower == rho + 1);
    CHECK(r.upper == rho + 1);
  }
}

TEST_CASE("range width always equals the job's slack") {
  Instance inst = make(3, {{2, 1, 4}, {1, 1, 1}, {4, 4, 4}}, 15);
  for (int j = 1; j <= inst.num_jobs; ++j) {
    Time chi = nwfs::max_delay(inst, j);
    for (int b = 1; b <= inst.num_baths; ++b)
      CHECK(nwfs::start_range(inst, j, b).width() == chi);
  }
}

TEST_CASE("a deadline extension shifts only the upper bounds") {
  Instance inst = make(3, {{2, 1, 4}, {1, 1, 1}}, 12);
  Instance later = inst;
  later.deadline += 4;
  for (int j = 1; j <= inst.num_jobs; ++j)
    for (int b = 1; b <= inst.num_baths; ++b) {
      StartRange a = nwfs::start_range(inst, j, b);
      StartRange c = nwfs::start_range(later, j, b);
      CHECK(c.lower == a.lower);
      CHECK(c.upper == a.upper + 4);
    }
}

TEST_CASE("count_full_combinations is an exact power") {
  CHECK(nwfs::count_full_combinations(1, 1, 1) == 1);
  CHECK(nwfs::count_full_combinations(2, 2, 18) == 104976);
  CHECK(nwfs::to_scientific(nwfs::count_full_combinations(8, 8, 120)) ==
        "1.1684e+133");
  CHECK_THROWS_AS(nwfs::count_full_combinations(0, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("count_range_combinations multiplies the range widths") {
  CHECK(nwfs::count_range_combinations(make(2, {{3, 2}}, 10)) == 25);
  // Minimal slack everywhere: a single candidate.
  CHECK(nwfs::count_range_combinations(make(2, {{3, 2}, {1, 4}}, 6)) == 1);
  // Two jobs with slack 3 across two baths: 3^2 * 3^2.
  CHECK(nwfs::count_range_combinations(make(2, {{2, 2}, {2, 2}}, 7)) == 81);
}

TEST_CASE("ranged counts never reach the full grid") {
  Instance inst = make(2, {{3, 2}, {1, 4}}, 9);
  nwfs::DomainCount d = nwfs::domain_count(inst);
  CHECK(d.ranged < d.full);
  CHECK(d.full == nwfs::count_full_combinations(2, 2, 9));
}

TEST_CASE("reduction_percent reports one rounded decimal") {
  CHECK(nwfs::reduction_percent(nwfs::parse_scientific("8.0995e+96"),
                                nwfs::parse_scientific("1.2149e+95")) ==
        doctest::Approx(98.5).epsilon(1e-9));
  CHECK(nwfs::reduction_percent(BigInt(7), BigInt(7)) == 0.0);
  CHECK(nwfs::reduction_percent(BigInt(200), BigInt(2)) == 99.0);
  // Half-up at the second decimal: 1 - 9999/1e6 = 98.9999...% -> 99.0.
  CHECK(nwfs::reduction_percent(BigInt(1000000), BigInt(10001)) == 99.0);
  CHECK_THROWS_AS(nwfs::reduction_percent(BigInt(2), BigInt(3)),
                  std::logic_error);
  CHECK_THROWS_AS(nwfs::reduction_percent(BigInt(2), BigInt(0)),
                  std::logic_error);
}

TEST_CASE("to_scientific rounds half-up with carry") {
  CHECK(nwfs::to_scientific(BigInt(1)) == "1.0000e+0");
  CHECK(nwfs::to_scientific(BigInt(104976)) == "1.0498e+5");
  CHECK(nwfs::to_scientific(BigInt(99999)) == "9.9999e+4");
  CHECK(nwfs::to_scientific(BigInt(999995)) == "1.0000e+6");
  CHECK(nwfs::to_scientific(BigInt(123449)) == "1.2345e+5");
  CHECK(nwfs::to_scientific(BigInt(123455)) == "1.2346e+5");
  CHECK(nwfs::to_scientific(BigInt(12), 1) == "1e+1");
  CHECK(nwfs::to_scientific(BigInt(0)) == "0.0000e+0");
}

TEST_CASE("parse_scientific is the exact inverse for integer values") {
  CHECK(nwfs::parse_scientific("120") == 120);
  CHECK(nwfs::parse_scientific("1.2e3") == 1200);
  CHECK(nwfs::parse_scientific("8.0995e+96") ==
        BigInt("80995") * boost::multiprecision::pow(BigInt(10), 92));
  CHECK_THROWS_AS(nwfs::parse_scientific("1.25e1"), ValidationError);
  CHECK_THROWS_AS(nwfs::parse_scientific("12..5"), ValidationError);
  CHECK_THROWS_AS(nwfs::parse_scientific("1e+x"), ValidationError);
  CHECK_THROWS_AS(nwfs::parse_scientific(""), ValidationError);
}

TEST_CASE("inclusive-prefix listing shifts ranges by the bath duration") {
  Instance inst = make(2, {{3, 2}}, 10);
  StartRange b1 = nwfs::start_range(inst, 1, 1,
                                    nwfs::PrefixMode::InclusiveListing);
  CHECK(b1.lower == 4);
  CHECK(b1.upper == 8);
  StartRange b2 = nwfs::start_range(inst, 1, 2,
                                    nwfs::PrefixMode::InclusiveListing);
  CHECK(b2.lower == 6);
  CHECK(b2.upper == 10);
  // The exclusive default keeps every in-range start finishable; the
  // inclusive variant does not (10 + 2 > 10), which is why it is only a
  // compatibility listing mode.
  CHECK(nwfs::start_range(inst, 1, 2).upper + 2 <= inst.deadline);
  CHECK(b2.upper + 2 > inst.deadline);
}

TEST_CASE("all_start_ranges covers every job and bath") {
  Instance inst = make(2, {{3, 2}, {1, 4}}, 9);
  auto ranges = nwfs::all_start_ranges(inst);
  REQUIRE(ranges.size() == 2);
  REQUIRE(ranges[0].size() == 2);
  for (int j = 1; j <= 2; ++j)
    for (int b = 1; b <= 2; ++b) {
      StartRange direct = nwfs::start_range(inst, j, b);
      StartRange listed = ranges[static_cast<std::size_t>(j - 1)]
                                [static_cast<std::size_t>(b - 1)];
      CHECK(listed.lower == direct.lower);
      CHECK(listed.upper == direct.upper);
      CHECK(listed.job == j);
      CHECK(listed.bath == b);
    }
}
