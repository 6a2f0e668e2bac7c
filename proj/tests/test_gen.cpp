#include "nwfs/gen.hpp"

#include <algorithm>

#include "doctest.h"
#include "nwfs/ranges.hpp"

using nwfs::GenSpec;
using nwfs::Instance;
using nwfs::Time;

TEST_CASE("the same seed reproduces the same instance") {
  GenSpec spec;
  spec.num_baths = 3;
  spec.num_jobs = 4;
  spec.seed = 42;
  Instance a = nwfs::generate_instance(spec);
  Instance b = nwfs::generate_instance(spec);
  CHECK(a == b);
  CHECK(nwfs::render_instance(a) == nwfs::render_instance(b));

  spec.seed = 43;
  Instance c = nwfs::generate_instance(spec);
  CHECK_FALSE(a == c);  // a different stream with overwhelming probability
}

TEST_CASE("generated instances respect the requested shape") {
  GenSpec spec;
  spec.num_baths = 3;
  spec.num_jobs = 5;
  spec.duration_low = 2;
  spec.duration_high = 6;
  spec.slack = 4;
  spec.seed = 7;
  Instance inst = nwfs::generate_instance(spec);

  CHECK(inst.num_baths == 3);
  CHECK(inst.num_jobs == 5);
  Time max_total = 0;
  for (const auto& row : inst.duration) {
    REQUIRE(row.size() == 3);
    for (Time d : row) {
      CHECK(d >= 2);
      CHECK(d <= 6);
    }
    Time total = 0;
    for (Time d : row) total += d;
    max_total = std::max(max_total, total);
  }
  // The deadline tracks the slowest job, so its slack is exactly the knob.
  CHECK(inst.deadline == max_total + 4);
  Time min_chi = inst.deadline;
  for (int j = 1; j <= inst.num_jobs; ++j)
    min_chi = std::min(min_chi, nwfs::max_delay(inst, j));
  CHECK(min_chi == 4);
  CHECK_NOTHROW(nwfs::validate(inst));
}

TEST_CASE("a degenerate duration band pins every entry") {
  GenSpec spec;
  spec.num_baths = 2;
  spec.num_jobs = 3;
  spec.duration_low = 3;
  spec.duration_high = 3;
  spec.slack = 2;
  spec.seed = 0;
  Instance inst = nwfs::generate_instance(spec);
  for (const auto& row : inst.duration)
    for (Time d : row) CHECK(d == 3);
  CHECK(inst.deadline == 2 * 3 + 2);
}

TEST_CASE("invalid generation requests are rejected") {
  GenSpec bad;
  bad.num_baths = 0;
  CHECK_THROWS_AS(nwfs::generate_instance(bad), nwfs::ValidationError);

  bad = GenSpec{};
  bad.num_jobs = -1;
  CHECK_THROWS_AS(nwfs::generate_instance(bad), nwfs::ValidationError);

  bad = GenSpec{};
  bad.duration_low = 0;
  CHECK_THROWS_AS(nwfs::generate_instance(bad), nwfs::ValidationError);

  bad = GenSpec{};
  bad.duration_low = 5;
  bad.duration_high = 4;
  CHECK_THROWS_AS(nwfs::generate_instance(bad), nwfs::ValidationError);

  bad = GenSpec{};
  bad.slack = 0;  // deadline would equal the longest job's total
  CHECK_THROWS_AS(nwfs::generate_instance(bad), nwfs::ValidationError);
}
