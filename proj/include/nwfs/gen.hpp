#pragma once

#include <cstdint>

#include "nwfs/instance.hpp"

namespace nwfs {

// Parameters for random instance generation. Durations are drawn uniformly
// from [duration_low, duration_high]; the deadline is the largest total
// processing time plus `slack`, so the tightest job gets exactly `slack`
// start positions per bath.
struct GenSpec {
  int num_baths = 2;
  int num_jobs = 2;
  Time duration_low = 1;
  Time duration_high = 4;
  Time slack = 3;
  std::uint64_t seed = 0;
};

// Deterministic: the same spec always yields the same instance, on any
// platform.
Instance generate_instance(const GenSpec& spec);

}  // namespace nwfs
