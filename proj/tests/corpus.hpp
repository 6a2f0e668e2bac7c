#pragma once

// Deterministic seeded corpus for the property suites: small instances with
// m, n <= 3, durations in [1, 4] tenth-units and deadline slack in [1, 6].
// Every fifth instance is capped at 2x2 so the raw-grid cross-checks stay
// cheap; all instances are capped by reduced-domain product so exhaustive
// enumeration stays tractable.

#include <cstdint>
#include <vector>

#include "nwfs/gen.hpp"
#include "nwfs/instance.hpp"
#include "nwfs/ranges.hpp"

namespace corpus {

inline constexpr std::int64_t kMaxRangedProduct = 2'000'000;

inline std::vector<nwfs::Instance> build(std::size_t count = 220) {
  std::vector<nwfs::Instance> out;
  out.reserve(count);
  std::uint64_t draw = 0;
  auto next = [&draw]() {
    // splitmix64; fixed here so the corpus never shifts under a library
    // update.
    draw += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = draw;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t seed = 1;
  while (out.size() < count) {
    bool tiny = out.size() % 5 == 0;
    int dim_cap = tiny ? 2 : 3;
    nwfs::GenSpec spec;
    spec.num_baths = 1 + static_cast<int>(next() % dim_cap);
    spec.num_jobs = 1 + static_cast<int>(next() % dim_cap);
    spec.duration_low = 1;
    spec.duration_high = 4;
    spec.slack = 1 + static_cast<nwfs::Time>(next() % 6);
    spec.seed = seed++;
    nwfs::Instance inst = nwfs::generate_instance(spec);
    if (nwfs::count_range_combinations(inst) > kMaxRangedProduct) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

// The 2x2-capped stratum, small enough for raw-grid enumeration.
inline bool is_tiny(const nwfs::Instance& inst) {
  return inst.num_baths <= 2 && inst.num_jobs <= 2;
}

}  // namespace corpus
