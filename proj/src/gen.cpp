#include "nwfs/gen.hpp"

#include <algorithm>
#include <random>

#include "nwfs/ranges.hpp"

namespace nwfs {

Instance generate_instance(const GenSpec& spec) {
  if (spec.num_baths < 1 || spec.num_jobs < 1)
    throw ValidationError("generator needs at least one bath and one job");
  if (spec.duration_low < 1 || spec.duration_low > spec.duration_high)
    throw ValidationError("generator needs 1 <= duration_low <= duration_high");
  if (spec.slack < 1)
    throw ValidationError("generator needs slack >= 1");

  std::mt19937_64 rng(spec.seed);
  // Draw by modulo rather than uniform_int_distribution: the distribution's
  // output is implementation-defined, and reproducibility across standard
  // libraries matters more here than the (tiny) modulo bias.
  const std::uint64_t span =
      static_cast<std::uint64_t>(spec.duration_high - spec.duration_low + 1);

  Instance inst;
  inst.num_baths = spec.num_baths;
  inst.num_jobs = spec.num_jobs;
  inst.duration.assign(static_cast<std::size_t>(spec.num_jobs), {});
  Time max_total = 0;
  for (int j = 0; j < spec.num_jobs; ++j) {
    Time total = 0;
    auto& row = inst.duration[static_cast<std::size_t>(j)];
    row.reserve(static_cast<std::size_t>(spec.num_baths));
    for (int b = 0; b < spec.num_baths; ++b) {
      Time d = spec.duration_low + static_cast<Time>(rng() % span);
      row.push_back(d);
      total += d;
    }
    max_total = std::max(max_total, total);
  }
  inst.deadline = max_total + spec.slack;
  validate(inst);
  return inst;
}

}  // namespace nwfs
