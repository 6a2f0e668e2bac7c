#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nwfs {

// All times live on a 1-based integer grid in tenth-units: raw datasets with
// one decimal digit are multiplied by ten on ingestion and divided by ten
// again only when results are reported. A start T occupies [T, T + duration),
// and T + duration <= deadline must hold for every operation.
using Time = std::int64_t;

enum class BathKind { Chemical, Water };

// A wet-etch line instance: n jobs flow through m alternating baths in fixed
// order. Odd baths are chemical, even baths are water.
struct Instance {
  int num_baths = 0;                        // m, baths indexed 1..m
  int num_jobs = 0;                         // n, jobs indexed 1..n
  std::vector<std::vector<Time>> duration;  // duration[job-1][bath-1], >= 1
  Time deadline = 0;                        // inclusive finish bound
  Time delay_cap = 2;                       // max water -> chemical delay
  bool strict_local_storage = true;         // enforce busy-successor cover

  Time duration_of(int job, int bath) const {
    return duration[static_cast<std::size_t>(job - 1)]
                   [static_cast<std::size_t>(bath - 1)];
  }

  bool operator==(const Instance&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chemical iff the (1-based) bath index is odd.
// Throws std::out_of_range for bath outside 1..m.
BathKind bath_kind(const Instance& inst, int bath);

// Checks every instance invariant; throws ValidationError naming the first
// violated one. A job with total processing lambda needs
// deadline >= lambda + 1, because the earliest start is 1.
void validate(const Instance& inst);

// Line-oriented instance format:
//
//   baths <m>
//   jobs <n>
//   deadline <D>
//   d <j>: <t_1> ... <t_m>     (one line per job)
//   delay_cap <c>              (optional, default 2)
//   strict_ls <on|off>         (optional, default on)
//
// '#' starts a comment. With scale10 = true, duration and deadline tokens may
// carry one decimal digit and are multiplied by ten; delay_cap is always
// taken verbatim (the default cap of 2 already lives in the scaled domain).
Instance parse_instance(const std::string& text, bool scale10 = false);

// Canonical rendering; parse_instance(render_instance(i)) == i.
std::string render_instance(const Instance& inst);

// Multiplies a decimal token by ten, exactly. "1.8" -> 18, "3" -> 30.
// Throws ValidationError for two or more fractional digits (lossy),
// ParseError for malformed tokens.
Time scale_decimal(const std::string& token);

struct ScaledInstanceData {
  std::vector<std::vector<Time>> duration;
  Time deadline = 0;
};

// Applies scale_decimal to a whole raw duration matrix plus deadline.
ScaledInstanceData scale_durations(
    const std::vector<std::vector<std::string>>& raw_durations,
    const std::string& raw_deadline);

}  // namespace nwfs
