#include "nwfs/ranges.hpp"

#include <cctype>
#include <stdexcept>

namespace nwfs {

namespace {

void check_job(const Instance& inst, int job) {
  if (job < 1 || job > inst.num_jobs)
    throw std::out_of_range("job index " + std::to_string(job) +
                            " outside 1.." + std::to_string(inst.num_jobs));
}

void check_bath(const Instance& inst, int bath) {
  if (bath < 1 || bath > inst.num_baths)
    throw std::out_of_range("bath index " + std::to_string(bath) +
                            " outside 1.." + std::to_string(inst.num_baths));
}

}  // namespace

Time total_processing(const Instance& inst, int job) {
  check_job(inst, job);
  Time sum = 0;
  for (int b = 1; b <= inst.num_baths; ++b) sum += inst.duration_of(job, b);
  return sum;
}

Time max_delay(const Instance& inst, int job) {
  Time lambda = total_processing(inst, job);
  Time chi = inst.deadline - lambda;
  if (chi < 1)
    throw ValidationError("infeasible: job " + std::to_string(job) +
                          " has lambda=" + std::to_string(lambda) +
                          " but deadline=" + std::to_string(inst.deadline) +
                          " (needs deadline >= lambda + 1)");
  return chi;
}

JobSlack job_slack(const Instance& inst, int job) {
  JobSlack s;
  s.job = job;
  s.lambda = total_processing(inst, job);
  s.chi = max_delay(inst, job);
  return s;
}

Time prefix_processing(const Instance& inst, int job, int bath,
                       PrefixMode mode) {
  check_job(inst, job);
  check_bath(inst, bath);
  int last = (mode == PrefixMode::Exclusive) ? bath - 1 : bath;
  Time sum = 0;
  for (int b = 1; b <= last; ++b) sum += inst.duration_of(job, b);
  return sum;
}

StartRange start_range(const Instance& inst, int job, int bath,
                       PrefixMode mode) {
  Time chi = max_delay(inst, job);
  Time rho = prefix_processing(inst, job, bath, mode);
  StartRange r;
  r.job = job;
  r.bath = bath;
  r.upper = chi + rho;
  r.lower = r.upper - chi + 1;
  return r;
}

std::vector<std::vector<StartRange>> all_start_ranges(const Instance& inst,
                                                      PrefixMode mode) {
  std::vector<std::vector<StartRange>> out(
      static_cast<std::size_t>(inst.num_jobs));
  for (int j = 1; j <= inst.num_jobs; ++j) {
    auto& row = out[static_cast<std::size_t>(j - 1)];
    row.reserve(static_cast<std::size_t>(inst.num_baths));
    for (int b = 1; b <= inst.num_baths; ++b)
      row.push_back(start_range(inst, j, b, mode));
  }
  return out;
}

BigInt count_full_combinations(int num_baths, int num_jobs, Time deadline) {
  if (num_baths < 1 || num_jobs < 1 || deadline < 1)
    throw std::invalid_argument("count_full_combinations needs arguments >= 1");
  return boost::multiprecision::pow(
      BigInt(deadline), static_cast<unsigned>(num_baths) *
                            static_cast<unsigned>(num_jobs));
}

BigInt count_range_combinations(const Instance& inst) {
  BigInt product = 1;
  for (int j = 1; j <= inst.num_jobs; ++j) {
    Time chi = max_delay(inst, j);
    product *= boost::multiprecision::pow(
        BigInt(chi), static_cast<unsigned>(inst.num_baths));
  }
  return product;
}

double reduction_percent(const BigInt& full, const BigInt& ranged) {
  if (ranged <= 0 || full <= 0 || ranged > full)
    throw std::logic_error("reduction_percent needs 0 < ranged <= full");
  // Round 1000 * (full - ranged) / full half-up, then shift to one decimal.
  BigInt tenths = (BigInt(2000) * (full - ranged) + full) / (BigInt(2) * full);
  return static_cast<double>(tenths.convert_to<long long>()) / 10.0;
}

DomainCount domain_count(const Instance& inst) {
  DomainCount d;
  d.full = count_full_combinations(inst.num_baths, inst.num_jobs,
                                   inst.deadline);
  d.ranged = count_range_combinations(inst);
  d.reduction_percent = reduction_percent(d.full, d.ranged);
  return d;
}

std::string to_scientific(const BigInt& value, int significant_digits) {
  if (significant_digits < 1)
    throw std::invalid_argument("significant_digits must be >= 1");
  if (value < 0)
    return "-" + to_scientific(-value, significant_digits);
  std::string digits = value.str();
  if (value == 0) digits = "0";
  int exponent = static_cast<int>(digits.size()) - 1;
  std::size_t keep = static_cast<std::size_t>(significant_digits);
  std::string mant = digits.substr(0, keep);
  while (mant.size() < keep) mant.push_back('0');
  // Round half-up on the first dropped digit; the carry can lengthen the
  // mantissa ("99999..." -> "10000" with exponent + 1).
  if (digits.size() > keep && digits[keep] >= '5') {
    int i = static_cast<int>(mant.size()) - 1;
    while (i >= 0) {
      if (mant[static_cast<std::size_t>(i)] != '9') {
        ++mant[static_cast<std::size_t>(i)];
        break;
      }
      mant[static_cast<std::size_t>(i)] = '0';
      --i;
    }
    if (i < 0) {
      mant.insert(mant.begin(), '1');
      mant.pop_back();
      ++exponent;
    }
  }
  std::string out;
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  out += "e+" + std::to_string(exponent);
  return out;
}

BigInt parse_scientific(const std::string& text) {
  std::string mantissa = text;
  long long exponent = 0;
  std::size_t e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mantissa = text.substr(0, e);
    std::string etok = text.substr(e + 1);
    if (!etok.empty() && etok[0] == '+') etok.erase(0, 1);
    try {
      std::size_t pos = 0;
      exponent = std::stoll(etok, &pos);
      if (pos != etok.size()) throw std::invalid_argument(etok);
    } catch (const std::exception&) {
      throw ValidationError("malformed exponent in '" + text + "'");
    }
  }
  std::string digits;
  long long frac_digits = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) throw ValidationError("malformed number '" + text + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      throw ValidationError("malformed number '" + text + "'");
    }
  }
  if (digits.empty()) throw ValidationError("malformed number '" + text + "'");
  BigInt v(digits);
  long long shift = exponent - frac_digits;
  if (shift >= 0)
    return v * boost::multiprecision::pow(BigInt(10),
                                          static_cast<unsigned>(shift));
  BigInt divisor = boost::multiprecision::pow(
      BigInt(10), static_cast<unsigned>(-shift));
  if (v % divisor != 0)
    throw ValidationError("'" + text + "' is not an integer");
  return v / divisor;
}

}  // namespace nwfs
