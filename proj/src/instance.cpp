#include "nwfs/instance.hpp"

#include <cctype>
#include <sstream>

namespace nwfs {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Time parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + tok + "'", line);
  }
  if (pos != tok.size())
    throw ParseError("expected integer, got '" + tok + "'", line);
  return v;
}

// Duration/deadline token: plain integer, or one-decimal value under scale10.
Time parse_time(const std::string& tok, bool scale10, int line) {
  if (!scale10) return parse_int(tok, line);
  try {
    return scale_decimal(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

BathKind bath_kind(const Instance& inst, int bath) {
  if (bath < 1 || bath > inst.num_baths)
    throw std::out_of_range("bath index " + std::to_string(bath) +
                            " outside 1.." + std::to_string(inst.num_baths));
  return (bath % 2 != 0) ? BathKind::Chemical : BathKind::Water;
}

void validate(const Instance& inst) {
  if (inst.num_baths < 1)
    throw ValidationError("num_baths must be >= 1");
  if (inst.num_jobs < 1)
    throw ValidationError("num_jobs must be >= 1");
  if (static_cast<int>(inst.duration.size()) != inst.num_jobs)
    throw ValidationError("duration matrix has " +
                          std::to_string(inst.duration.size()) +
                          " rows, expected " + std::to_string(inst.num_jobs));
  if (inst.deadline < 1)
    throw ValidationError("deadline must be >= 1");
  if (inst.delay_cap < 0)
    throw ValidationError("delay_cap must be >= 0");
  for (int j = 1; j <= inst.num_jobs; ++j) {
    const auto& row = inst.duration[static_cast<std::size_t>(j - 1)];
    if (static_cast<int>(row.size()) != inst.num_baths)
      throw ValidationError("job " + std::to_string(j) + " has " +
                            std::to_string(row.size()) +
                            " durations, expected " +
                            std::to_string(inst.num_baths));
    Time lambda = 0;
    for (int b = 1; b <= inst.num_baths; ++b) {
      Time t = row[static_cast<std::size_t>(b - 1)];
      if (t < 1)
        throw ValidationError("duration of job " + std::to_string(j) +
                              " in bath " + std::to_string(b) +
                              " must be >= 1");
      lambda += t;
    }
    // Earliest start is 1 and finish = start + lambda must stay <= deadline.
    if (inst.deadline < lambda + 1)
      throw ValidationError("infeasible: job " + std::to_string(j) +
                            " needs deadline >= " + std::to_string(lambda + 1) +
                            ", got " + std::to_string(inst.deadline));
  }
}

Instance parse_instance(const std::string& text, bool scale10) {
  Instance inst;
  bool saw_baths = false, saw_jobs = false, saw_deadline = false;
  std::vector<bool> row_seen;

  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    if (auto hash = raw_line.find('#'); hash != std::string::npos)
      raw_line.erase(hash);
    auto toks = split_ws(raw_line);
    if (toks.empty()) continue;

    const std::string& key = toks[0];
    if (key == "baths" || key == "jobs" || key == "deadline" ||
        key == "delay_cap" || key == "strict_ls") {
      if (toks.size() != 2)
        throw ParseError("'" + key + "' takes exactly one value", line_no);
      if (key == "baths") {
        if (saw_baths) throw ParseError("duplicate 'baths'", line_no);
        inst.num_baths = static_cast<int>(parse_int(toks[1], line_no));
        saw_baths = true;
      } else if (key == "jobs") {
        if (saw_jobs) throw ParseError("duplicate 'jobs'", line_no);
        inst.num_jobs = static_cast<int>(parse_int(toks[1], line_no));
        saw_jobs = true;
      } else if (key == "deadline") {
        if (saw_deadline) throw ParseError("duplicate 'deadline'", line_no);
        inst.deadline = parse_time(toks[1], scale10, line_no);
        saw_deadline = true;
      } else if (key == "delay_cap") {
        inst.delay_cap = parse_int(toks[1], line_no);
      } else {
        if (toks[1] == "on")
          inst.strict_local_storage = true;
        else if (toks[1] == "off")
          inst.strict_local_storage = false;
        else
          throw ParseError("strict_ls must be 'on' or 'off'", line_no);
      }
    } else if (key == "d") {
      if (!saw_baths || !saw_jobs)
        throw ParseError("duration row before 'baths'/'jobs'", line_no);
      if (inst.num_baths < 1 || inst.num_jobs < 1)
        throw ParseError("duration row with non-positive dimensions", line_no);
      if (row_seen.empty()) {
        row_seen.assign(static_cast<std::size_t>(inst.num_jobs), false);
        inst.duration.assign(static_cast<std::size_t>(inst.num_jobs), {});
      }
      if (toks.size() < 2)
        throw ParseError("'d' line needs a job index", line_no);
      std::string jtok = toks[1];
      std::size_t first_val = 2;
      if (!jtok.empty() && jtok.back() == ':') {
        jtok.pop_back();
      } else if (toks.size() > 2 && toks[2] == ":") {
        first_val = 3;
      } else {
        throw ParseError("expected 'd <j>: <durations>'", line_no);
      }
      int j = static_cast<int>(parse_int(jtok, line_no));
      if (j < 1 || j > inst.num_jobs)
        throw ParseError("job index " + std::to_string(j) + " outside 1.." +
                             std::to_string(inst.num_jobs),
                         line_no);
      if (row_seen[static_cast<std::size_t>(j - 1)])
        throw ParseError("duplicate duration row for job " + std::to_string(j),
                         line_no);
      std::size_t count = toks.size() - first_val;
      if (count != static_cast<std::size_t>(inst.num_baths))
        throw ParseError("job " + std::to_string(j) + " row has " +
                             std::to_string(count) + " durations, expected " +
                             std::to_string(inst.num_baths),
                         line_no);
      std::vector<Time> row;
      row.reserve(count);
      for (std::size_t i = first_val; i < toks.size(); ++i)
        row.push_back(parse_time(toks[i], scale10, line_no));
      inst.duration[static_cast<std::size_t>(j - 1)] = std::move(row);
      row_seen[static_cast<std::size_t>(j - 1)] = true;
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no);
    }
  }

  if (!saw_baths) throw ParseError("missing 'baths'", line_no);
  if (!saw_jobs) throw ParseError("missing 'jobs'", line_no);
  if (!saw_deadline) throw ParseError("missing 'deadline'", line_no);
  for (int j = 1; j <= inst.num_jobs; ++j)
    if (row_seen.empty() || !row_seen[static_cast<std::size_t>(j - 1)])
      throw ParseError("missing duration row for job " + std::to_string(j),
                       line_no);

  validate(inst);
  return inst;
}

std::string render_instance(const Instance& inst) {
  std::ostringstream out;
  out << "baths " << inst.num_baths << "\n";
  out << "jobs " << inst.num_jobs << "\n";
  out << "deadline " << inst.deadline << "\n";
  if (inst.delay_cap != 2) out << "delay_cap " << inst.delay_cap << "\n";
  if (!inst.strict_local_storage) out << "strict_ls off\n";
  for (int j = 1; j <= inst.num_jobs; ++j) {
    out << "d " << j << ":";
    for (int b = 1; b <= inst.num_baths; ++b)
      out << " " << inst.duration_of(j, b);
    out << "\n";
  }
  return out.str();
}

Time scale_decimal(const std::string& token) {
  std::size_t dot = token.find('.');
  std::string int_part = (dot == std::string::npos) ? token : token.substr(0, dot);
  std::string frac_part =
      (dot == std::string::npos) ? std::string() : token.substr(dot + 1);
  if (int_part.empty())
    throw ParseError("malformed decimal '" + token + "'", 0);
  for (char c : int_part)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed decimal '" + token + "'", 0);
  for (char c : frac_part)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed decimal '" + token + "'", 0);
  if (dot != std::string::npos && frac_part.empty())
    throw ParseError("malformed decimal '" + token + "'", 0);
  if (frac_part.size() >= 2)
    throw ValidationError("value '" + token +
                          "' has more than one fractional digit; x10 scaling "
                          "would be lossy");
  long long whole = 0;
  try {
    whole = std::stoll(int_part);
  } catch (const std::exception&) {
    throw ParseError("decimal out of range '" + token + "'", 0);
  }
  long long frac = frac_part.empty() ? 0 : (frac_part[0] - '0');
  return whole * 10 + frac;
}

ScaledInstanceData scale_durations(
    const std::vector<std::vector<std::string>>& raw_durations,
    const std::string& raw_deadline) {
  ScaledInstanceData out;
  out.duration.reserve(raw_durations.size());
  for (const auto& row : raw_durations) {
    std::vector<Time> scaled;
    scaled.reserve(row.size());
    for (const auto& tok : row) scaled.push_back(scale_decimal(tok));
    out.duration.push_back(std::move(scaled));
  }
  out.deadline = scale_decimal(raw_deadline);
  return out;
}

}  // namespace nwfs
