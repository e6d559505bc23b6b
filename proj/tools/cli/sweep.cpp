#include "cli/sweep.hpp"

#include "cli/render.hpp"
#include "sumrules/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace sumrules::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

long long parse_integer(std::string_view s, std::string_view context) {
  long long value = 0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("range: bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return value;
}

BoundExpr parse_bound(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.starts_with("to:")) s = trim(s.substr(3));
  if (s.empty()) throw UsageError("range: empty bound in '" + std::string(context) + "'");
  BoundExpr out;
  if (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' || s[0] == '+') {
    out.offset = parse_integer(s, context);
    return out;
  }
  const auto op = s.find_first_of("+-");
  const std::string_view name = trim(s.substr(0, op));
  if (!is_identifier(name)) throw UsageError("range: bad bound '" + std::string(s) + "'");
  out.param = std::string(name);
  if (op != std::string_view::npos) {
    const long long magnitude = parse_integer(trim(s.substr(op + 1)), context);
    out.offset = s[op] == '-' ? -magnitude : magnitude;
  }
  return out;
}

void expand_into(const std::vector<ParamRange>& ranges, std::size_t depth, Params& current,
                 std::vector<Params>& out, std::size_t max_points) {
  if (depth == ranges.size()) {
    if (out.size() >= max_points)
      throw ResourceLimitError("sweep exceeds " + std::to_string(max_points) + " parameter points");
    out.push_back(current);
    return;
  }
  const ParamRange& range = ranges[depth];
  std::set<long long> values;
  for (const auto& [lo_expr, hi_expr] : range.segments) {
    const long long lo = lo_expr.resolve(current);
    const long long hi = hi_expr.resolve(current);
    if (hi >= lo && static_cast<unsigned long long>(hi - lo) >= max_points)
      throw ResourceLimitError("range for '" + range.name + "' is too large");
    for (long long v = lo; v <= hi; ++v) values.insert(v);
  }
  for (long long v : values) {
    current[range.name] = v;
    expand_into(ranges, depth + 1, current, out, max_points);
  }
  current.erase(range.name);
}

}  // namespace

long long BoundExpr::resolve(const Params& outer) const {
  if (!param) return offset;
  return outer.at(*param) + offset;
}

std::vector<ParamRange> parse_ranges(std::string_view text) {
  std::vector<ParamRange> ranges;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (item.empty()) throw UsageError("range: empty item in '" + std::string(text) + "'");

    std::string_view body = item;
    const auto eq = item.find('=');
    if (eq != std::string_view::npos) {
      const std::string name(trim(item.substr(0, eq)));
      if (!is_identifier(name)) throw UsageError("range: bad parameter name '" + name + "'");
      for (const auto& r : ranges)
        if (r.name == name) throw UsageError("range: parameter '" + name + "' given twice");
      ranges.push_back({name, {}});
      body = item.substr(eq + 1);
    } else if (ranges.empty()) {
      throw UsageError("range: '" + std::string(item) + "' does not name a parameter");
    }

    const auto dots = body.find("..");
    BoundExpr lo = parse_bound(dots == std::string_view::npos ? body : body.substr(0, dots), item);
    BoundExpr hi = dots == std::string_view::npos ? lo : parse_bound(body.substr(dots + 2), item);
    ranges.back().segments.emplace_back(std::move(lo), std::move(hi));
  }

  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (const auto& [lo, hi] : ranges[i].segments) {
      for (const BoundExpr* b : {&lo, &hi}) {
        if (!b->param) continue;
        const bool earlier = std::any_of(ranges.begin(), ranges.begin() + static_cast<long>(i),
                                         [&](const ParamRange& r) { return r.name == *b->param; });
        if (!earlier)
          throw UsageError("range: bound of '" + ranges[i].name + "' refers to '" + *b->param +
                           "', which is not an earlier parameter");
      }
      if (!lo.param && !hi.param && lo.offset > hi.offset)
        throw UsageError("range: empty range for '" + ranges[i].name + "'");
    }
  }
  return ranges;
}

std::vector<Params> expand(const std::vector<ParamRange>& ranges, std::size_t max_points) {
  std::vector<Params> out;
  Params current;
  expand_into(ranges, 0, current, out, max_points);
  return out;
}

void validate(const SweepSpec& spec) {
  const auto names = required_params(spec.id);
  for (auto name : names) {
    const bool present =
        std::any_of(spec.ranges.begin(), spec.ranges.end(), [&](const ParamRange& r) { return r.name == name; });
    if (!present)
      throw UsageError(std::string(to_string(spec.id)) + ": range for parameter '" + std::string(name) + "' missing");
  }
  for (const auto& r : spec.ranges) {
    if (std::find(names.begin(), names.end(), r.name) == names.end())
      throw UsageError(std::string(to_string(spec.id)) + ": unknown parameter '" + r.name + "'");
  }
  if (spec.parallelism == 0) throw UsageError("parallelism must be at least 1");
}

long long parameter_cap(IdentityId id) {
  switch (id) {
    case IdentityId::NestedSchlomilch:
    case IdentityId::NormalizedNested:
      return 16;
    case IdentityId::BinomialSumRule:
    case IdentityId::BellDouble:
    case IdentityId::BellBinomial:
    case IdentityId::DobinskiFinite:
      return 200;
    default:
      return 1000;
  }
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Params> points;
  std::size_t skipped = 0;
  const long long cap = parameter_cap(spec.id);
  for (auto& p : expand(spec.ranges)) {
    for (const auto& [name, value] : p) {
      if (value > cap || value < -cap)
        throw ResourceLimitError(std::string(to_string(spec.id)) + ": " + name + "=" + std::to_string(value) +
                                 " exceeds the cap " + std::to_string(cap));
    }
    if (admissible(spec.id, p)) points.push_back(std::move(p));
    else ++skipped;
  }
  if (points.empty()) throw UsageError(std::string(to_string(spec.id)) + ": no admissible parameter points in range");

  std::vector<std::optional<IdentityReport>> slots(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        slots[i] = verify_identity(spec.id, spec.mode, points[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    const unsigned workers = std::min<std::size_t>(spec.parallelism, points.size());
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  SweepResult result;
  result.reports.reserve(points.size());
  for (auto& slot : slots) {
    IdentityReport& rep = result.reports.emplace_back(std::move(*slot));
    ++result.summary.total;
    if (rep.passed()) {
      ++result.summary.passes;
    } else {
      ++result.summary.failures;
      if (!result.summary.first_failure) result.summary.first_failure = to_json(rep);
    }
  }
  result.summary.skipped = skipped;
  result.summary.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace sumrules::cli
