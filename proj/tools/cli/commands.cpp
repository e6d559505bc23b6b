#include "cli/commands.hpp"

#include "cli/bfile.hpp"
#include "cli/sweep.hpp"
#include "sumrules/combinat.hpp"
#include "sumrules/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>

namespace sumrules::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit_summary(const RunSummary& summary, Format format, std::ostream& out, std::ostream& err) {
  switch (format) {
    case Format::Plain:
      out << plain_line(summary) << '\n';
      break;
    case Format::Json:
      out << to_json(summary).dump() << '\n';
      break;
    case Format::Csv:
      // Keep stdout a single well-formed table.
      err << plain_line(summary) << '\n';
      break;
  }
}

void tally(RunSummary& summary, bool passed, const std::function<Json()>& describe) {
  ++summary.total;
  if (passed) {
    ++summary.passes;
    return;
  }
  ++summary.failures;
  if (!summary.first_failure) summary.first_failure = describe();
}

Json strings(const std::vector<Int>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

std::string joined(const std::vector<Int>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += to_decimal(v);
  }
  return out;
}

// Expected histogram for an oracle statistic, indexed like StatRow::counts.
std::vector<Int> closed_form(StatisticId stat, unsigned n, std::optional<unsigned> q, std::size_t size) {
  std::vector<Int> expected(size);
  for (std::size_t k = 0; k < size; ++k) {
    const auto kk = static_cast<unsigned>(k);
    switch (stat) {
      case StatisticId::FixedPoints:
        expected[k] = rencontres(n, kk);
        break;
      case StatisticId::Cycles:
        expected[k] = abs(stirling1_signed(n, kk));
        break;
      case StatisticId::PartitionBlocks:
        expected[k] = stirling2(n, kk);
        break;
      case StatisticId::Ascents:
        expected[k] = n == 0 ? Int(1) : eulerian(n, kk);
        break;
      case StatisticId::MarkedTuples:
        expected[k] = bell(*q) * factorial(n);
        break;
    }
  }
  return expected;
}

}  // namespace

int run_seq(const SeqOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto id = parse_sequence(opts.name);
    if (!id) throw UsageError("unknown sequence '" + opts.name + "'");
    if (opts.k && !is_triangle(*id)) throw UsageError(std::string(to_string(*id)) + " takes no --k");
    if (opts.n > sequence_cap(*id))
      throw ResourceLimitError(std::string(to_string(*id)) + ": n above the cap " + std::to_string(sequence_cap(*id)));

    const std::string name(to_string(*id));
    if (opts.k || !is_triangle(*id)) {
      const Int value = sequence_value(*id, opts.n, opts.k.value_or(0));
      switch (opts.format) {
        case Format::Plain:
          out << to_decimal(value) << '\n';
          break;
        case Format::Csv:
          out << (opts.k ? "n,k,value\n" : "n,value\n") << opts.n << ',';
          if (opts.k) out << *opts.k << ',';
          out << to_decimal(value) << '\n';
          break;
        case Format::Json: {
          Json j;
          j["sequence"] = name;
          j["n"] = opts.n;
          if (opts.k) j["k"] = *opts.k;
          j["value"] = to_decimal(value);
          out << j.dump() << '\n';
          break;
        }
      }
      return kOk;
    }

    const auto row = sequence_row(*id, opts.n);
    switch (opts.format) {
      case Format::Plain:
        out << joined(row) << '\n';
        break;
      case Format::Csv:
        out << "k,value\n";
        for (std::size_t k = 0; k < row.size(); ++k) out << k << ',' << to_decimal(row[k]) << '\n';
        break;
      case Format::Json: {
        Json j;
        j["sequence"] = name;
        j["n"] = opts.n;
        j["row"] = strings(row);
        out << j.dump() << '\n';
        break;
      }
    }
    return kOk;
  });
}

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    SweepSpec spec;
    const auto id = parse_identity(opts.identity);
    if (!id) throw UsageError("unknown identity '" + opts.identity + "'");
    const auto mode = parse_mode(opts.mode);
    if (!mode) throw UsageError("unknown mode '" + opts.mode + "' (expected as-written or corrected)");
    spec.id = *id;
    spec.mode = *mode;
    spec.ranges = parse_ranges(opts.range);
    spec.parallelism = opts.parallel;

    const SweepResult result = run_sweep(spec);
    if (opts.format == Format::Csv) out << csv_header_identity() << '\n';
    for (const auto& rep : result.reports) {
      switch (opts.format) {
        case Format::Plain:
          out << plain_line(rep) << '\n';
          break;
        case Format::Json:
          out << to_json(rep).dump() << '\n';
          break;
        case Format::Csv:
          out << csv_line(rep) << '\n';
          break;
      }
    }
    emit_summary(result.summary, opts.format, out, err);
    return result.summary.exit_code();
  });
}

int run_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto start = Clock::now();
    const auto stat = parse_statistic(opts.statistic);
    if (!stat) throw UsageError("unknown statistic '" + opts.statistic + "'");
    EnumerationLimits limits;
    if (opts.ceiling) limits.permutation_ceiling = limits.partition_ceiling = *opts.ceiling;
    const StatRow row = enumerate_statistic(*stat, opts.n, opts.q, limits, std::max(1u, opts.parallel));

    std::vector<Int> expected;
    RunSummary summary;
    if (opts.compare) {
      expected = closed_form(*stat, opts.n, opts.q, row.counts.size());
      for (std::size_t k = 0; k < row.counts.size(); ++k) {
        tally(summary, row.counts[k] == expected[k], [&] {
          return Json{{"statistic", std::string(to_string(*stat))}, {"n", opts.n}, {"value", k},
                      {"enumerated", to_decimal(row.counts[k])}, {"closed_form", to_decimal(expected[k])}};
        });
      }
      if (*stat == StatisticId::PartitionBlocks) {
        tally(summary, row.total() == bell(opts.n), [&] {
          return Json{{"statistic", "PARTITION_BLOCKS"}, {"n", opts.n}, {"value", "total"},
                      {"enumerated", to_decimal(row.total())}, {"closed_form", to_decimal(bell(opts.n))}};
        });
      }
      summary.wall_ms = ms_since(start);
    }

    switch (opts.format) {
      case Format::Plain:
        out << joined(row.counts) << '\n';
        break;
      case Format::Csv:
        out << (opts.compare ? "value,count,closed_form\n" : "value,count\n");
        for (std::size_t k = 0; k < row.counts.size(); ++k) {
          out << k << ',' << to_decimal(row.counts[k]);
          if (opts.compare) out << ',' << to_decimal(expected[k]);
          out << '\n';
        }
        break;
      case Format::Json: {
        Json j;
        j["statistic"] = std::string(to_string(*stat));
        j["n"] = opts.n;
        if (row.q) j["q"] = *row.q;
        j["counts"] = strings(row.counts);
        if (opts.compare) j["closed_form"] = strings(expected);
        out << j.dump() << '\n';
        break;
      }
    }
    if (!opts.compare) return kOk;
    emit_summary(summary, opts.format, out, err);
    return summary.exit_code();
  });
}

int run_bounds(const BoundsOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto start = Clock::now();
    auto ranges = parse_ranges(opts.range);
    auto has = [&](std::string_view name) {
      return std::any_of(ranges.begin(), ranges.end(), [&](const ParamRange& r) { return r.name == name; });
    };
    auto require_exactly = [&](std::initializer_list<std::string_view> names) {
      for (auto name : names)
        if (!has(name)) throw UsageError("bounds " + opts.which + ": range for '" + std::string(name) + "' missing");
      for (const auto& r : ranges)
        if (std::find(names.begin(), names.end(), r.name) == names.end())
          throw UsageError("bounds " + opts.which + ": unknown parameter '" + r.name + "'");
    };
    auto cap_all = [&](const std::vector<Params>& points, long long cap) {
      for (const auto& p : points)
        for (const auto& [name, value] : p)
          if (value > cap) throw ResourceLimitError(name + "=" + std::to_string(value) + " exceeds the cap " + std::to_string(cap));
    };
    auto as_unsigned = [](long long v, const char* name) {
      if (v < 0) throw DomainError(std::string(name) + " must be nonnegative");
      return static_cast<unsigned>(v);
    };

    RunSummary summary;
    if (opts.format == Format::Csv && opts.which != "asymptotics") out << csv_header_bound() << '\n';

    auto emit_bound = [&](const BoundReport& rep) {
      tally(summary, rep.satisfied, [&] { return to_json(rep); });
      switch (opts.format) {
        case Format::Plain:
          out << plain_line(rep) << '\n';
          break;
        case Format::Json:
          out << to_json(rep).dump() << '\n';
          break;
        case Format::Csv:
          out << csv_line(rep) << '\n';
          break;
      }
    };

    if (opts.which == "adell") {
      if (!has("m")) ranges.push_back({"m", {{BoundExpr{}, BoundExpr{"n", 0}}}});
      require_exactly({"n", "m"});
      const auto points = expand(ranges, 100'000);
      cap_all(points, 300);
      for (const auto& p : points) emit_bound(check_adell(as_unsigned(p.at("n"), "n"), as_unsigned(p.at("m"), "m")));
    } else if (opts.which == "lambda") {
      require_exactly({"n", "r"});
      const auto points = expand(ranges, 100'000);
      cap_all(points, 60);
      for (const auto& p : points)
        emit_bound(check_lambda_sandwich(as_unsigned(p.at("n"), "n"), as_unsigned(p.at("r"), "r")));
    } else if (opts.which == "berend-tal") {
      require_exactly({"n"});
      const auto points = expand(ranges, 100'000);
      cap_all(points, 300);
      for (const auto& p : points) emit_bound(check_berend_tal(as_unsigned(p.at("n"), "n")));
    } else if (opts.which == "asymptotics") {
      require_exactly({"n"});
      const auto points = expand(ranges, 100'000);
      cap_all(points, 300);
      if (opts.format == Format::Csv)
        out << "n,log_exact,log_de_bruijn,log_odlyzko,rel_err_de_bruijn,rel_err_odlyzko\n";
      std::vector<BellAsymptotics> rows;
      for (const auto& p : points) {
        const BellAsymptotics a = bell_asymptotics(as_unsigned(p.at("n"), "n"));
        rows.push_back(a);
        using boost::multiprecision::isfinite;
        const bool finite = isfinite(a.exact) && isfinite(a.de_bruijn) && isfinite(a.odlyzko);
        Json j{{"n", a.n},
               {"log_exact", to_double17(a.exact)},
               {"log_de_bruijn", to_double17(a.de_bruijn)},
               {"log_odlyzko", to_double17(a.odlyzko)},
               {"rel_err_de_bruijn", to_double17(a.de_bruijn_error())},
               {"rel_err_odlyzko", to_double17(a.odlyzko_error())}};
        tally(summary, finite, [&] { return j; });
        switch (opts.format) {
          case Format::Plain:
            out << "asymptotics n=" << a.n << " log_exact=" << format17(a.exact)
                << " log_de_bruijn=" << format17(a.de_bruijn) << " log_odlyzko=" << format17(a.odlyzko)
                << " rel_err_de_bruijn=" << format17(a.de_bruijn_error())
                << " rel_err_odlyzko=" << format17(a.odlyzko_error()) << '\n';
            break;
          case Format::Json:
            out << Json{{"asymptotics", j}}.dump() << '\n';
            break;
          case Format::Csv:
            out << a.n << ',' << format17(a.exact) << ',' << format17(a.de_bruijn) << ',' << format17(a.odlyzko) << ','
                << format17(a.de_bruijn_error()) << ',' << format17(a.odlyzko_error()) << '\n';
            break;
        }
      }
      // Points arrive in increasing n; errors must strictly decrease along them.
      for (const char* form : {"de_bruijn", "odlyzko"}) {
        bool monotone = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
          const bool db = std::string_view(form) == "de_bruijn";
          const Real prev = db ? rows[i - 1].de_bruijn_error() : rows[i - 1].odlyzko_error();
          const Real cur = db ? rows[i].de_bruijn_error() : rows[i].odlyzko_error();
          monotone = monotone && cur < prev;
        }
        Json j{{"form", form}, {"monotone_decreasing", monotone}};
        tally(summary, monotone, [&] { return j; });
        if (opts.format == Format::Plain)
          out << "trend " << form << " monotone_decreasing " << (monotone ? "PASS" : "FAIL") << '\n';
        else if (opts.format == Format::Json)
          out << Json{{"trend", j}}.dump() << '\n';
        else
          err << "trend " << form << " monotone_decreasing " << (monotone ? "PASS" : "FAIL") << '\n';
      }
    } else {
      throw UsageError("unknown bound '" + opts.which + "' (expected adell, lambda, berend-tal or asymptotics)");
    }
    summary.wall_ms = ms_since(start);
    emit_summary(summary, opts.format, out, err);
    return summary.exit_code();
  });
}

int run_ingest_bfile(const IngestOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto start = Clock::now();
    const auto id = parse_sequence(opts.sequence);
    if (!id) throw UsageError("unknown sequence '" + opts.sequence + "'");
    std::ifstream in(opts.path);
    if (!in) throw UsageError("cannot open b-file '" + opts.path + "'");
    const BFile file = parse_bfile(in);

    if (!opts.check) {
      if (opts.format == Format::Json)
        out << Json{{"path", opts.path}, {"entries", file.entries.size()}}.dump() << '\n';
      else
        out << "parsed " << file.entries.size() << " entries\n";
      return kOk;
    }

    RunSummary summary;
    if (opts.format == Format::Csv) out << "index,expected,found\n";
    for (const auto& entry : file.entries) {
      const std::optional<Int> expected = bfile_term(*id, entry.index);
      const bool ok = expected && *expected == entry.value;
      const std::string expected_text = expected ? to_decimal(*expected) : "undefined";
      Json j{{"index", entry.index}, {"expected", expected_text}, {"found", to_decimal(entry.value)}};
      tally(summary, ok, [&] { return j; });
      if (ok) continue;
      switch (opts.format) {
        case Format::Plain:
          out << "mismatch index=" << entry.index << " expected=" << expected_text
              << " found=" << to_decimal(entry.value) << '\n';
          break;
        case Format::Json:
          out << Json{{"mismatch", j}}.dump() << '\n';
          break;
        case Format::Csv:
          out << entry.index << ',' << expected_text << ',' << to_decimal(entry.value) << '\n';
          break;
      }
    }
    summary.wall_ms = ms_since(start);
    emit_summary(summary, opts.format, out, err);
    return summary.exit_code();
  });
}

}  // namespace sumrules::cli
