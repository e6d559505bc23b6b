#include "cli/bfile.hpp"
#include "cli/commands.hpp"
#include "cli/render.hpp"
#include "cli/sweep.hpp"
#include "run_tool.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace sumrules;
using namespace sumrules::cli;
using sumrules::testing::run_tool;
using sumrules::testing::write_temp;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

Json strip_timing(Json j) {
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST(Ranges, DependentUpperBound) {
  const auto points = expand(parse_ranges("n=1..10,r=0..n-1"));
  ASSERT_EQ(points.size(), 55u);
  EXPECT_EQ(points.front(), (Params{{"n", 1}, {"r", 0}}));
  EXPECT_EQ(points.back(), (Params{{"n", 10}, {"r", 9}}));
}

TEST(Ranges, SignedAndListForms) {
  EXPECT_EQ(expand(parse_ranges("n=1..12,r=-1..n-1")).size(), 90u);
  const auto list = expand(parse_ranges("n=200,10,100,50"));
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[0].at("n"), 10);
  EXPECT_EQ(list[3].at("n"), 200);
}

TEST(Ranges, RejectsMalformed) {
  for (const char* bad : {"", "n", "n=", "n=1..", "n=a..3", "n=1..3,n=2..4", "r=0..n,n=1..3", "n=5..1", "n=1..3,,"})
    EXPECT_THROW(parse_ranges(bad), UsageError) << bad;
}

TEST(Ranges, PointCap) {
  EXPECT_THROW(expand(parse_ranges("a=0..999,b=0..999,c=0..9"), 1'000'000), ResourceLimitError);
}

TEST(BFile, ParsesCommentsAndBlankLines) {
  std::istringstream in("# derangements\n\n0 1\r\n1 0\n2 1\n3 2\n4 9\n");
  const BFile file = parse_bfile(in);
  ASSERT_EQ(file.entries.size(), 5u);
  EXPECT_EQ(file.entries[4].index, 4);
  EXPECT_EQ(file.entries[4].value, 9);
}

TEST(BFile, ReportsLineNumbers) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"0 1\n1 x\n", 2}, {"0 1\n\n# c\n0 2\n", 4}, {"0  1\n", 1}, {"0\n", 1}, {"0 1 2\n", 1}, {"1 1\n2 3\n1 5\n", 3}};
  for (const auto& [text, line] : cases) {
    std::istringstream in(text);
    try {
      parse_bfile(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const BFileParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(BFile, TriangleFlattening) {
  // stirling2 rows 0..3: 1 | 0 1 | 0 1 1 | 0 1 3 1
  const long long expected[] = {1, 0, 1, 0, 1, 1, 0, 1, 3, 1};
  for (long long i = 0; i < 10; ++i) EXPECT_EQ(*bfile_term(SequenceId::Stirling2, i), Int(static_cast<long>(expected[i]))) << i;
  EXPECT_FALSE(bfile_term(SequenceId::Derangement, -1).has_value());
  EXPECT_THROW(bfile_term(SequenceId::Derangement, 1'000'000), ResourceLimitError);
}

TEST(Json, IdentityReportRoundTripIsByteStable) {
  for (IdentityId id : {IdentityId::MainSumRule, IdentityId::GeneratingPoly, IdentityId::DobinskiFinite, IdentityId::BellDouble}) {
    Params p;
    for (const auto& name : required_params(id)) p[std::string(name)] = name == "r" ? 1 : 4;
    const std::string once = to_json(verify_identity(id, EvalMode::Corrected, p)).dump();
    EXPECT_EQ(Json::parse(once).dump(), once);
  }
}

TEST(Json, BoundReportRoundTripIsByteStable) {
  for (const BoundReport& rep : {check_adell(20, 7), check_lambda_sandwich(9, 3), check_berend_tal(150)}) {
    const std::string once = to_json(rep).dump();
    EXPECT_EQ(Json::parse(once).dump(), once);
  }
}

TEST(Json, ExactValuesAreDecimalStrings) {
  const Json j = to_json(verify_identity(IdentityId::MainSumRule, EvalMode::Corrected, {{"n", 30}, {"r", 2}}));
  EXPECT_EQ(j["lhs"], "265252859812191058636308480000000");
  EXPECT_TRUE(j["params"]["n"].is_number_integer());
}

TEST(Sweep, ParallelMatchesSerial) {
  for (IdentityId id : {IdentityId::MainSumRule, IdentityId::NestedSchlomilch, IdentityId::BellDouble}) {
    SweepSpec spec;
    spec.id = id;
    spec.mode = id == IdentityId::BellDouble ? EvalMode::AsWritten : EvalMode::Corrected;
    spec.ranges = parse_ranges(id == IdentityId::BellDouble ? "q=0..12" : "n=1..7,r=-1..n-1");
    const SweepResult serial = run_sweep(spec);
    spec.parallelism = 6;
    const SweepResult parallel = run_sweep(spec);
    ASSERT_EQ(serial.reports.size(), parallel.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i)
      EXPECT_EQ(strip_timing(to_json(serial.reports[i])), strip_timing(to_json(parallel.reports[i])));
    EXPECT_EQ(serial.summary.total, parallel.summary.total);
    EXPECT_EQ(serial.summary.failures, parallel.summary.failures);
    EXPECT_EQ(serial.summary.skipped, parallel.summary.skipped);
    if (serial.summary.first_failure)
      EXPECT_EQ(strip_timing(*serial.summary.first_failure), strip_timing(*parallel.summary.first_failure));
  }
}

TEST(Sweep, CollectsAllFailures) {
  SweepSpec spec{IdentityId::BellDouble, EvalMode::AsWritten, parse_ranges("q=0..6"), 3};
  const SweepResult result = run_sweep(spec);
  EXPECT_EQ(result.summary.total, 7u);
  EXPECT_EQ(result.summary.passes + result.summary.failures, result.summary.total);
  EXPECT_GT(result.summary.failures, 1u);
  EXPECT_EQ(result.summary.exit_code(), 1);
}

TEST(Sweep, SkipsInadmissiblePoints) {
  SweepSpec spec{IdentityId::MomentBell, EvalMode::Corrected, parse_ranges("n=0..4,q=0..6"), 1};
  const SweepResult result = run_sweep(spec);
  EXPECT_EQ(result.summary.total, 15u);
  EXPECT_EQ(result.summary.skipped, 20u);
  EXPECT_EQ(result.summary.failures, 0u);
}

TEST(Commands, InProcessExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(run_seq({"bell", 5, std::nullopt, Format::Plain}, out, err), 0);
  EXPECT_EQ(out.str(), "52\n");
  EXPECT_EQ(run_seq({"fibonacci", 5, std::nullopt, Format::Plain}, out, err), 2);
  EXPECT_EQ(run_seq({"bell", 5, 2u, Format::Plain}, out, err), 2);
  EXPECT_EQ(run_seq({"bell", 100'000, std::nullopt, Format::Plain}, out, err), 3);
  EXPECT_EQ(run_verify({"MAIN_SUM_RULE", "sideways", "n=1..3,r=0..0", 1, Format::Plain}, out, err), 2);
  EXPECT_EQ(run_oracle({"FIXED_POINTS", 12, std::nullopt, false, std::nullopt, 1, Format::Plain}, out, err), 3);
  EXPECT_EQ(run_oracle({"MARKED_TUPLES", 4, std::nullopt, false, std::nullopt, 1, Format::Plain}, out, err), 2);
  EXPECT_EQ(run_bounds({"adell", "n=1..5", Format::Plain}, out, err), 2);
  EXPECT_EQ(run_bounds({"gauss", "n=2..5", Format::Plain}, out, err), 2);
  EXPECT_EQ(run_ingest_bfile({"/nonexistent/b.txt", "derangement", true, Format::Plain}, out, err), 2);
}

// Golden commands against the built executable.

TEST(Golden, SeqBell) {
  const auto r = run_tool("seq bell --n 5 --format plain");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "52\n");
}

TEST(Golden, SeqRencontresCsv) {
  const auto r = run_tool("seq rencontres --n 4 --format csv");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "k,value\n0,9\n1,8\n2,6\n3,0\n4,1\n");
}

TEST(Golden, SeqStirling1) {
  EXPECT_EQ(run_tool("seq stirling1 --n 4 --k 2").out, "11\n");
  EXPECT_EQ(run_tool("seq stirling1 --n 4 --k 3").out, "-6\n");
}

TEST(Golden, SeqJson) {
  const auto r = run_tool("seq derangement --n 30 --format json");
  EXPECT_EQ(r.out, "{\"sequence\":\"derangement\",\"n\":30,\"value\":\"97581073836835777732377428235481\"}\n");
}

TEST(Golden, VerifyMainSumRule) {
  const auto r = run_tool("verify MAIN_SUM_RULE --range \"n=1..10,r=0..n-1\"");
  EXPECT_EQ(r.exit_code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 56u);
  EXPECT_EQ(lines.back().rfind("summary: total=55 passes=55 failures=0 skipped=0", 0), 0u) << lines.back();
}

TEST(Golden, VerifyBellDoubleAsWrittenFails) {
  const auto r = run_tool("verify BELL_DOUBLE --mode as-written --range \"q=2..2\" --format json");
  EXPECT_EQ(r.exit_code, 1);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  const Json report = Json::parse(lines[0]);
  EXPECT_EQ(report["lhs"], "5/2");
  EXPECT_EQ(report["rhs"], "2");
  EXPECT_EQ(report["equal"], false);
  const Json summary = Json::parse(lines[1])["summary"];
  EXPECT_EQ(summary["total"], 1);
  EXPECT_EQ(summary["failures"], 1);
  EXPECT_EQ(summary["first_failure"]["lhs"], "5/2");
}

TEST(Golden, VerifyMomentBell) {
  const auto r = run_tool("verify MOMENT_BELL --range \"q=0..5,n=5..8\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("failures=0"), std::string::npos);
}

TEST(Golden, VerifyCsvIsOneTable) {
  const auto r = run_tool("verify FALLING_MOMENT --range \"n=1..4,r=0..n-1\" --format csv");
  EXPECT_EQ(r.exit_code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[0], "identity,mode,params,lhs,rhs,equal,elapsed_ms");
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 6) << lines[i];
}

TEST(Golden, VerifyUsageErrors) {
  EXPECT_EQ(run_tool("verify NOT_AN_IDENTITY --range \"n=1..2\"").exit_code, 2);
  EXPECT_EQ(run_tool("verify MAIN_SUM_RULE --range \"n=1..bad\"").exit_code, 2);
  EXPECT_EQ(run_tool("verify MAIN_SUM_RULE --range \"n=1..3\"").exit_code, 2);
  EXPECT_EQ(run_tool("verify MAIN_SUM_RULE").exit_code, 2);
  EXPECT_EQ(run_tool("verify MAIN_SUM_RULE --range \"n=1..3,r=0..0\" --format xml").exit_code, 2);
  EXPECT_EQ(run_tool("verify MAIN_SUM_RULE --range \"n=1..3,r=0..0\" --parallel 0").exit_code, 2);
  EXPECT_EQ(run_tool("frobnicate").exit_code, 2);
  EXPECT_EQ(run_tool("").exit_code, 2);
  EXPECT_EQ(run_tool("--help").exit_code, 0);
}

TEST(Golden, VerifyResourceCap) {
  EXPECT_EQ(run_tool("verify MAIN_SUM_RULE --range \"n=1..5000,r=0..0\"").exit_code, 3);
  EXPECT_EQ(run_tool("verify NESTED_SCHLOMILCH --range \"n=40..40,r=0..0\"").exit_code, 3);
}

TEST(Golden, VerifyParallelOutputMatchesSerial) {
  const std::string range = "--range \"n=1..9,r=-1..n-1\" --format json";
  const auto serial = lines_of(run_tool("verify NORMALIZED_NESTED " + range).out);
  const auto parallel = lines_of(run_tool("verify NORMALIZED_NESTED --parallel 8 " + range).out);
  ASSERT_EQ(serial.size(), parallel.size());
  ASSERT_EQ(serial.size(), 55u);
  for (std::size_t i = 0; i + 1 < serial.size(); ++i)
    EXPECT_EQ(strip_timing(Json::parse(serial[i])), strip_timing(Json::parse(parallel[i])));
}

TEST(Golden, JsonLinesRoundTrip) {
  for (const char* command : {"verify GENERATING_POLY --range \"n=1..6\" --format json",
                              "verify DOBINSKI_FINITE --range \"q=0..6\" --format json",
                              "bounds lambda --range \"r=2..3,n=r+1..6\" --format json",
                              "bounds asymptotics --range \"n=10,50\" --format json"}) {
    const auto r = run_tool(command);
    EXPECT_EQ(r.exit_code, 0) << command;
    for (const auto& line : lines_of(r.out)) EXPECT_EQ(Json::parse(line).dump(), line);
  }
}

TEST(Golden, OracleAscents) {
  const auto r = run_tool("oracle ASCENTS --n 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "1 4 1\n");
}

TEST(Golden, OracleCompare) {
  EXPECT_EQ(run_tool("oracle FIXED_POINTS --n 6 --compare").exit_code, 0);
  EXPECT_EQ(run_tool("oracle CYCLES --n 7 --compare").exit_code, 0);
  EXPECT_EQ(run_tool("oracle PARTITION_BLOCKS --n 7 --compare --parallel 3").exit_code, 0);
  EXPECT_EQ(run_tool("oracle MARKED_TUPLES --n 4 --q 3 --compare").exit_code, 0);
}

TEST(Golden, OracleCeiling) {
  EXPECT_EQ(run_tool("oracle FIXED_POINTS --n 12").exit_code, 3);
  EXPECT_EQ(run_tool("oracle FIXED_POINTS --n 4 --ceiling 3").exit_code, 3);
  EXPECT_EQ(run_tool("oracle FIXED_POINTS --n 4 --q 2").exit_code, 2);
  EXPECT_EQ(run_tool("oracle HEIGHT --n 4").exit_code, 2);
}

TEST(Golden, Bounds) {
  const auto bt = run_tool("bounds berend-tal --range \"n=1..200\"");
  EXPECT_EQ(bt.exit_code, 0);
  EXPECT_NE(bt.out.find("summary: total=200 passes=200 failures=0"), std::string::npos);
  EXPECT_EQ(run_tool("bounds adell --range \"n=2..60\"").exit_code, 0);
  EXPECT_EQ(run_tool("bounds lambda --range \"r=2..6,n=r+1..20\"").exit_code, 0);
  const auto asym = run_tool("bounds asymptotics --range \"n=10,50,100,200\"");
  EXPECT_EQ(asym.exit_code, 0);
  EXPECT_NE(asym.out.find("trend de_bruijn monotone_decreasing PASS"), std::string::npos);
  EXPECT_NE(asym.out.find("trend odlyzko monotone_decreasing PASS"), std::string::npos);
  EXPECT_EQ(run_tool("bounds adell --range \"n=1..5\"").exit_code, 2);
  EXPECT_EQ(run_tool("bounds lambda --range \"r=1..2,n=3..4\"").exit_code, 2);
  EXPECT_EQ(run_tool("bounds berend-tal --range \"n=1..100000\"").exit_code, 3);
}

TEST(Golden, IngestBFile) {
  const auto good = write_temp("d_good.txt", "0 1\n1 0\n2 1\n3 2\n4 9\n");
  const auto r = run_tool("ingest-bfile " + good + " --seq derangement --check");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("total=5 passes=5 failures=0"), std::string::npos);

  const auto bad = write_temp("d_bad.txt", "0 1\n1 0\n2 1\n3 2\n4 10\n");
  const auto b = run_tool("ingest-bfile " + bad + " --seq derangement --check");
  EXPECT_EQ(b.exit_code, 1);
  EXPECT_NE(b.out.find("mismatch index=4 expected=9 found=10"), std::string::npos);
  EXPECT_NE(b.out.find("total=5 passes=4 failures=1"), std::string::npos);

  const auto empty = write_temp("d_empty.txt", "");
  const auto e = run_tool("ingest-bfile " + empty + " --seq derangement --check");
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_NE(e.out.find("total=0"), std::string::npos);

  const auto garbled = write_temp("d_garbled.txt", "0 1\n1 one\n");
  EXPECT_EQ(run_tool("ingest-bfile " + garbled + " --seq derangement --check").exit_code, 2);
  EXPECT_EQ(run_tool("ingest-bfile " + good + " --seq primes --check").exit_code, 2);
  EXPECT_EQ(run_tool("ingest-bfile " + good + " --seq derangement").exit_code, 0);
}
