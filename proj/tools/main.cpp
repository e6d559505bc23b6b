#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace sumrules::cli;

Format format_from(const std::string& text) {
  const auto format = parse_format(text);
  if (!format) throw CLI::ValidationError("--format", "expected plain, json or csv");
  return *format;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of rencontres sum rules and related identities"};
  app.require_subcommand(1);

  std::string format_text = "plain";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "plain, json or csv")->capture_default_str();
  };

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print a sequence value or triangle row");
  seq_cmd->add_option("name", seq.name, "derangement, rencontres, stirling1, stirling2, bell, eulerian")->required();
  seq_cmd->add_option("--n", seq.n)->required();
  seq_cmd->add_option("--k", seq.k);
  add_format(seq_cmd);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity over a parameter range");
  verify_cmd->add_option("identity", verify.identity)->required();
  verify_cmd->add_option("--mode", verify.mode, "as-written or corrected")->capture_default_str();
  verify_cmd->add_option("--range", verify.range, "e.g. \"n=1..10,r=-1..n-1\"")->required();
  verify_cmd->add_option("--parallel", verify.parallel)->check(CLI::PositiveNumber)->capture_default_str();
  add_format(verify_cmd);

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate a statistic by brute force");
  oracle_cmd->add_option("statistic", oracle.statistic)->required();
  oracle_cmd->add_option("--n", oracle.n)->required();
  oracle_cmd->add_option("--q", oracle.q);
  oracle_cmd->add_flag("--compare", oracle.compare, "compare against closed forms");
  oracle_cmd->add_option("--ceiling", oracle.ceiling, "override the enumeration size ceiling");
  oracle_cmd->add_option("--parallel", oracle.parallel)->check(CLI::PositiveNumber)->capture_default_str();
  add_format(oracle_cmd);

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Check an inequality over a range");
  bounds_cmd->add_option("which", bounds.which, "adell, lambda, berend-tal or asymptotics")->required();
  bounds_cmd->add_option("--range", bounds.range)->required();
  add_format(bounds_cmd);

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest-bfile", "Parse a b-file and optionally check it");
  ingest_cmd->add_option("path", ingest.path)->required();
  ingest_cmd->add_option("--seq", ingest.sequence)->required();
  ingest_cmd->add_flag("--check", ingest.check);
  add_format(ingest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Format format;
  try {
    format = format_from(format_text);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (*seq_cmd) return seq.format = format, run_seq(seq, std::cout, std::cerr);
  if (*verify_cmd) return verify.format = format, run_verify(verify, std::cout, std::cerr);
  if (*oracle_cmd) return oracle.format = format, run_oracle(oracle, std::cout, std::cerr);
  if (*bounds_cmd) return bounds.format = format, run_bounds(bounds, std::cout, std::cerr);
  ingest.format = format;
  return run_ingest_bfile(ingest, std::cout, std::cerr);
}
