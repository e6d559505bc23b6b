#pragma once

// Subcommand drivers. Each writes results to `out`, diagnostics to `err`,
// and returns the process exit code:
//   0 all checks pass, 1 a mathematical failure, 2 usage or parse error,
//   3 resource cap exceeded.

#include "cli/render.hpp"
#include "sumrules/errors.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace sumrules::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

struct SeqOptions {
  std::string name;
  unsigned n = 0;
  std::optional<unsigned> k;
  Format format = Format::Plain;
};

struct VerifyOptions {
  std::string identity;
  std::string mode = "corrected";
  std::string range;
  unsigned parallel = 1;
  Format format = Format::Plain;
};

struct OracleOptions {
  std::string statistic;
  unsigned n = 0;
  std::optional<unsigned> q;
  bool compare = false;
  std::optional<unsigned> ceiling;
  unsigned parallel = 1;
  Format format = Format::Plain;
};

struct BoundsOptions {
  std::string which;
  std::string range;
  Format format = Format::Plain;
};

struct IngestOptions {
  std::string path;
  std::string sequence;
  bool check = false;
  Format format = Format::Plain;
};

int run_seq(const SeqOptions& opts, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int run_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);
int run_bounds(const BoundsOptions& opts, std::ostream& out, std::ostream& err);
int run_ingest_bfile(const IngestOptions& opts, std::ostream& out, std::ostream& err);

/// Runs `body`, mapping library exceptions to exit codes with a message on `err`.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sumrules::cli
