#pragma once

#include "sumrules/bigint.hpp"
#include "sumrules/errors.hpp"

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumrules::cli {

/// Malformed b-file content; carries the 1-based line number.
class BFileParseError : public UsageError {
 public:
  BFileParseError(std::size_t line, const std::string& what)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct BFileEntry {
  long long index = 0;
  Int value;
};

/// Parsed "index value" listing with strictly increasing indices.
struct BFile {
  std::vector<BFileEntry> entries;
};

/// Lines are "index value" in ASCII decimal separated by one space; blank
/// lines and lines starting with '#' are skipped, a trailing '\r' is dropped.
BFile parse_bfile(std::istream& in);

/// Named sequences the CLI can compute.
enum class SequenceId { Derangement, Rencontres, Stirling1, Stirling2, Bell, Eulerian };

std::optional<SequenceId> parse_sequence(std::string_view name);
std::string_view to_string(SequenceId id);

/// Triangles take a second index; derangement and bell do not.
bool is_triangle(SequenceId id);

/// Value of a one-index sequence at n, or of a triangle at (n, k).
Int sequence_value(SequenceId id, unsigned n, unsigned k = 0);

/// Full row n of a triangle (k = 0..n).
std::vector<Int> sequence_row(SequenceId id, unsigned n);

/// Largest n the CLI will compute for a sequence.
unsigned sequence_cap(SequenceId id);

/// Value at a b-file offset: the index itself for one-index sequences,
/// row-by-row flattening (n >= 0, 0 <= k <= n, offset 0) for triangles.
/// Empty for negative offsets.
std::optional<Int> bfile_term(SequenceId id, long long offset);

}  // namespace sumrules::cli
