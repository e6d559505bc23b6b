#include "cli/bfile.hpp"

#include "sumrules/combinat.hpp"

#include <array>
#include <charconv>

namespace sumrules::cli {
namespace {

constexpr std::array<std::string_view, 6> kNames{"derangement", "rencontres", "stirling1",
                                                 "stirling2",   "bell",       "eulerian"};

bool all_digits(std::string_view s, std::size_t from) {
  if (s.size() <= from) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto space = line.find(' ');
    if (space == std::string::npos) throw BFileParseError(number, "expected 'index value'");
    const std::string_view index_text(line.data(), space);
    const std::string_view value_text(line.data() + space + 1, line.size() - space - 1);

    const std::size_t index_from = !index_text.empty() && index_text[0] == '-' ? 1 : 0;
    const std::size_t value_from = !value_text.empty() && value_text[0] == '-' ? 1 : 0;
    if (!all_digits(index_text, index_from)) throw BFileParseError(number, "bad index '" + std::string(index_text) + "'");
    if (!all_digits(value_text, value_from)) throw BFileParseError(number, "bad value '" + std::string(value_text) + "'");

    BFileEntry entry;
    auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), entry.index);
    if (ec != std::errc()) throw BFileParseError(number, "index out of range");
    if (!out.entries.empty() && entry.index <= out.entries.back().index)
      throw BFileParseError(number, "indices must be strictly increasing");
    entry.value.set_str(std::string(value_text), 10);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::optional<SequenceId> parse_sequence(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<SequenceId>(i);
  return std::nullopt;
}

std::string_view to_string(SequenceId id) { return kNames[static_cast<std::size_t>(id)]; }

bool is_triangle(SequenceId id) { return id != SequenceId::Derangement && id != SequenceId::Bell; }

Int sequence_value(SequenceId id, unsigned n, unsigned k) {
  switch (id) {
    case SequenceId::Derangement:
      return derangement(n);
    case SequenceId::Bell:
      return bell(n);
    case SequenceId::Rencontres:
      return rencontres(n, k);
    case SequenceId::Stirling1:
      return stirling1_signed(n, k);
    case SequenceId::Stirling2:
      return stirling2(n, k);
    case SequenceId::Eulerian:
      return eulerian(n, k);
  }
  return Int(0);
}

std::vector<Int> sequence_row(SequenceId id, unsigned n) {
  std::vector<Int> row;
  row.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) row.push_back(sequence_value(id, n, k));
  return row;
}

unsigned sequence_cap(SequenceId id) {
  switch (id) {
    case SequenceId::Derangement:
      return 5000;
    case SequenceId::Bell:
    case SequenceId::Stirling2:
      return 300;
    default:
      return 500;
  }
}

std::optional<Int> bfile_term(SequenceId id, long long offset) {
  if (offset < 0) return std::nullopt;
  if (!is_triangle(id)) {
    if (offset > sequence_cap(id)) throw ResourceLimitError("b-file index beyond the sequence cap");
    return sequence_value(id, static_cast<unsigned>(offset));
  }
  unsigned long long n = 0;
  auto remaining = static_cast<unsigned long long>(offset);
  while (remaining > n) {
    remaining -= n + 1;
    ++n;
  }
  if (n > sequence_cap(id)) throw ResourceLimitError("b-file index beyond the sequence cap");
  return sequence_value(id, static_cast<unsigned>(n), static_cast<unsigned>(remaining));
}

}  // namespace sumrules::cli
