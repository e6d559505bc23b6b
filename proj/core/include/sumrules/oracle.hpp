#pragma once

#include "sumrules/bigint.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sumrules {

enum class StatisticId { FixedPoints, Cycles, PartitionBlocks, Ascents, MarkedTuples };

std::span<const StatisticId> all_statistics();
std::string_view to_string(StatisticId stat);
std::optional<StatisticId> parse_statistic(std::string_view tag);

/// Exact histogram produced by exhaustive generation.
struct StatRow {
  StatisticId statistic{};
  unsigned n = 0;
  /// Indexed by statistic value. MARKED_TUPLES holds a single total.
  std::vector<Nat> counts;
  /// Tuple order for MARKED_TUPLES.
  std::optional<unsigned> q;

  Nat total() const;
};

struct EnumerationLimits {
  unsigned permutation_ceiling = 9;
  unsigned partition_ceiling = 12;
};

/// Exhaustively enumerates permutations (lexicographic order) or set
/// partitions (restricted growth strings) of an n-set and tallies `stat`.
/// Permutation statistics split the work by leading element across
/// `threads` workers and merge histograms at the end.
///
/// Throws ResourceLimitError above the ceiling, UsageError when q is given
/// for a statistic other than MARKED_TUPLES or missing for it.
StatRow enumerate_statistic(StatisticId stat, unsigned n, std::optional<unsigned> q = {},
                            const EnumerationLimits& limits = {}, unsigned threads = 1);

/// Literal count of (permutation, ordered q-tuple of its fixed points) pairs,
/// repetition allowed. Only for n <= 5.
Nat marked_tuples_literal(unsigned n, unsigned q);

/// Coefficient of x^{(k-1)i} in ((1+x)^k - x^k)^i by polynomial arithmetic.
/// Throws DomainError for k = 0.
Nat power_by_coefficient_extraction(unsigned k, unsigned i);

}  // namespace sumrules
