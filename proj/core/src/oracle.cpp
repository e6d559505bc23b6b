#include "sumrules/oracle.hpp"

#include "sumrules/combinat.hpp"
#include "sumrules/errors.hpp"
#include "sumrules/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <thread>

namespace sumrules {
namespace {

constexpr std::array<StatisticId, 5> kStats{StatisticId::FixedPoints, StatisticId::Cycles,
                                            StatisticId::PartitionBlocks, StatisticId::Ascents,
                                            StatisticId::MarkedTuples};
constexpr std::array<std::string_view, 5> kStatTags{"FIXED_POINTS", "CYCLES", "PARTITION_BLOCKS", "ASCENTS",
                                                    "MARKED_TUPLES"};

using Histogram = std::vector<std::uint64_t>;

unsigned fixed_points(const std::vector<unsigned>& perm) {
  unsigned count = 0;
  for (unsigned i = 0; i < perm.size(); ++i) count += perm[i] == i;
  return count;
}

unsigned cycles(const std::vector<unsigned>& perm) {
  std::uint32_t seen = 0;
  unsigned count = 0;
  for (unsigned start = 0; start < perm.size(); ++start) {
    if (seen & (1u << start)) continue;
    ++count;
    for (unsigned i = start; !(seen & (1u << i)); i = perm[i]) seen |= 1u << i;
  }
  return count;
}

unsigned ascents(const std::vector<unsigned>& perm) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) count += perm[i] < perm[i + 1];
  return count;
}

template <class Statistic>
Histogram permutation_histogram(unsigned n, std::size_t bins, unsigned threads, Statistic stat) {
  Histogram total(bins, 0);
  if (n == 0) {
    ++total[stat(std::vector<unsigned>{})];
    return total;
  }
  // Permutations with leading element `lead` form one contiguous
  // lexicographic block; blocks are dealt round-robin to workers.
  auto run_block = [&](unsigned lead, Histogram& hist) {
    std::vector<unsigned> perm;
    perm.reserve(n);
    perm.push_back(lead);
    for (unsigned v = 0; v < n; ++v)
      if (v != lead) perm.push_back(v);
    do {
      ++hist[stat(perm)];
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  };

  const unsigned workers = std::clamp(threads, 1u, n);
  std::vector<Histogram> partial(workers, Histogram(bins, 0));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (unsigned lead = w; lead < n; lead += workers) run_block(lead, partial[w]);
      });
    }
    for (unsigned lead = 0; lead < n; lead += workers) run_block(lead, partial[0]);
  }
  for (const auto& h : partial)
    for (std::size_t b = 0; b < bins; ++b) total[b] += h[b];
  return total;
}

// Restricted growth strings a[0..n-1] with a[0] = 0 and a[i] <= 1 + max(a[0..i-1]);
// each one encodes a distinct set partition with max+1 blocks.
Histogram partition_histogram(unsigned n) {
  Histogram hist(n + 1, 0);
  if (n == 0) {
    hist[0] = 1;
    return hist;
  }
  std::vector<unsigned> a(n, 0);
  std::vector<unsigned> prefix_max(n, 0);  // max of a[0..i]
  while (true) {
    ++hist[prefix_max[n - 1] + 1];
    std::size_t i = n - 1;
    while (i > 0 && a[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return hist;
}

std::vector<Nat> to_nats(const Histogram& hist) {
  std::vector<Nat> out;
  out.reserve(hist.size());
  for (auto c : hist) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

}  // namespace

std::span<const StatisticId> all_statistics() { return kStats; }

std::string_view to_string(StatisticId stat) { return kStatTags[static_cast<std::size_t>(stat)]; }

std::optional<StatisticId> parse_statistic(std::string_view tag) {
  std::string norm(tag);
  for (char& c : norm) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (std::size_t i = 0; i < kStatTags.size(); ++i)
    if (kStatTags[i] == norm) return kStats[i];
  return std::nullopt;
}

Nat StatRow::total() const { return std::accumulate(counts.begin(), counts.end(), Nat(0)); }

StatRow enumerate_statistic(StatisticId stat, unsigned n, std::optional<unsigned> q,
                            const EnumerationLimits& limits, unsigned threads) {
  if (stat == StatisticId::MarkedTuples && !q) throw UsageError("MARKED_TUPLES requires the tuple order q");
  if (stat != StatisticId::MarkedTuples && q) throw UsageError("q applies only to MARKED_TUPLES");

  const bool partitions = stat == StatisticId::PartitionBlocks;
  const unsigned ceiling = partitions ? limits.partition_ceiling : limits.permutation_ceiling;
  if (n > ceiling) {
    throw ResourceLimitError(std::string(to_string(stat)) + ": n = " + std::to_string(n) +
                             " exceeds the enumeration ceiling " + std::to_string(ceiling));
  }
  // Cycle bookkeeping uses a 32-bit mask.
  if (n > 31) throw ResourceLimitError("enumeration beyond n = 31 is not supported");

  StatRow row;
  row.statistic = stat;
  row.n = n;
  row.q = q;
  switch (stat) {
    case StatisticId::FixedPoints:
      row.counts = to_nats(permutation_histogram(n, n + 1, threads, fixed_points));
      break;
    case StatisticId::Cycles:
      row.counts = to_nats(permutation_histogram(n, n + 1, threads, cycles));
      break;
    case StatisticId::Ascents:
      row.counts = to_nats(permutation_histogram(n, std::max(n, 1u), threads, ascents));
      break;
    case StatisticId::PartitionBlocks:
      row.counts = to_nats(partition_histogram(n));
      break;
    case StatisticId::MarkedTuples: {
      // Each permutation with k fixed points carries k^q marked ordered q-tuples.
      const Histogram fixed = permutation_histogram(n, n + 1, threads, fixed_points);
      Nat total = 0;
      for (unsigned k = 0; k <= n; ++k) total += power(k, *q) * static_cast<unsigned long>(fixed[k]);
      row.counts = {total};
      break;
    }
  }
  return row;
}

Nat marked_tuples_literal(unsigned n, unsigned q) {
  if (n > 5) throw ResourceLimitError("marked_tuples_literal is limited to n <= 5");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  unsigned long total = 0;
  std::vector<unsigned> tuple(q);
  do {
    // Odometer over [0,n)^q.
    std::fill(tuple.begin(), tuple.end(), 0u);
    if (n == 0 && q > 0) continue;
    while (true) {
      total += std::all_of(tuple.begin(), tuple.end(), [&](unsigned e) { return perm[e] == e; });
      std::size_t pos = 0;
      while (pos < q && ++tuple[pos] == n) tuple[pos++] = 0;
      if (pos == q) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Nat(total);
}

Nat power_by_coefficient_extraction(unsigned k, unsigned i) {
  if (k == 0) throw DomainError("power_by_coefficient_extraction: k = 0 leaves the degree (k-1)i undefined");
  std::vector<Int> binom_row(k + 1);
  for (unsigned j = 0; j <= k; ++j) binom_row[j] = binomial(k, j);
  const IntPolynomial base = IntPolynomial(std::move(binom_row)) - IntPolynomial::monomial(Int(1), k);
  return base.pow(i).coefficient(static_cast<std::size_t>(k - 1) * i);
}

}  // namespace sumrules
