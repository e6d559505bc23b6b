#pragma once

// Test-only brute-force counters, deliberately written independently of the
// library's enumerators (recursive generation instead of iterative).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace brute {

// Calls visit(perm) for every permutation of {0..n-1}, generated recursively
// by choosing the image of each position in turn.
inline void for_each_permutation(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(unsigned)> rec = [&](unsigned pos) {
    if (pos == n) {
      visit(perm);
      return;
    }
    for (unsigned v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      perm[pos] = v;
      rec(pos + 1);
      used[v] = false;
    }
  };
  rec(0);
}

inline std::vector<std::uint64_t> fixed_point_histogram(unsigned n) {
  std::vector<std::uint64_t> h(n + 1, 0);
  for_each_permutation(n, [&](const auto& p) {
    unsigned c = 0;
    for (unsigned i = 0; i < n; ++i) c += p[i] == i;
    ++h[c];
  });
  return h;
}

// Ascent = position i with p[i] < p[i+1].
inline std::vector<std::uint64_t> ascent_histogram(unsigned n) {
  std::vector<std::uint64_t> h(std::max(n, 1u), 0);
  for_each_permutation(n, [&](const auto& p) {
    unsigned c = 0;
    for (unsigned i = 0; i + 1 < n; ++i) c += p[i] < p[i + 1];
    ++h[c];
  });
  return h;
}

// Set partitions built by inserting element e into an existing block or a new one.
inline std::vector<std::uint64_t> partition_block_histogram(unsigned n) {
  std::vector<std::uint64_t> h(n + 1, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned e, unsigned blocks) {
    if (e == n) {
      ++h[blocks];
      return;
    }
    for (unsigned b = 0; b < blocks; ++b) rec(e + 1, blocks);
    rec(e + 1, blocks + 1);
  };
  rec(0, 0);
  return h;
}

}  // namespace brute
