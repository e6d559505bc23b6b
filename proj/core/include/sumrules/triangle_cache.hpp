#pragma once

#include "sumrules/bigint.hpp"

#include <deque>
#include <functional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace sumrules {

/// Memoized table of integer rows filled by a recurrence.
///
/// Rows are generated eagerly from row 0 up to the requested index and are
/// never modified once published. `row()` is safe to call concurrently:
/// lookups take a shared lock, extension takes an exclusive one, and the
/// returned reference stays valid for the lifetime of the cache (rows live
/// in a deque, which does not relocate elements on push_back).
class TriangleCache {
 public:
  using Row = std::vector<Int>;
  /// Produces row `n` given rows 0..n-1.
  using Generator = std::function<Row(std::size_t n, const std::deque<Row>& previous)>;

  TriangleCache(std::string generator_id, Generator generator);

  TriangleCache(const TriangleCache&) = delete;
  TriangleCache& operator=(const TriangleCache&) = delete;

  const Row& row(std::size_t n) const;

  /// Entry (n, k), or zero when k lies past the end of row n.
  Int at(std::size_t n, std::size_t k) const;

  std::size_t published_rows() const;
  const std::string& generator_id() const { return generator_id_; }

 private:
  std::string generator_id_;
  Generator generator_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<Row> rows_;
};

}  // namespace sumrules
