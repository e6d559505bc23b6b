#include "sumrules/triangle_cache.hpp"

#include <mutex>

namespace sumrules {

TriangleCache::TriangleCache(std::string generator_id, Generator generator)
    : generator_id_(std::move(generator_id)), generator_(std::move(generator)) {}

const TriangleCache::Row& TriangleCache::row(std::size_t n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return rows_[n];
  }
  std::unique_lock lock(mutex_);
  while (rows_.size() <= n) {
    Row next = generator_(rows_.size(), rows_);
    rows_.push_back(std::move(next));
  }
  return rows_[n];
}

Int TriangleCache::at(std::size_t n, std::size_t k) const {
  const Row& r = row(n);
  return k < r.size() ? r[k] : Int(0);
}

std::size_t TriangleCache::published_rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

}  // namespace sumrules
