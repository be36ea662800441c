#pragma once

#include "vecfield/exact.hpp"

#include <cstddef>
#include <functional>
#include <mutex>
#include <vector>

namespace vfc::detail {

/// Lazily extended, lock-protected table of a sequence whose n-th term depends
/// only on earlier terms (and on other sequences that never call back).
class MemoSequence {
 public:
  using Step = std::function<ExactCount(std::size_t, const std::vector<ExactCount>&)>;

  explicit MemoSequence(Step step) : step_(std::move(step)) {}

  ExactCount at(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) values_.push_back(step_(values_.size(), values_));
    return values_[n];
  }

 private:
  Step step_;
  std::mutex mutex_;
  std::vector<ExactCount> values_;
};

}  // namespace vfc::detail
