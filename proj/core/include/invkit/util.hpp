#ifndef INVKIT_UTIL_HPP
#define INVKIT_UTIL_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace invkit {

/// Worker cap: INVKIT_THREADS if set (min 1), else hardware concurrency.
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n), possibly concurrently. Results must be
/// written into per-index slots by the caller; the merge order is therefore
/// independent of the thread count. The first exception (lowest index) is
/// rethrown.
void parallel_index(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Write-once concurrency cell: racing fills must agree (deterministic
/// compute), so the first stored value wins and later fills are dropped.
template <typename T>
class Lazy {
 public:
  const T& get(const std::function<T()>& make) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!value_) value_ = make();
    return *value_;
  }

 private:
  mutable std::mutex mu_;
  mutable std::optional<T> value_;
};

}  // namespace invkit

#endif
