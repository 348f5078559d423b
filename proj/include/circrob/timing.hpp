#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <vector>

namespace circrob {

/// Seconds per call of `fn`, repeating it until at least `min_batch` seconds
/// have passed so fast calls are not lost in clock resolution.
template <typename Fn>
double batch_seconds(Fn&& fn, double min_batch = 0.02) {
  using clock = std::chrono::steady_clock;
  std::size_t reps = 0;
  const auto start = clock::now();
  double elapsed = 0.0;
  do {
    fn();
    ++reps;
    elapsed = std::chrono::duration<double>(clock::now() - start).count();
  } while (elapsed < min_batch);
  return elapsed / static_cast<double>(reps);
}

inline double median(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
  return v[v.size() / 2];
}

/// Median of `samples` batched measurements of `fn`, in seconds per call.
template <typename Fn>
double median_seconds(Fn&& fn, int samples = 5, double min_batch = 0.02) {
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) times.push_back(batch_seconds(fn, min_batch));
  return median(std::move(times));
}

}  // namespace circrob
