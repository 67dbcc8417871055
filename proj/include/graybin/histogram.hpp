#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "graybin/image.hpp"

namespace graybin {

inline constexpr int kLevels = 256;

/// Exact pixel count and intensity sum over a range of bins.
struct ClassStats {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;

  bool empty() const noexcept { return count == 0; }
  /// Mean intensity; nullopt for an empty class.
  std::optional<double> mean() const noexcept;
};

/// 256-bin intensity histogram. Immutable once built.
class Histogram {
 public:
  using Counts = std::array<std::uint64_t, kLevels>;

  Histogram() = default;
  explicit Histogram(const Counts& counts);

  static Histogram of(const GrayImage& image);

  const Counts& counts() const noexcept { return counts_; }
  std::uint64_t count(int value) const { return counts_.at(value); }
  std::uint64_t total() const noexcept { return total_; }

  /// Σ v·counts[v] over the whole histogram.
  std::uint64_t intensity_sum() const noexcept { return prefix_sum_[kLevels]; }

  /// Stats over bins [lo, hi]. Throws ArgumentError unless 0 <= lo <= hi <= 255.
  ClassStats class_stats(int lo, int hi) const;

  friend bool operator==(const Histogram& a, const Histogram& b) {
    return a.counts_ == b.counts_;
  }

 private:
  Counts counts_{};
  std::uint64_t total_ = 0;
  // Cumulative count and intensity sums; entry i covers bins [0, i).
  std::array<std::uint64_t, kLevels + 1> prefix_count_{};
  std::array<std::uint64_t, kLevels + 1> prefix_sum_{};
};

Histogram build_histogram(const GrayImage& image);

/// Mean intensity, accumulated exactly and divided once. Throws
/// EmptyInputError on an empty histogram.
double global_mean(const Histogram& hist);

/// Mean intensity of bins [lo, hi], or nullopt when that class has no pixels.
std::optional<double> class_mean(const Histogram& hist, int lo, int hi);

}  // namespace graybin
