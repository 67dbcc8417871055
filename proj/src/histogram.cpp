#include "graybin/histogram.hpp"

#include <string>

#include "graybin/errors.hpp"

namespace graybin {

std::optional<double> ClassStats::mean() const noexcept {
  if (count == 0) return std::nullopt;
  return static_cast<double>(sum) / static_cast<double>(count);
}

Histogram::Histogram(const Counts& counts) : counts_(counts) {
  for (int v = 0; v < kLevels; ++v) {
    prefix_count_[v + 1] = prefix_count_[v] + counts_[v];
    prefix_sum_[v + 1] =
        prefix_sum_[v] + static_cast<std::uint64_t>(v) * counts_[v];
  }
  total_ = prefix_count_[kLevels];
}

Histogram Histogram::of(const GrayImage& image) {
  Counts counts{};
  for (std::uint8_t p : image.pixels()) ++counts[p];
  return Histogram(counts);
}

ClassStats Histogram::class_stats(int lo, int hi) const {
  if (lo < 0 || hi > kLevels - 1 || lo > hi) {
    throw ArgumentError("invalid intensity class [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
  }
  return {prefix_count_[hi + 1] - prefix_count_[lo],
          prefix_sum_[hi + 1] - prefix_sum_[lo]};
}

Histogram build_histogram(const GrayImage& image) {
  return Histogram::of(image);
}

double global_mean(const Histogram& hist) {
  if (hist.total() == 0) {
    throw EmptyInputError("mean of an empty histogram");
  }
  return static_cast<double>(hist.intensity_sum()) /
         static_cast<double>(hist.total());
}

std::optional<double> class_mean(const Histogram& hist, int lo, int hi) {
  return hist.class_stats(lo, hi).mean();
}

}  // namespace graybin
