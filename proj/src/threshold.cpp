#include "graybin/threshold.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace graybin {
namespace {

__extension__ typedef __int128 i128;

// Non-negative rational; enough to decide floor() exactly.
struct Ratio {
  i128 num;
  i128 den;

  int floor() const { return static_cast<int>(num / den); }
};

i128 gcd(i128 a, i128 b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

Ratio reduced(i128 num, i128 den) {
  const i128 g = gcd(num, den);
  return g > 1 ? Ratio{num / g, den / g} : Ratio{num, den};
}

// (m1 + m2) / 2 = (S1 n2 + S2 n1) / (2 n1 n2) for non-empty classes.
Ratio midpoint(const ClassStats& lower, const ClassStats& upper) {
  const i128 n1 = lower.count;
  const i128 n2 = upper.count;
  return reduced(i128(lower.sum) * n2 + i128(upper.sum) * n1, 2 * n1 * n2);
}

ClassStats upper_class(const Histogram& hist, int split) {
  return split >= kLevels - 1 ? ClassStats{}
                              : hist.class_stats(split + 1, kLevels - 1);
}

void require_pixels(const Histogram& hist) {
  if (hist.total() == 0) {
    throw EmptyInputError("threshold selection needs at least one pixel");
  }
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kMean:
      return "mean";
    case Method::kIterative:
      return "iterative";
  }
  return "unknown";
}

NonConvergenceError::NonConvergenceError(std::vector<IterationStep> trace)
    : Error("iterative threshold did not converge within " +
            std::to_string(trace.size()) + " iterations"),
      trace_(std::move(trace)) {}

int round_half_up(double value) {
  return static_cast<int>(std::floor(value + 0.5));
}

BinaryImage binarize(const GrayImage& image, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 255.0)) {
    throw ArgumentError("threshold " + std::to_string(threshold) +
                        " outside [0, 255]");
  }
  // Integer pixels: p > T exactly when p > floor(T).
  const int cut = static_cast<int>(std::floor(threshold));
  std::array<std::uint8_t, kLevels> lut{};
  for (int v = 0; v < kLevels; ++v) {
    lut[v] = v > cut ? BinaryImage::kForeground : BinaryImage::kBackground;
  }
  std::vector<std::uint8_t> out;
  out.reserve(image.size());
  for (std::uint8_t p : image.pixels()) out.push_back(lut[p]);
  return BinaryImage(image.width(), image.height(), std::move(out));
}

ThresholdResult mean_threshold(const Histogram& hist) {
  require_pixels(hist);
  const double mean = global_mean(hist);
  return ThresholdResult{.method = Method::kMean,
                         .estimate = mean,
                         .optimum = mean,
                         .iterations = {},
                         .converged = true,
                         .degenerate = false};
}

ThresholdResult mean_threshold(const GrayImage& image) {
  return mean_threshold(build_histogram(image));
}

ThresholdResult iterative_optimum_threshold(const Histogram& hist,
                                            std::size_t max_iterations) {
  require_pixels(hist);
  ThresholdResult result;
  result.method = Method::kIterative;
  result.estimate = global_mean(hist);

  Ratio exact{hist.intensity_sum(), hist.total()};
  double current = result.estimate;
  while (result.iterations.size() < max_iterations) {
    const int split = exact.floor();
    const ClassStats lower = hist.class_stats(0, split);
    const ClassStats upper = upper_class(hist, split);

    IterationStep step{.estimate = current,
                       .m1 = lower.mean(),
                       .m2 = upper.mean(),
                       .total_mean = std::nullopt};
    if (lower.empty() || upper.empty()) {
      result.iterations.push_back(step);
      result.optimum = current;
      result.degenerate = true;
      return result;
    }

    const Ratio next = midpoint(lower, upper);
    const double next_value = (*step.m1 + *step.m2) / 2.0;
    step.total_mean = next_value;
    result.iterations.push_back(step);

    if (next.floor() == split) {
      result.optimum = next_value;
      result.converged = true;
      return result;
    }
    exact = next;
    current = next_value;
  }
  throw NonConvergenceError(std::move(result.iterations));
}

ThresholdResult iterative_optimum_threshold(const GrayImage& image,
                                            std::size_t max_iterations) {
  return iterative_optimum_threshold(build_histogram(image), max_iterations);
}

std::vector<int> fixed_point_oracle(const Histogram& hist) {
  std::vector<int> points;
  for (int t = 0; t < kLevels - 1; ++t) {
    const ClassStats lower = hist.class_stats(0, t);
    const ClassStats upper = hist.class_stats(t + 1, kLevels - 1);
    if (lower.empty() || upper.empty()) continue;
    // |t - (S1 n2 + S2 n1) / (2 n1 n2)| < 1, cross-multiplied.
    const i128 den = 2 * i128(lower.count) * i128(upper.count);
    const i128 num =
        i128(lower.sum) * i128(upper.count) + i128(upper.sum) * i128(lower.count);
    i128 diff = i128(t) * den - num;
    if (diff < 0) diff = -diff;
    if (diff < den) points.push_back(t);
  }
  return points;
}

}  // namespace graybin
