#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "graybin/errors.hpp"
#include "graybin/histogram.hpp"
#include "graybin/image.hpp"

namespace graybin {

enum class Method { kMean, kIterative };

std::string_view method_name(Method method);

/// One pass of the iterative selection loop. Class 1 is [0, floor(estimate)],
/// class 2 is the rest; an empty class leaves its mean (and total_mean) unset.
struct IterationStep {
  double estimate = 0.0;
  std::optional<double> m1;
  std::optional<double> m2;
  std::optional<double> total_mean;

  friend bool operator==(const IterationStep&, const IterationStep&) = default;
};

struct ThresholdResult {
  Method method = Method::kMean;
  double estimate = 0.0;
  double optimum = 0.0;
  std::vector<IterationStep> iterations;
  bool converged = false;
  bool degenerate = false;

  friend bool operator==(const ThresholdResult&,
                         const ThresholdResult&) = default;
};

inline constexpr std::size_t kMaxIterations = 256;

/// Iterative selection did not settle within the iteration cap.
class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(std::vector<IterationStep> trace);
  const std::vector<IterationStep>& trace() const noexcept { return trace_; }

 private:
  std::vector<IterationStep> trace_;
};

/// Integer form of a real threshold, rounding halves up.
int round_half_up(double value);

/// 255 where pixel > threshold, 0 where pixel <= threshold.
/// Throws ArgumentError unless 0 <= threshold <= 255.
BinaryImage binarize(const GrayImage& image, double threshold);

/// Global-mean thresholding: estimate and optimum are both the mean intensity.
ThresholdResult mean_threshold(const Histogram& hist);
ThresholdResult mean_threshold(const GrayImage& image);

/// Iterative optimum threshold selection.
///
/// Starts from the global mean T. Each step splits the histogram at floor(T),
/// takes the class means m1 and m2 and sets total_mean = (m1 + m2) / 2. The
/// loop stops once total_mean falls in the same unit interval as T, which
/// implies |T - total_mean| < 1, and reports total_mean as the optimum. When a
/// class is empty (e.g. a constant image) the current T is returned with
/// `degenerate` set. Split decisions use exact rational arithmetic; reported
/// values are doubles.
///
/// Throws NonConvergenceError (carrying the trace) after `max_iterations`
/// steps without settling.
ThresholdResult iterative_optimum_threshold(
    const Histogram& hist, std::size_t max_iterations = kMaxIterations);
ThresholdResult iterative_optimum_threshold(
    const GrayImage& image, std::size_t max_iterations = kMaxIterations);

/// Exhaustive scan for integer fixed points: every t in [0, 255] where both
/// [0, t] and [t + 1, 255] are non-empty and |t - (m1(t) + m2(t)) / 2| < 1.
/// Returned in ascending order.
std::vector<int> fixed_point_oracle(const Histogram& hist);

}  // namespace graybin
