#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "graybin/histogram.hpp"
#include "graybin/threshold.hpp"

namespace graybin {

/// Everything one run produced: the four-panel layout of input image,
/// binarized image and their two histograms, plus the thresholds.
struct RunReport {
  std::string input_path;
  std::size_t width = 0;
  std::size_t height = 0;
  std::optional<ThresholdResult> mean_result;
  std::optional<ThresholdResult> iterative_result;
  std::optional<std::string> histogram_input_path;
  // Keyed by method name ("mean", "iterative").
  std::map<std::string, std::string> histogram_output_paths;
  std::map<std::string, std::string> output_image_paths;
};

/// Tag recording how the starting estimate is obtained.
inline constexpr const char* kEstimateSource = "global_mean";

/// JSON text with a fixed key order. Throws ArgumentError if neither result
/// is present. Schema: docs/report-schema.md.
std::string emit_report(const RunReport& report);

/// Header "value,count" then one row per bin 0..255.
std::string emit_histogram_csv(const Histogram& hist);

}  // namespace graybin
