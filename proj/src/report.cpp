#include "graybin/report.hpp"

#include <json.hpp>

#include "graybin/errors.hpp"

namespace graybin {
namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json to_json(const ThresholdResult& result) {
  Json trace = Json::array();
  for (const IterationStep& step : result.iterations) {
    trace.push_back(Json{{"estimate", step.estimate},
                         {"m1", optional_number(step.m1)},
                         {"m2", optional_number(step.m2)},
                         {"total_mean", optional_number(step.total_mean)}});
  }
  return Json{{"method", std::string(method_name(result.method))},
              {"estimate", result.estimate},
              {"estimate_rounded", round_half_up(result.estimate)},
              {"optimum", result.optimum},
              {"rounded", round_half_up(result.optimum)},
              {"iterations", result.iterations.size()},
              {"converged", result.converged},
              {"degenerate", result.degenerate},
              {"trace", std::move(trace)}};
}

Json path_map(const std::map<std::string, std::string>& paths) {
  Json out = Json::object();
  for (const auto& [method, path] : paths) out[method] = path;
  return out;
}

}  // namespace

std::string emit_report(const RunReport& report) {
  if (!report.mean_result && !report.iterative_result) {
    throw ArgumentError("report needs at least one threshold result");
  }
  Json results = Json::object();
  if (report.mean_result) results["mean"] = to_json(*report.mean_result);
  if (report.iterative_result) {
    results["iterative"] = to_json(*report.iterative_result);
  }

  Json doc{
      {"input_path", report.input_path},
      {"width", report.width},
      {"height", report.height},
      {"estimate_source", kEstimateSource},
      {"results", std::move(results)},
      {"outputs", path_map(report.output_image_paths)},
      {"histograms",
       Json{{"input", report.histogram_input_path
                          ? Json(*report.histogram_input_path)
                          : Json(nullptr)},
            {"output", path_map(report.histogram_output_paths)}}},
  };
  return doc.dump(2) + "\n";
}

std::string emit_histogram_csv(const Histogram& hist) {
  std::string out = "value,count\n";
  for (int v = 0; v < kLevels; ++v) {
    out += std::to_string(v);
    out += ',';
    out += std::to_string(hist.count(v));
    out += '\n';
  }
  return out;
}

}  // namespace graybin
