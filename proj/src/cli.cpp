#include "graybin/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <unistd.h>
#include <utility>
#include <vector>

#include "graybin/errors.hpp"
#include "graybin/histogram.hpp"
#include "graybin/report.hpp"
#include "graybin/threshold.hpp"

namespace graybin::cli {
namespace {

namespace fs = std::filesystem;

std::string format_number(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string summary_line(const ThresholdResult& result) {
  std::string line(method_name(result.method));
  line += " estimate=" + format_number(result.estimate);
  line += " optimum=" + format_number(result.optimum);
  line += " iterations=" + std::to_string(result.iterations.size());
  if (result.degenerate) line += " degenerate=true";
  return line;
}

// Collects output files in memory and publishes them all at once: each is
// written to a sibling temp file, then renamed into place. Any failure
// removes the temps and whatever was already renamed.
class StagedOutputs {
 public:
  void add(fs::path path, std::string bytes) {
    files_.emplace_back(std::move(path), std::move(bytes));
  }

  void commit() {
    std::vector<fs::path> temps;
    std::vector<fs::path> published;
    try {
      for (const auto& [path, bytes] : files_) {
        fs::path temp = path;
        temp += ".tmp." + std::to_string(::getpid());
        temps.push_back(temp);
        write_file(temp, bytes);
      }
      for (std::size_t i = 0; i < files_.size(); ++i) {
        fs::rename(temps[i], files_[i].first);
        published.push_back(files_[i].first);
      }
    } catch (...) {
      std::error_code ignored;
      for (const auto& temp : temps) fs::remove(temp, ignored);
      for (const auto& path : published) fs::remove(path, ignored);
      throw;
    }
  }

 private:
  static void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw fs::filesystem_error(
          "cannot open output", path,
          std::make_error_code(std::errc::permission_denied));
    }
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    file.close();
    if (!file) {
      throw fs::filesystem_error("cannot write output", path,
                                 std::make_error_code(std::errc::io_error));
    }
  }

  std::vector<std::pair<fs::path, std::string>> files_;
};

std::vector<Method> methods_for(Mode mode) {
  switch (mode) {
    case Mode::kMean:
      return {Method::kMean};
    case Mode::kIterative:
      return {Method::kIterative};
    case Mode::kCompare:
      break;
  }
  return {Method::kMean, Method::kIterative};
}

}  // namespace

fs::path compare_output_path(const fs::path& output, std::string_view method) {
  fs::path base = output;
  if (base.extension() == ".pgm") base.replace_extension();
  base += method == "mean" ? ".mean.pgm" : ".iter.pgm";
  return base;
}

std::variant<CliConfig, int> parse_args(int argc, const char* const* argv,
                                        std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string input;
  std::string output;
  std::string report;
  std::string histograms;
  bool ascii = false;

  CLI::App app{"Binarize 8-bit PGM images with global-mean and iterative "
               "optimum thresholds."};
  app.name("graybin");
  app.add_option("-i,--input", input, "Input PGM (P2 or P5, maxval 255)")
      ->required();
  app.add_option("-o,--output", output,
                 "Binarized output PGM. In compare mode, '.mean.pgm' and "
                 "'.iter.pgm' files are written next to it")
      ->required();
  const std::map<std::string, Mode> modes{{"mean", Mode::kMean},
                                          {"iterative", Mode::kIterative},
                                          {"compare", Mode::kCompare}};
  app.add_option("-m,--method", config.mode,
                 "Threshold method: mean, iterative or compare")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("compare");
  app.add_option("--report", report, "Write a JSON run report here");
  app.add_option("--histograms", histograms,
                 "Directory for input/output histogram CSV files");
  app.add_flag("--ascii", ascii, "Write plain (P2) output instead of raw P5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kArgumentError;
  }

  config.input_path = input;
  config.output_path = output;
  if (!report.empty()) config.report_path = report;
  if (!histograms.empty()) config.histogram_dir = histograms;
  config.flavor = ascii ? PgmFlavor::kPlain : PgmFlavor::kRaw;

  if (config.mode == Mode::kCompare && !config.report_path) {
    err << "graybin: --method compare requires --report\n";
    return kArgumentError;
  }
  return config;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.mode == Mode::kCompare && !config.report_path) {
    err << "graybin: --method compare requires --report\n";
    return kArgumentError;
  }
  try {
    const GrayImage image = load_pgm(config.input_path);
    const Histogram input_hist = build_histogram(image);

    RunReport report;
    report.input_path = config.input_path.string();
    report.width = image.width();
    report.height = image.height();

    StagedOutputs staged;
    std::vector<std::string> lines;
    const fs::path input_csv =
        config.histogram_dir ? *config.histogram_dir / "input_histogram.csv"
                             : fs::path();
    if (config.histogram_dir) {
      report.histogram_input_path = input_csv.string();
      staged.add(input_csv, emit_histogram_csv(input_hist));
    }

    for (Method method : methods_for(config.mode)) {
      const std::string name(method_name(method));
      ThresholdResult result = method == Method::kMean
                                   ? mean_threshold(input_hist)
                                   : iterative_optimum_threshold(input_hist);
      const BinaryImage binary = binarize(image, result.optimum);

      const fs::path image_path =
          config.mode == Mode::kCompare
              ? compare_output_path(config.output_path, name)
              : config.output_path;
      staged.add(image_path, write_pgm(binary, config.flavor));
      report.output_image_paths[name] = image_path.string();

      if (config.histogram_dir) {
        const fs::path csv =
            *config.histogram_dir / ("output_histogram." + name + ".csv");
        staged.add(csv, emit_histogram_csv(Histogram::of(binary.as_gray())));
        report.histogram_output_paths[name] = csv.string();
      }

      lines.push_back(summary_line(result));
      if (method == Method::kMean) {
        report.mean_result = std::move(result);
      } else {
        report.iterative_result = std::move(result);
      }
    }
    if (config.report_path) staged.add(*config.report_path, emit_report(report));

    if (config.histogram_dir) fs::create_directories(*config.histogram_dir);
    staged.commit();
    for (const auto& line : lines) out << line << '\n';
    return kOk;
  } catch (const fs::filesystem_error& e) {
    err << "graybin: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "graybin: " << config.input_path.string() << ": " << e.what()
        << '\n';
    return kFormatError;
  } catch (const ArgumentError& e) {
    err << "graybin: " << e.what() << '\n';
    return kArgumentError;
  } catch (const Error& e) {
    err << "graybin: " << e.what() << '\n';
    return kFormatError;
  }
}

int main_entry(int argc, const char* const* argv) {
  auto parsed = parse_args(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<CliConfig>(parsed), std::cout, std::cerr);
}

}  // namespace graybin::cli
