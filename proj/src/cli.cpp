#include "contrast/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <optional>
#include <ostream>

#include "contrast/fuzzy_config_json.hpp"
#include "contrast/metrics.hpp"
#include "contrast/pgm.hpp"
#include "contrast/report.hpp"
#include "contrast/synth.hpp"

namespace contrast::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> as_bytes(const std::string& s) { return {s.begin(), s.end()}; }

std::optional<FuzzyConfig> maybe_load_config(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_fuzzy_config(path);
}

int cmd_enhance(const std::string& input, const std::string& output, const std::string& method_name,
                const std::string& config_path, const std::string& format, std::ostream& out) {
  const auto method = parse_method(method_name);
  if (!method) throw UsageError("unknown method '" + method_name + "'");
  const auto cfg = maybe_load_config(config_path);
  const GrayImage img = read_pgm_file(input);
  const GrayImage result = enhance(img, *method, cfg);
  write_pgm_file(output, result, format == "p2" ? PgmFormat::P2 : PgmFormat::P5);
  out << to_string(*method) << " " << img.width() << "x" << img.height() << " -> " << output
      << "\n";
  return kOk;
}

int cmd_metrics(const std::string& original_path, const std::string& processed_path,
                std::ostream& out) {
  const GrayImage original = read_pgm_file(original_path);
  const GrayImage processed = read_pgm_file(processed_path);
  const MetricsReport m = evaluate(original, processed, "");
  out << kMetricsHeader << "\n" << metrics_csv_fields(m) << "\n";
  return kOk;
}

int cmd_histogram(const std::string& input, const std::string& output) {
  const GrayImage img = read_pgm_file(input);
  write_file(output, as_bytes(histogram_csv(histogram(img))));
  return kOk;
}

int cmd_synth(const std::string& output, std::size_t width, std::size_t height, int lo, int hi,
              std::uint64_t seed) {
  if (lo > hi) throw UsageError("--lo must not exceed --hi");
  write_pgm_file(output, synth_uniform(width, height, lo, hi, seed));
  return kOk;
}

int cmd_report(const std::vector<std::string>& inputs, const std::vector<std::string>& method_names,
               const std::string& output, const std::string& config_path, std::ostream& out,
               std::ostream& err) {
  std::vector<Method> methods;
  for (const auto& name : method_names) {
    if (name.empty()) continue;
    const auto m = parse_method(name);
    if (!m) throw UsageError("unknown method '" + name + "'");
    methods.push_back(*m);
  }
  if (methods.empty()) throw UsageError("--methods must name at least one method");
  const auto cfg = maybe_load_config(config_path);

  std::vector<ReportRow> rows;
  bool failed = false;
  for (const auto& path : inputs) {
    try {
      const GrayImage img = read_pgm_file(path);
      const std::string label = std::filesystem::path(path).filename().string();
      for (Method m : methods) {
        rows.push_back({label, evaluate(img, enhance(img, m, cfg), to_string(m))});
      }
    } catch (const std::exception& e) {
      err << "report: skipping '" << path << "': " << e.what() << "\n";
      failed = true;
    }
  }
  write_file(output, as_bytes(report_csv(rows)));
  out << "wrote " << rows.size() << " rows to " << output << "\n";
  return failed ? kPartialFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grayscale contrast enhancement and evaluation", "contrast"};
  app.require_subcommand(1);

  std::string input, output, method, config_path, format = "p5";
  auto* enhance_cmd = app.add_subcommand("enhance", "Enhance a PGM image");
  enhance_cmd->add_option("input", input, "Input PGM")->required();
  enhance_cmd->add_option("output", output, "Output PGM")->required();
  enhance_cmd->add_option("--method", method, "he | bbhe | mmbebhe | fuzzy")->required();
  enhance_cmd->add_option("--fuzzy-config", config_path, "JSON fuzzy configuration");
  enhance_cmd->add_option("--format", format, "Output encoding")
      ->check(CLI::IsMember({"p2", "p5"}));

  std::string original, processed;
  auto* metrics_cmd = app.add_subcommand("metrics", "Compare an original and a processed PGM");
  metrics_cmd->add_option("original", original)->required();
  metrics_cmd->add_option("processed", processed)->required();

  std::vector<std::string> inputs, methods;
  auto* report_cmd = app.add_subcommand("report", "Enhance and evaluate a batch of images");
  report_cmd->add_option("inputs", inputs, "Input PGMs")->required();
  report_cmd->add_option("--methods", methods, "Comma-separated methods")
      ->required()
      ->delimiter(',');
  report_cmd->add_option("--output,-o", output, "Output CSV")->required();
  report_cmd->add_option("--fuzzy-config", config_path, "JSON fuzzy configuration");

  auto* hist_cmd = app.add_subcommand("histogram", "Write the intensity histogram as CSV");
  hist_cmd->add_option("input", input)->required();
  hist_cmd->add_option("output", output)->required();

  std::size_t width = 64, height = 64;
  int lo = 100, hi = 156;
  std::uint64_t seed = 1;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a uniform random low-contrast PGM");
  synth_cmd->add_option("output", output)->required();
  synth_cmd->add_option("--width", width)->check(CLI::PositiveNumber);
  synth_cmd->add_option("--height", height)->check(CLI::PositiveNumber);
  synth_cmd->add_option("--lo", lo)->check(CLI::Range(0, 255));
  synth_cmd->add_option("--hi", hi)->check(CLI::Range(0, 255));
  synth_cmd->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enhance_cmd) return cmd_enhance(input, output, method, config_path, format, out);
    if (*metrics_cmd) return cmd_metrics(original, processed, out);
    if (*report_cmd) return cmd_report(inputs, methods, output, config_path, out, err);
    if (*hist_cmd) return cmd_histogram(input, output);
    if (*synth_cmd) return cmd_synth(output, width, height, lo, hi, seed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace contrast::cli
