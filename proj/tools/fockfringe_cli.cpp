// Command-line front end for the fockfringe shared library. Emits CSV only;
// delays are taken in femtoseconds and converted to seconds at the API line.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fockfringe.h"

namespace {

constexpr double kFsToS = 1e-15;

struct Options {
  int n = 0;
  int m = 0;
  std::string pattern;
  double tau_fs = 0.0;
  double tau_start_fs = 0.0;
  double tau_stop_fs = 770.0;
  double tau_step_fs = 110.0;
  int theta_samples = 256;
  double theta = 0.0;
  bool theta_set = false;
  double omega0 = ff_default_omega0();
  double delta_omega = ff_default_delta_omega();
  std::string output;
  std::string figure_id;
  std::string input;
  int harmonic = 1;
};

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

int fail_status(ff_status status) {
  std::cerr << "error: " << ff_status_name(status) << ": " << ff_last_error() << "\n";
  return status == FF_ERR_DATA ? 2 : 1;
}

bool parse_pattern(const std::string& text, int& at_c, int& at_d) {
  char extra = 0;
  return std::sscanf(text.c_str(), "%d,%d%c", &at_c, &at_d, &extra) == 2;
}

// Writes to the path when given, standard output otherwise.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      target_ = &file_;
    }
  }
  bool ok() const { return target_ != &file_ || file_.is_open(); }
  std::ostream& out() { return *target_; }

private:
  std::ofstream file_;
  std::ostream* target_ = &std::cout;
};

std::vector<double> delay_grid_fs(double start, double stop, double step) {
  const int count = static_cast<int>((stop - start) / step + 1e-9) + 1;
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = start + i * step;
  return grid;
}

int run_fringe(const Options& opt) {
  int at_c = 0;
  int at_d = 0;
  if (!parse_pattern(opt.pattern, at_c, at_d))
    return fail_usage("pattern must be two comma-separated counts, e.g. 2,1");
  Sink sink(opt.output);
  if (!sink.ok()) return fail_usage("cannot open output file: " + opt.output);
  sink.out() << "theta_rad,probability\n";

  if (opt.theta_set) {
    double probability = 0.0;
    const ff_status status = ff_probability(opt.n, opt.m, at_c, at_d, opt.tau_fs * kFsToS,
                                            opt.theta, opt.omega0, opt.delta_omega,
                                            &probability);
    if (status != FF_OK) return fail_status(status);
    sink.out() << fmt(opt.theta) << ',' << fmt(probability) << '\n';
    return 0;
  }

  ff_scan* scan = nullptr;
  const ff_status status =
      ff_scan_create(opt.n, opt.m, at_c, at_d, opt.tau_fs * kFsToS, opt.omega0,
                     opt.delta_omega, opt.theta_samples, &scan);
  if (status != FF_OK) return fail_status(status);
  const std::unique_ptr<ff_scan, decltype(&ff_scan_free)> guard(scan, &ff_scan_free);
  const int size = ff_scan_size(scan);
  std::vector<double> thetas(static_cast<std::size_t>(size));
  std::vector<double> probabilities(static_cast<std::size_t>(size));
  ff_scan_copy(scan, thetas.data(), probabilities.data());
  for (int i = 0; i < size; ++i)
    sink.out() << fmt(thetas[static_cast<std::size_t>(i)]) << ','
               << fmt(probabilities[static_cast<std::size_t>(i)]) << '\n';
  return 0;
}

int emit_vis_curve(const Options& opt, int n, int m, int at_c, int at_d,
                   const std::vector<double>& grid_fs, Sink& sink) {
  std::vector<double> taus_s(grid_fs.size());
  for (std::size_t i = 0; i < grid_fs.size(); ++i) taus_s[i] = grid_fs[i] * kFsToS;
  ff_vis_curve* curve = nullptr;
  const ff_status status =
      ff_vis_curve_create(n, m, at_c, at_d, taus_s.data(), static_cast<int>(taus_s.size()),
                          opt.omega0, opt.delta_omega, opt.theta_samples, &curve);
  if (status != FF_OK) return fail_status(status);
  const std::unique_ptr<ff_vis_curve, decltype(&ff_vis_curve_free)> guard(curve,
                                                                          &ff_vis_curve_free);
  sink.out() << "tau_fs,visibility,signed_contrast,dominant_harmonic\n";
  for (int i = 0; i < ff_vis_curve_size(curve); ++i) {
    double visibility = 0.0;
    double contrast = 0.0;
    int harmonic = 0;
    ff_vis_curve_point(curve, i, nullptr, &visibility, &contrast, &harmonic);
    sink.out() << fmt(grid_fs[static_cast<std::size_t>(i)]) << ',' << fmt(visibility) << ','
               << fmt(contrast) << ',' << harmonic << '\n';
  }
  return 0;
}

int emit_surface(const Options& opt, int n, int m, int at_c, int at_d,
                 const std::vector<double>& grid_fs, Sink& sink) {
  sink.out() << "tau_fs,theta_rad,probability\n";
  for (const double tau_fs : grid_fs) {
    ff_scan* scan = nullptr;
    const ff_status status = ff_scan_create(n, m, at_c, at_d, tau_fs * kFsToS, opt.omega0,
                                            opt.delta_omega, opt.theta_samples, &scan);
    if (status != FF_OK) return fail_status(status);
    const std::unique_ptr<ff_scan, decltype(&ff_scan_free)> guard(scan, &ff_scan_free);
    const int size = ff_scan_size(scan);
    std::vector<double> thetas(static_cast<std::size_t>(size));
    std::vector<double> probabilities(static_cast<std::size_t>(size));
    ff_scan_copy(scan, thetas.data(), probabilities.data());
    for (int i = 0; i < size; ++i)
      sink.out() << fmt(tau_fs) << ',' << fmt(thetas[static_cast<std::size_t>(i)]) << ','
                 << fmt(probabilities[static_cast<std::size_t>(i)]) << '\n';
  }
  return 0;
}

int run_vis_curve(const Options& opt) {
  int at_c = 0;
  int at_d = 0;
  if (!parse_pattern(opt.pattern, at_c, at_d))
    return fail_usage("pattern must be two comma-separated counts, e.g. 2,1");
  if (!(opt.tau_step_fs > 0.0) || opt.tau_stop_fs < opt.tau_start_fs)
    return fail_usage("delay grid requires tau-step > 0 and tau-stop >= tau-start");
  Sink sink(opt.output);
  if (!sink.ok()) return fail_usage("cannot open output file: " + opt.output);
  return emit_vis_curve(opt, opt.n, opt.m, at_c, at_d,
                        delay_grid_fs(opt.tau_start_fs, opt.tau_stop_fs, opt.tau_step_fs),
                        sink);
}

struct FigurePreset {
  int n;
  int m;
  int at_c;
  int at_d;
  bool surface;
  double start_fs;
  double stop_fs;
  double step_fs;
};

int run_figure(const Options& opt, bool n_set, bool pattern_set, bool grid_set) {
  FigurePreset preset{};
  bool needs_overrides = false;
  if (opt.figure_id == "2e")
    preset = {1, 0, 0, 1, false, 0.0, 770.0, 5.0};
  else if (opt.figure_id == "2j")
    preset = {2, 1, 2, 1, false, 0.0, 770.0, 5.0};
  else if (opt.figure_id == "3a")
    preset = {1, 0, 0, 1, true, 0.0, 1250.0, 10.0};
  else if (opt.figure_id == "3b")
    preset = {2, 1, 2, 1, true, 0.0, 1250.0, 10.0};
  else if (opt.figure_id == "3c")
    preset = {3, 1, 2, 2, true, 0.0, 1250.0, 10.0};
  else if (opt.figure_id == "3d")
    preset = {3, 2, 4, 1, true, 0.0, 1250.0, 10.0};
  else if (opt.figure_id == "3e")
    preset = {5, 3, 6, 2, true, 0.0, 1250.0, 10.0};
  else if (opt.figure_id == "3f") {
    preset = {0, 0, 0, 0, true, 0.0, 1250.0, 10.0};
    needs_overrides = true;
  } else {
    return fail_usage("unknown figure id: " + opt.figure_id +
                      " (expected 2e, 2j, 3a, 3b, 3c, 3d, 3e, or 3f)");
  }

  if (needs_overrides) {
    // The N00N panel fixes neither its photon number nor its detector split.
    if (!n_set || !pattern_set) return fail_usage("figure 3f requires --n and --pattern");
    preset.n = opt.n;
    preset.m = 0;
    if (!parse_pattern(opt.pattern, preset.at_c, preset.at_d))
      return fail_usage("pattern must be two comma-separated counts, e.g. 2,1");
  } else if (n_set || pattern_set) {
    return fail_usage("only figure 3f accepts --n and --pattern");
  }

  double start = preset.start_fs;
  double stop = preset.stop_fs;
  double step = preset.step_fs;
  if (grid_set) {
    start = opt.tau_start_fs;
    stop = opt.tau_stop_fs;
    step = opt.tau_step_fs;
    if (!(step > 0.0) || stop < start)
      return fail_usage("delay grid requires tau-step > 0 and tau-stop >= tau-start");
  }

  Sink sink(opt.output);
  if (!sink.ok()) return fail_usage("cannot open output file: " + opt.output);
  const auto grid = delay_grid_fs(start, stop, step);
  return preset.surface
             ? emit_surface(opt, preset.n, preset.m, preset.at_c, preset.at_d, grid, sink)
             : emit_vis_curve(opt, preset.n, preset.m, preset.at_c, preset.at_d, grid, sink);
}

int run_budget(const Options& opt) {
  int at_c = 0;
  int at_d = 0;
  if (!parse_pattern(opt.pattern, at_c, at_d))
    return fail_usage("pattern must be two comma-separated counts, e.g. 2,1");
  ff_budget* budget = nullptr;
  const ff_status status =
      ff_budget_create(opt.n, opt.m, at_c, at_d, opt.tau_fs * kFsToS, opt.omega0,
                       opt.delta_omega, opt.theta_samples, &budget);
  if (status != FF_OK) return fail_status(status);
  const std::unique_ptr<ff_budget, decltype(&ff_budget_free)> guard(budget, &ff_budget_free);
  Sink sink(opt.output);
  if (!sink.ok()) return fail_usage("cannot open output file: " + opt.output);
  sink.out() << "non_tilded_count,offset,amplitude,phase\n";
  for (int i = 0; i < ff_budget_size(budget); ++i) {
    int count = 0;
    double offset = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;
    ff_budget_part(budget, i, &count, &offset, &amplitude, &phase);
    sink.out() << count << ',' << fmt(offset) << ',' << fmt(amplitude) << ',' << fmt(phase)
               << '\n';
  }
  return 0;
}

int run_fit(const Options& opt) {
  std::ifstream input(opt.input);
  if (!input) return fail_usage("cannot open input file: " + opt.input);

  std::string line;
  if (!std::getline(input, line)) {
    std::cerr << "error: empty input file\n";
    return 2;
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool with_stddev = false;
  if (line == "theta_rad,counts,stddev")
    with_stddev = true;
  else if (line != "theta_rad,counts") {
    std::cerr << "error: expected header theta_rad,counts[,stddev], got: " << line << "\n";
    return 2;
  }

  std::vector<double> thetas;
  std::vector<double> counts;
  std::vector<double> stddevs;
  int line_number = 1;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        std::cerr << "error: line " << line_number << ": not a number: " << cell << "\n";
        return 2;
      }
      values.push_back(value);
    }
    if (values.size() != (with_stddev ? 3u : 2u)) {
      std::cerr << "error: line " << line_number << ": expected "
                << (with_stddev ? 3 : 2) << " columns\n";
      return 2;
    }
    thetas.push_back(values[0]);
    counts.push_back(values[1]);
    if (with_stddev) stddevs.push_back(values[2]);
  }
  if (thetas.size() < 4) {
    std::cerr << "error: sinusoid fit needs at least 4 data rows, got " << thetas.size()
              << "\n";
    return 2;
  }

  double offset = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double residual = 0.0;
  double visibility = 0.0;
  int negative_offset = 0;
  const ff_status status = ff_fit_sinusoid(
      thetas.data(), counts.data(), with_stddev ? stddevs.data() : nullptr,
      static_cast<int>(thetas.size()), opt.harmonic, &offset, &amplitude, &phase, &residual,
      &visibility, &negative_offset);
  if (status != FF_OK) return fail_status(status);

  std::cout << "offset " << fmt(offset) << '\n'
            << "amplitude " << fmt(amplitude) << '\n'
            << "phase " << fmt(phase) << '\n'
            << "visibility " << fmt(visibility) << '\n'
            << "residual " << fmt(residual) << '\n'
            << "negative_offset " << negative_offset << '\n';

  std::string curve_path = opt.output;
  if (curve_path.empty()) {
    std::filesystem::path p(opt.input);
    p.replace_filename(p.stem().string() + "_fit.csv");
    curve_path = p.string();
  }
  std::ofstream curve(curve_path, std::ios::binary);
  if (!curve) return fail_usage("cannot open output file: " + curve_path);
  curve << "theta_rad,counts,fitted\n";
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double fitted = offset + amplitude * std::cos(opt.harmonic * thetas[i] + phase);
    curve << fmt(thetas[i]) << ',' << fmt(counts[i]) << ',' << fmt(fitted) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-photon interference fringes of (|N,M>+|M,N>)/sqrt2 inputs\n"
               "on a balanced beam splitter, with a variable path delay"};
  app.require_subcommand(1);
  Options opt;

  const auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--omega0", opt.omega0, "Carrier angular frequency (rad/s)")
        ->capture_default_str();
    cmd->add_option("--delta-omega", opt.delta_omega, "Wavepacket bandwidth (rad/s)")
        ->capture_default_str();
    cmd->add_option("--theta-samples", opt.theta_samples, "Phase samples per scan")
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "Write CSV here instead of standard output");
  };

  CLI::App* fringe = app.add_subcommand("fringe", "Phase scan of one detection probability");
  fringe->add_option("--n", opt.n, "Larger photon count N")->required();
  fringe->add_option("--m", opt.m, "Smaller photon count M")->required();
  fringe->add_option("--pattern", opt.pattern, "Detection pattern C,D")->required();
  fringe->add_option("--tau-fs", opt.tau_fs, "Path-B delay (fs)")->capture_default_str();
  CLI::Option* theta_opt =
      fringe->add_option("--theta", opt.theta, "Single phase query instead of a scan");
  add_spec_flags(fringe);

  CLI::App* vis = app.add_subcommand("vis-curve", "Visibility and signed contrast vs delay");
  vis->add_option("--n", opt.n, "Larger photon count N")->required();
  vis->add_option("--m", opt.m, "Smaller photon count M")->required();
  vis->add_option("--pattern", opt.pattern, "Detection pattern C,D")->required();
  vis->add_option("--tau-start", opt.tau_start_fs, "Grid start (fs)")->capture_default_str();
  vis->add_option("--tau-stop", opt.tau_stop_fs, "Grid stop (fs)")->capture_default_str();
  vis->add_option("--tau-step", opt.tau_step_fs, "Grid step (fs)")->capture_default_str();
  add_spec_flags(vis);

  CLI::App* figure = app.add_subcommand("figure", "Preset curves and fringe surfaces");
  figure->add_option("id", opt.figure_id, "One of 2e, 2j, 3a, 3b, 3c, 3d, 3e, 3f")
      ->required();
  CLI::Option* fig_n = figure->add_option("--n", opt.n, "Photon count N (figure 3f only)");
  CLI::Option* fig_pattern =
      figure->add_option("--pattern", opt.pattern, "Detection pattern C,D (figure 3f only)");
  CLI::Option* fig_start =
      figure->add_option("--tau-start", opt.tau_start_fs, "Grid start override (fs)");
  CLI::Option* fig_stop =
      figure->add_option("--tau-stop", opt.tau_stop_fs, "Grid stop override (fs)");
  CLI::Option* fig_step =
      figure->add_option("--tau-step", opt.tau_step_fs, "Grid step override (fs)");
  add_spec_flags(figure);

  CLI::App* budget = app.add_subcommand("budget", "Fringe split by interfering photon count");
  budget->add_option("--n", opt.n, "Larger photon count N")->required();
  budget->add_option("--m", opt.m, "Smaller photon count M")->required();
  budget->add_option("--pattern", opt.pattern, "Detection pattern C,D")->required();
  budget->add_option("--tau-fs", opt.tau_fs, "Path-B delay (fs)")->capture_default_str();
  add_spec_flags(budget);

  CLI::App* fit = app.add_subcommand("fit", "Sinusoidal fit of measured fringe counts");
  fit->add_option("input", opt.input, "CSV with theta_rad,counts[,stddev]")->required();
  fit->add_option("--harmonic", opt.harmonic, "Fringe harmonic of the model")
      ->capture_default_str();
  fit->add_option("--output", opt.output, "Fitted curve CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  opt.theta_set = theta_opt->count() > 0;
  if (fringe->parsed()) return run_fringe(opt);
  if (vis->parsed()) return run_vis_curve(opt);
  if (figure->parsed())
    return run_figure(opt, fig_n->count() > 0, fig_pattern->count() > 0,
                      fig_start->count() > 0 || fig_stop->count() > 0 || fig_step->count() > 0);
  if (budget->parsed()) return run_budget(opt);
  if (fit->parsed()) return run_fit(opt);
  return 1;
}
