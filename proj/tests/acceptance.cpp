// End-to-end gate: one line per criterion, exit code = number of failures.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fockfringe/analysis.hpp"
#include "fockfringe/fock.hpp"
#include "fockfringe/oracle.hpp"

using namespace fockfringe;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int g_failures = 0;

void report(int index, bool pass, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", index, text.c_str());
  if (!pass) ++g_failures;
}

std::string num(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.3g", value);
  return buffer;
}

double alpha_mag_at(double tau, const WavepacketSpec& spec) {
  return std::exp(-spec.delta_omega * spec.delta_omega * tau * tau / 4.0);
}

std::vector<double> quartz_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 8; ++i) grid.push_back(i * 110e-15);
  return grid;
}

double contrast_at(double tau, const WavepacketSpec& spec) {
  return scan_visibility(fringe_scan(2, 1, {2, 1}, tau, spec)).signed_contrast;
}

int sign_changes(const std::vector<VisibilityPoint>& curve, double* first_low = nullptr,
                 double* first_high = nullptr) {
  int changes = 0;
  double previous = 0.0;
  double previous_tau = 0.0;
  for (const auto& point : curve) {
    if (std::abs(point.signed_contrast) < 1e-9) continue;
    if (previous != 0.0 && previous * point.signed_contrast < 0.0) {
      if (changes == 0) {
        if (first_low != nullptr) *first_low = previous_tau;
        if (first_high != nullptr) *first_high = point.tau;
      }
      ++changes;
    }
    previous = point.signed_contrast;
    previous_tau = point.tau;
  }
  return changes;
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void criterion_1(const WavepacketSpec& spec) {
  const auto curve = visibility_curve(1, 0, {0, 1}, quartz_grid(), spec);
  double worst = 0.0;
  for (const auto& point : curve)
    worst = std::max(worst, std::abs(point.visibility - alpha_mag_at(point.tau, spec)));
  report(1, worst < 1e-9,
         "single-photon visibility equals exp(-dw^2 tau^2/4) on the 0..770 fs grid "
         "(max diff " + num(worst) + ", tol 1e-9)");
}

void criterion_2(const WavepacketSpec& spec) {
  const auto curve = visibility_curve(2, 1, {2, 1}, quartz_grid(), spec);
  double worst = 0.0;
  for (const auto& point : curve) {
    const double a = alpha_mag_at(point.tau, spec);
    const double expected = std::abs(a * (2.0 - 3.0 * a * a)) / (3.0 - 2.0 * a * a);
    worst = std::max(worst, std::abs(point.visibility - expected));
  }
  worst = std::max(worst, std::abs(curve.front().visibility - 1.0));
  report(2, worst < 1e-9,
         "three-photon visibility equals |a(2-3a^2)|/(3-2a^2), with 1 at zero delay "
         "(max diff " + num(worst) + ", tol 1e-9)");
}

void criterion_3(const WavepacketSpec& spec) {
  std::vector<double> grid;
  for (double tau = 10e-15; tau < 1.25e-12; tau += 10e-15) grid.push_back(tau);
  double low = 0.0;
  double high = 0.0;
  const int changes = sign_changes(visibility_curve(2, 1, {2, 1}, grid, spec), &low, &high);

  double root = 0.0;
  if (changes == 1) {
    double g_low = contrast_at(low, spec);
    while (high - low > 1e-18) {
      const double mid = 0.5 * (low + high);
      const double g_mid = contrast_at(mid, spec);
      if (g_mid == 0.0) {
        low = high = mid;
        break;
      }
      if ((g_low < 0.0) == (g_mid < 0.0)) {
        low = mid;
        g_low = g_mid;
      } else {
        high = mid;
      }
    }
    root = 0.5 * (low + high);
  }
  const double expected = std::sqrt(2.0 * std::log(1.5)) / spec.delta_omega;
  const double error_fs = std::abs(root - expected) * 1e15;
  report(3, changes == 1 && error_fs <= 0.5,
         "three-photon contrast flips once on (0, 1.25 ps), at sqrt(2 ln 1.5)/dw (" +
             std::to_string(changes) + " flip(s), root off by " + num(error_fs) +
             " fs, tol 0.5 fs)");
}

void criterion_4(const WavepacketSpec& spec) {
  const auto scan = fringe_scan(3, 1, {2, 2}, 0.0, spec, 256);
  const double peak =
      *std::max_element(scan.probabilities.begin(), scan.probabilities.end());
  report(4, peak < 1e-12,
         "(3,1) into (2,2) detection is dark at zero delay (max P " + num(peak) +
             ", tol 1e-12)");
}

void criterion_5(const WavepacketSpec& spec) {
  std::vector<double> grid;
  for (double tau = 10e-15; tau < 1.25e-12; tau += 10e-15) grid.push_back(tau);
  const int changes = sign_changes(visibility_curve(5, 3, {6, 2}, grid, spec));
  report(5, changes == 2,
         "(5,3) into (6,2) contrast flips twice on (0, 1.25 ps) (" +
             std::to_string(changes) + " flip(s))");
}

void criterion_6(const WavepacketSpec& spec) {
  const struct {
    int n;
    int m;
    DetectionPattern pattern;
    double tau;
  } panels[] = {{1, 0, {0, 1}, 110e-15}, {2, 1, {2, 1}, 110e-15}, {3, 1, {2, 2}, 220e-15},
                {3, 2, {4, 1}, 110e-15}, {5, 3, {6, 2}, 110e-15}, {4, 0, {2, 2}, 110e-15}};
  bool pass = true;
  double worst_stray = 0.0;
  std::string bad;
  for (const auto& panel : panels) {
    const auto scan = fringe_scan(panel.n, panel.m, panel.pattern, panel.tau, spec, 256);
    const int dominant = scan_visibility(scan).dominant_harmonic;
    if (dominant != panel.n - panel.m) {
      pass = false;
      bad = " (" + std::to_string(panel.n) + "," + std::to_string(panel.m) + ") gave " +
            std::to_string(dominant);
    }
    for (const auto& [h, c] : harmonic_content(scan))
      if (h != 0 && h != panel.n - panel.m) worst_stray = std::max(worst_stray, std::abs(c));
  }
  report(6, pass && worst_stray < 1e-10,
         "dominant fringe harmonic is N-M on all six panels" + bad + " (worst stray " +
             num(worst_stray) + ", tol 1e-10)");
}

void criterion_7(const WavepacketSpec& spec) {
  double worst_part = 0.0;
  double worst_sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double tau = i * 110e-15;
    const double a = alpha_mag_at(tau, spec);
    const auto budget = interference_budget(2, 1, {2, 1}, tau, spec, 64);
    const auto scan = fringe_scan(2, 1, {2, 1}, tau, spec, 64);
    const auto part_value = [&](int key, double theta) {
      const auto it = budget.parts.find(key);
      if (it == budget.parts.end()) return 0.0;
      return it->second.offset +
             it->second.amplitude * std::cos(budget.harmonic * theta + it->second.phase);
    };
    for (int s = 0; s < scan.samples(); ++s) {
      const double theta = scan.thetas[static_cast<std::size_t>(s)];
      const auto closed = analytic_three(a, theta);
      worst_part = std::max(worst_part, std::abs(part_value(3, theta) - closed.p_three));
      worst_part = std::max(worst_part, std::abs(part_value(2, theta) - closed.p_two));
      worst_part = std::max(worst_part, std::abs(part_value(1, theta) - closed.p_no));
      const double total = part_value(3, theta) + part_value(2, theta) + part_value(1, theta);
      worst_sum = std::max(
          worst_sum, std::abs(total - scan.probabilities[static_cast<std::size_t>(s)]));
    }
  }
  report(7, worst_part < 1e-12 && worst_sum < 1e-12,
         "interference budget reproduces the three-photon components and sums to the "
         "total (max part diff " + num(worst_part) + ", max sum diff " + num(worst_sum) +
             ", tol 1e-12)");
}

void criteria_8_and_9(const WavepacketSpec& spec) {
  TransitionCache cache;
  double worst_oracle = 0.0;
  double worst_norm = 0.0;
  double worst_sum = 0.0;
  for (int total = 1; total <= 8; ++total) {
    for (int n = (total + 1) / 2; n <= total; ++n) {
      const auto base = build_nm_superposition(n, total - n);
      for (int j = 0; j < 10; ++j) {
        const double tau = j * 37e-15;
        for (int k = 0; k < 20; ++k) {
          const double theta = kTwoPi * k / 20.0 + 0.1;
          const auto delayed = apply_delay_to_path_b(base, decompose(tau, spec, theta));
          const auto evolved = apply_beam_splitter(delayed);
          worst_norm = std::max(worst_norm, std::abs(delayed.norm_squared() - 1.0));
          worst_norm = std::max(worst_norm, std::abs(evolved.norm_squared() - 1.0));
          double sum = 0.0;
          for (int c = 0; c <= total; ++c) {
            const DetectionPattern pattern{c, total - c};
            const double pipeline = detection_probability(evolved, pattern);
            worst_oracle = std::max(
                worst_oracle, std::abs(pipeline - cache.probability(delayed, pattern)));
            sum += pipeline;
          }
          worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
        }
      }
    }
  }
  report(8, worst_oracle < 1e-12,
         "permanent oracle matches the operator pipeline over every (N,M), pattern, and "
         "a 20x10 phase-delay grid (max diff " + num(worst_oracle) + ", tol 1e-12)");
  report(9, worst_norm < 1e-9 && worst_sum < 1e-10,
         "evolved states stay normalized and patterns are exhaustive (max norm dev " +
             num(worst_norm) + " tol 1e-9, max sum dev " + num(worst_sum) + " tol 1e-10)");
}

void criterion_10() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("fockfringe_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string input = (dir / "synthetic.csv").string();
  {
    std::ofstream csv(input, std::ios::binary);
    csv << "theta_rad,counts\n";
    char row[80];
    for (int s = 0; s < 256; ++s) {
      const double theta = kTwoPi * s / 256.0;
      std::snprintf(row, sizeof row, "%.17g,%.17g\n", theta,
                    0.5 * (1.0 - 0.9530 * std::cos(theta)));
      csv << row;
    }
  }

  const auto run = [&](const std::string& tag) {
    const std::string out = (dir / ("report_" + tag + ".txt")).string();
    const std::string curve = (dir / ("curve_" + tag + ".csv")).string();
    const std::string command = std::string(FF_CLI_PATH) + " fit " + input + " --output " +
                                curve + " > " + out + " 2> /dev/null";
    const int status = std::system(command.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return std::make_pair(code, std::make_pair(slurp(out), slurp(curve)));
  };
  const auto first = run("a");
  const auto second = run("b");

  double visibility = std::nan("");
  std::istringstream report_stream(first.second.first);
  std::string line;
  while (std::getline(report_stream, line))
    if (line.rfind("visibility ", 0) == 0) visibility = std::atof(line.c_str() + 11);

  const bool codes_ok = first.first == 0 && second.first == 0;
  const bool value_ok = std::abs(visibility - 0.9530) < 1e-6;
  const bool stable = first.second == second.second && !first.second.second.empty();
  std::filesystem::remove_all(dir);
  report(10, codes_ok && value_ok && stable,
         "command-line fit recovers visibility 0.9530 from synthetic fringe data and "
         "repeats byte-identically (got " + num(visibility) + ", tol 1e-6" +
             (stable ? "" : ", outputs differ") + ")");
}

}  // namespace

int main() {
  const WavepacketSpec spec;
  try {
    criterion_1(spec);
    criterion_2(spec);
    criterion_3(spec);
    criterion_4(spec);
    criterion_5(spec);
    criterion_6(spec);
    criterion_7(spec);
    criteria_8_and_9(spec);
    criterion_10();
  } catch (const std::exception& e) {
    std::printf("[FAIL] unexpected exception: %s\n", e.what());
    ++g_failures;
  }
  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
