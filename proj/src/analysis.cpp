#include "fockfringe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fockfringe/errors.hpp"
#include "fockfringe/fock.hpp"

namespace fockfringe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGridTolerance = 1e-9;
// Fringe amplitudes below this are roundoff; their phase carries no signal.
constexpr double kAmplitudeSnap = 1e-15;

void check_alpha_mag(double alpha_mag) {
  if (!(alpha_mag >= 0.0 && alpha_mag <= 1.0))
    throw parameter_error("alpha magnitude must lie in [0, 1]");
}

void check_pattern(const DetectionPattern& pattern, int total) {
  if (pattern.at_c < 0 || pattern.at_d < 0)
    throw parameter_error("detection counts must be nonnegative");
  if (pattern.total() != total)
    throw parameter_error("detection pattern total must match the photon number");
}

double wrap_phase(double phase) {
  double w = std::fmod(phase, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // A tiny negative input rounds up to exactly 2*pi; keep the range half-open.
  if (w >= kTwoPi) w = 0.0;
  return w;
}

std::complex<double> fourier_coefficient(const std::vector<double>& values,
                                         const std::vector<double>& thetas, int h) {
  std::complex<double> c{0.0, 0.0};
  for (std::size_t s = 0; s < values.size(); ++s)
    c += values[s] * std::polar(1.0, -h * thetas[s]);
  return c / static_cast<double>(values.size());
}

}  // namespace

std::pair<double, double> analytic_single(double alpha_mag, double theta) {
  check_alpha_mag(alpha_mag);
  return {0.5 * (1.0 - alpha_mag * std::cos(theta)), alpha_mag};
}

ThreePhotonProbabilities analytic_three(double alpha_mag, double theta) {
  check_alpha_mag(alpha_mag);
  const double a2 = alpha_mag * alpha_mag;
  const double b2 = 1.0 - a2;
  const double c = std::cos(theta);
  ThreePhotonProbabilities result;
  result.p_three = a2 * (a2 - 2.0 * alpha_mag * c + 1.0) / 16.0;
  result.p_two = b2 * (4.0 * a2 + 4.0 * alpha_mag * c + 3.0) / 16.0;
  result.p_no = 3.0 * b2 * b2 / 16.0;
  result.visibility = std::abs(alpha_mag * (2.0 - 3.0 * a2)) / (3.0 - 2.0 * a2);
  return result;
}

FringeScan fringe_scan(int n, int m, DetectionPattern pattern, double tau,
                       const WavepacketSpec& spec, int samples) {
  if (samples < 64) throw parameter_error("fringe scan needs at least 64 samples");
  const PureState base = build_nm_superposition(n, m);
  check_pattern(pattern, base.total_photons());

  FringeScan scan;
  scan.pattern = pattern;
  scan.tau = tau;
  scan.thetas.reserve(static_cast<std::size_t>(samples));
  scan.probabilities.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const double theta = kTwoPi * s / samples;
    const PureState delayed = apply_delay_to_path_b(base, decompose(tau, spec, theta));
    scan.thetas.push_back(theta);
    scan.probabilities.push_back(detection_probability(apply_beam_splitter(delayed), pattern));
  }
  return scan;
}

std::map<int, std::complex<double>> harmonic_content(const FringeScan& scan) {
  const int count = scan.samples();
  if (count < 2) throw parameter_error("harmonic content needs at least 2 samples");
  if (scan.probabilities.size() != scan.thetas.size())
    throw parameter_error("scan angle and probability arrays must have equal length");
  for (int s = 0; s < count; ++s)
    if (std::abs(scan.thetas[static_cast<std::size_t>(s)] - kTwoPi * s / count) > kGridTolerance)
      throw parameter_error("harmonic content requires a uniform [0, 2pi) grid");

  std::map<int, std::complex<double>> coefficients;
  for (int h = 0; h <= count / 2; ++h)
    coefficients[h] = fourier_coefficient(scan.probabilities, scan.thetas, h);
  return coefficients;
}

VisibilityPoint scan_visibility(const FringeScan& scan) {
  VisibilityPoint point;
  point.tau = scan.tau;
  const double peak = scan.probabilities.empty()
                          ? 0.0
                          : *std::max_element(scan.probabilities.begin(), scan.probabilities.end());
  if (peak < kZeroFringeThreshold) return point;

  const auto coefficients = harmonic_content(scan);
  const double offset = coefficients.at(0).real();
  int dominant = 0;
  double best = kHarmonicFloor;
  for (const auto& [h, c] : coefficients) {
    if (h == 0) continue;
    if (std::abs(c) > best) {
      best = std::abs(c);
      dominant = h;
    }
  }
  point.dominant_harmonic = dominant;
  if (dominant == 0) return point;

  // Extremes of the fitted single harmonic: offset +- 2|c_h|. The contrast
  // keeps the fringe sign, so a pi phase shift flips it through zero.
  const std::complex<double> c = coefficients.at(dominant);
  point.visibility = 2.0 * std::abs(c) / offset;
  point.signed_contrast = 2.0 * c.real() / offset;
  return point;
}

std::vector<VisibilityPoint> visibility_curve(int n, int m, DetectionPattern pattern,
                                              std::span<const double> tau_grid,
                                              const WavepacketSpec& spec, int samples) {
  if (tau_grid.empty()) throw parameter_error("delay grid must be nonempty");
  for (std::size_t i = 1; i < tau_grid.size(); ++i)
    if (!(tau_grid[i] > tau_grid[i - 1]))
      throw parameter_error("delay grid must be strictly ascending");
  if (samples < 256) throw parameter_error("visibility curve needs at least 256 samples per scan");

  std::vector<VisibilityPoint> curve;
  curve.reserve(tau_grid.size());
  for (const double tau : tau_grid)
    curve.push_back(scan_visibility(fringe_scan(n, m, pattern, tau, spec, samples)));
  return curve;
}

InterferenceBudget interference_budget(int n, int m, DetectionPattern pattern, double tau,
                                       const WavepacketSpec& spec, int samples) {
  if (samples < 64) throw parameter_error("interference budget needs at least 64 samples");
  const PureState base = build_nm_superposition(n, m);
  check_pattern(pattern, base.total_photons());

  // Orthogonal-mode photon number survives the beam splitter, so terms with
  // different tilded counts never land on the same output ket: their
  // probabilities add, and each group carries its own fringe.
  std::map<int, std::vector<double>> group_series;  // keyed by non-tilded count
  std::vector<double> thetas(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const double theta = kTwoPi * s / samples;
    thetas[static_cast<std::size_t>(s)] = theta;
    const PureState delayed = apply_delay_to_path_b(base, decompose(tau, spec, theta));
    std::map<int, PureState> groups;
    for (const auto& [basis, z] : delayed.terms()) {
      auto [it, inserted] = groups.try_emplace(basis.internal_total(1), PathDomain::input);
      it->second.add(basis, z);
    }
    for (const auto& [tilded, sub] : groups) {
      auto& series = group_series[n + m - tilded];
      if (series.empty()) series.assign(static_cast<std::size_t>(samples), 0.0);
      series[static_cast<std::size_t>(s)] =
          detection_probability(apply_beam_splitter(sub), pattern);
    }
  }

  InterferenceBudget budget;
  budget.harmonic = n - m;
  for (const auto& [key, series] : group_series) {
    BudgetPart part;
    part.offset = fourier_coefficient(series, thetas, 0).real();
    if (budget.harmonic > 0) {
      const std::complex<double> c = fourier_coefficient(series, thetas, budget.harmonic);
      part.amplitude = 2.0 * std::abs(c);
      if (part.amplitude < kAmplitudeSnap) {
        part.amplitude = 0.0;
        part.phase = 0.0;
      } else {
        part.phase = wrap_phase(std::arg(c));
      }
    }
    budget.parts.emplace(key, part);
  }
  return budget;
}

SinusoidFit fit_sinusoid(std::span<const double> thetas, std::span<const double> counts,
                         std::span<const double> stddevs, int harmonic) {
  if (harmonic < 1) throw parameter_error("fit harmonic must be at least 1");
  if (thetas.size() != counts.size())
    throw parameter_error("theta and count arrays must have equal length");
  if (!stddevs.empty() && stddevs.size() != thetas.size())
    throw parameter_error("stddev array length must match the data");
  if (thetas.size() < 4) throw parameter_error("sinusoid fit needs at least 4 points");

  // Linear model counts ~ p0 + p1 cos(h theta) + p2 sin(h theta); weighted
  // normal equations M p = v with weights 1/sigma^2.
  double m[3][3] = {};
  double v[3] = {};
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    double w = 1.0;
    if (!stddevs.empty()) {
      if (!(stddevs[i] > 0.0)) throw parameter_error("standard deviations must be positive");
      w = 1.0 / (stddevs[i] * stddevs[i]);
    }
    const double f[3] = {1.0, std::cos(harmonic * thetas[i]), std::sin(harmonic * thetas[i])};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] += w * f[r] * f[c];
      v[r] += w * f[r] * counts[i];
    }
    weight_sum += w;
  }

  // Gaussian elimination with partial pivoting on the 3x3 system.
  double scale = 0.0;
  for (auto& row : m)
    for (double entry : row) scale = std::max(scale, std::abs(entry));
  int order[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[order[r]][col]) > std::abs(m[order[pivot]][col])) pivot = r;
    std::swap(order[col], order[pivot]);
    const double diag = m[order[col]][col];
    if (std::abs(diag) < 1e-12 * scale)
      throw data_error("sinusoid fit design is degenerate");
    for (int r = col + 1; r < 3; ++r) {
      const double factor = m[order[r]][col] / diag;
      for (int c = col; c < 3; ++c) m[order[r]][c] -= factor * m[order[col]][c];
      v[order[r]] -= factor * v[order[col]];
    }
  }
  double p[3];
  for (int col = 2; col >= 0; --col) {
    double sum = v[order[col]];
    for (int c = col + 1; c < 3; ++c) sum -= m[order[col]][c] * p[c];
    p[col] = sum / m[order[col]][col];
  }

  SinusoidFit fit;
  fit.offset = p[0];
  fit.amplitude = std::hypot(p[1], p[2]);
  fit.phase = (fit.amplitude < kAmplitudeSnap) ? 0.0 : wrap_phase(std::atan2(-p[2], p[1]));
  if (fit.amplitude < kAmplitudeSnap) fit.amplitude = 0.0;

  double residual_sum = 0.0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    double w = 1.0;
    if (!stddevs.empty()) w = 1.0 / (stddevs[i] * stddevs[i]);
    const double model = p[0] + fit.amplitude * std::cos(harmonic * thetas[i] + fit.phase);
    residual_sum += w * (counts[i] - model) * (counts[i] - model);
  }
  fit.residual = std::sqrt(residual_sum / weight_sum);

  fit.negative_offset = fit.offset < 0.0;
  fit.visibility = (fit.offset > 0.0) ? fit.amplitude / fit.offset : 0.0;
  return fit;
}

}  // namespace fockfringe
