#include "fockfringe.h"

#include <complex>
#include <exception>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fockfringe/analysis.hpp"
#include "fockfringe/errors.hpp"
#include "fockfringe/fock.hpp"
#include "fockfringe/optics.hpp"
#include "fockfringe/wavepacket.hpp"

namespace {

thread_local std::string g_last_error;

void store(double* out, double value) {
  if (out != nullptr) *out = value;
}

void store(int* out, int value) {
  if (out != nullptr) *out = value;
}

template <typename Fn>
ff_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return FF_OK;
  } catch (const fockfringe::parameter_error& e) {
    g_last_error = e.what();
    return FF_ERR_PARAM;
  } catch (const fockfringe::capacity_error& e) {
    g_last_error = e.what();
    return FF_ERR_CAPACITY;
  } catch (const fockfringe::precondition_error& e) {
    g_last_error = e.what();
    return FF_ERR_PRECONDITION;
  } catch (const fockfringe::data_error& e) {
    g_last_error = e.what();
    return FF_ERR_DATA;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return FF_ERR_INTERNAL;
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw fockfringe::parameter_error(message);
}

int effective_samples(int samples) { return samples > 0 ? samples : 256; }

fockfringe::WavepacketSpec make_spec(double omega0, double delta_omega) {
  fockfringe::WavepacketSpec spec;
  spec.omega0 = omega0;
  spec.delta_omega = delta_omega;
  spec.validate();
  return spec;
}

}  // namespace

struct ff_scan {
  fockfringe::FringeScan scan;
};

struct ff_vis_curve {
  std::vector<fockfringe::VisibilityPoint> points;
};

struct ff_budget {
  int harmonic = 0;
  // (non-tilded count, offset, amplitude, phase), descending count.
  std::vector<std::tuple<int, double, double, double>> parts;
};

extern "C" {

const char* ff_status_name(ff_status status) {
  switch (status) {
    case FF_OK: return "ok";
    case FF_ERR_PARAM: return "parameter error";
    case FF_ERR_CAPACITY: return "capacity error";
    case FF_ERR_PRECONDITION: return "precondition error";
    case FF_ERR_DATA: return "data error";
    case FF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ff_last_error(void) { return g_last_error.c_str(); }

double ff_default_omega0(void) { return fockfringe::WavepacketSpec{}.omega0; }

double ff_default_delta_omega(void) { return fockfringe::WavepacketSpec{}.delta_omega; }

int ff_photon_cap(void) { return fockfringe::kPhotonCap; }

ff_status ff_decompose(double tau_s, double omega0, double delta_omega, double* alpha_re,
                       double* alpha_im, double* beta_re, double* beta_im) {
  return guarded([&] {
    const auto d = fockfringe::decompose(tau_s, make_spec(omega0, delta_omega));
    store(alpha_re, d.alpha.real());
    store(alpha_im, d.alpha.imag());
    store(beta_re, d.beta.real());
    store(beta_im, d.beta.imag());
  });
}

ff_status ff_probability(int n, int m, int at_c, int at_d, double tau_s, double theta,
                         double omega0, double delta_omega, double* probability) {
  return guarded([&] {
    require(probability != nullptr, "probability output must not be null");
    const auto spec = make_spec(omega0, delta_omega);
    const auto delayed = fockfringe::apply_delay_to_path_b(
        fockfringe::build_nm_superposition(n, m), fockfringe::decompose(tau_s, spec, theta));
    *probability = fockfringe::detection_probability(fockfringe::apply_beam_splitter(delayed),
                                                     {at_c, at_d});
  });
}

ff_status ff_scan_create(int n, int m, int at_c, int at_d, double tau_s, double omega0,
                         double delta_omega, int samples, ff_scan** out) {
  return guarded([&] {
    require(out != nullptr, "scan output handle must not be null");
    auto scan = std::make_unique<ff_scan>();
    scan->scan = fockfringe::fringe_scan(n, m, {at_c, at_d}, tau_s,
                                         make_spec(omega0, delta_omega),
                                         effective_samples(samples));
    *out = scan.release();
  });
}

void ff_scan_free(ff_scan* scan) { delete scan; }

int ff_scan_size(const ff_scan* scan) {
  return scan == nullptr ? 0 : scan->scan.samples();
}

ff_status ff_scan_copy(const ff_scan* scan, double* thetas, double* probabilities) {
  return guarded([&] {
    require(scan != nullptr, "scan handle must not be null");
    for (int s = 0; s < scan->scan.samples(); ++s) {
      if (thetas != nullptr) thetas[s] = scan->scan.thetas[static_cast<std::size_t>(s)];
      if (probabilities != nullptr)
        probabilities[s] = scan->scan.probabilities[static_cast<std::size_t>(s)];
    }
  });
}

ff_status ff_vis_curve_create(int n, int m, int at_c, int at_d, const double* taus_s,
                              int tau_count, double omega0, double delta_omega, int samples,
                              ff_vis_curve** out) {
  return guarded([&] {
    require(out != nullptr, "curve output handle must not be null");
    require(taus_s != nullptr && tau_count > 0, "delay grid must be nonempty");
    auto curve = std::make_unique<ff_vis_curve>();
    curve->points = fockfringe::visibility_curve(
        n, m, {at_c, at_d}, std::span<const double>(taus_s, static_cast<std::size_t>(tau_count)),
        make_spec(omega0, delta_omega), effective_samples(samples));
    *out = curve.release();
  });
}

void ff_vis_curve_free(ff_vis_curve* curve) { delete curve; }

int ff_vis_curve_size(const ff_vis_curve* curve) {
  return curve == nullptr ? 0 : static_cast<int>(curve->points.size());
}

ff_status ff_vis_curve_point(const ff_vis_curve* curve, int index, double* tau_s,
                             double* visibility, double* signed_contrast,
                             int* dominant_harmonic) {
  return guarded([&] {
    require(curve != nullptr, "curve handle must not be null");
    require(index >= 0 && index < static_cast<int>(curve->points.size()),
            "curve index out of range");
    const auto& point = curve->points[static_cast<std::size_t>(index)];
    store(tau_s, point.tau);
    store(visibility, point.visibility);
    store(signed_contrast, point.signed_contrast);
    store(dominant_harmonic, point.dominant_harmonic);
  });
}

ff_status ff_budget_create(int n, int m, int at_c, int at_d, double tau_s, double omega0,
                           double delta_omega, int samples, ff_budget** out) {
  return guarded([&] {
    require(out != nullptr, "budget output handle must not be null");
    const auto budget = fockfringe::interference_budget(n, m, {at_c, at_d}, tau_s,
                                                        make_spec(omega0, delta_omega),
                                                        effective_samples(samples));
    auto handle = std::make_unique<ff_budget>();
    handle->harmonic = budget.harmonic;
    for (auto it = budget.parts.rbegin(); it != budget.parts.rend(); ++it)
      handle->parts.emplace_back(it->first, it->second.offset, it->second.amplitude,
                                 it->second.phase);
    *out = handle.release();
  });
}

void ff_budget_free(ff_budget* budget) { delete budget; }

int ff_budget_size(const ff_budget* budget) {
  return budget == nullptr ? 0 : static_cast<int>(budget->parts.size());
}

int ff_budget_harmonic(const ff_budget* budget) {
  return budget == nullptr ? 0 : budget->harmonic;
}

ff_status ff_budget_part(const ff_budget* budget, int index, int* non_tilded_count,
                         double* offset, double* amplitude, double* phase) {
  return guarded([&] {
    require(budget != nullptr, "budget handle must not be null");
    require(index >= 0 && index < static_cast<int>(budget->parts.size()),
            "budget index out of range");
    const auto& [count, part_offset, part_amplitude, part_phase] =
        budget->parts[static_cast<std::size_t>(index)];
    store(non_tilded_count, count);
    store(offset, part_offset);
    store(amplitude, part_amplitude);
    store(phase, part_phase);
  });
}

ff_status ff_fit_sinusoid(const double* thetas, const double* counts, const double* stddevs,
                          int count, int harmonic, double* offset, double* amplitude,
                          double* phase, double* residual, double* visibility,
                          int* negative_offset) {
  return guarded([&] {
    require(thetas != nullptr && counts != nullptr, "fit input arrays must not be null");
    require(count >= 0, "fit point count must be nonnegative");
    const auto size = static_cast<std::size_t>(count);
    const auto fit = fockfringe::fit_sinusoid(
        std::span<const double>(thetas, size), std::span<const double>(counts, size),
        stddevs != nullptr ? std::span<const double>(stddevs, size)
                           : std::span<const double>{},
        harmonic);
    store(offset, fit.offset);
    store(amplitude, fit.amplitude);
    store(phase, fit.phase);
    store(residual, fit.residual);
    store(visibility, fit.visibility);
    store(negative_offset, fit.negative_offset ? 1 : 0);
  });
}

}  // extern "C"
