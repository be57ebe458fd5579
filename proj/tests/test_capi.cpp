// Exercises the shared library strictly through the C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "fockfringe.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

double default_w0() { return ff_default_omega0(); }
double default_dw() { return ff_default_delta_omega(); }

}  // namespace

TEST_CASE("defaults and constants") {
  CHECK(ff_default_omega0() == 2.41e15);
  CHECK(ff_default_delta_omega() == 3.99e12);
  CHECK(ff_photon_cap() == 8);
  CHECK(std::string(ff_status_name(FF_OK)) == "ok");
  CHECK(std::string(ff_status_name(FF_ERR_CAPACITY)) == "capacity error");
}

TEST_CASE("decompose at zero delay and with skipped outputs") {
  double ar = -1.0;
  double ai = -1.0;
  double br = -1.0;
  double bi = -1.0;
  REQUIRE(ff_decompose(0.0, default_w0(), default_dw(), &ar, &ai, &br, &bi) == FF_OK);
  CHECK(ar == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ai == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::hypot(br, bi) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ff_decompose(110e-15, default_w0(), default_dw(), nullptr, nullptr, nullptr,
                     nullptr) == FF_OK);
}

TEST_CASE("decompose maps errors and records messages") {
  CHECK(ff_decompose(-1e-15, default_w0(), default_dw(), nullptr, nullptr, nullptr,
                     nullptr) == FF_ERR_PARAM);
  CHECK(std::strlen(ff_last_error()) > 0);
  CHECK(ff_decompose(0.0, 0.0, default_dw(), nullptr, nullptr, nullptr, nullptr) ==
        FF_ERR_PARAM);
  CHECK(ff_decompose(0.0, default_w0(), default_dw(), nullptr, nullptr, nullptr, nullptr) ==
        FF_OK);
  CHECK(std::strlen(ff_last_error()) == 0);
}

TEST_CASE("single-point probabilities at landmark phases") {
  double p = -1.0;
  REQUIRE(ff_probability(1, 0, 0, 1, 0.0, 0.0, default_w0(), default_dw(), &p) == FF_OK);
  CHECK(p < 1e-15);
  REQUIRE(ff_probability(1, 0, 0, 1, 0.0, kPi, default_w0(), default_dw(), &p) == FF_OK);
  CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(ff_probability(2, 1, 2, 1, 0.0, 0.0, default_w0(), default_dw(), &p) == FF_OK);
  CHECK(p < 1e-15);
}

TEST_CASE("probability argument screening") {
  double p = 0.0;
  CHECK(ff_probability(1, 2, 2, 1, 0.0, 0.0, default_w0(), default_dw(), &p) ==
        FF_ERR_PARAM);
  CHECK(ff_probability(5, 4, 5, 4, 0.0, 0.0, default_w0(), default_dw(), &p) ==
        FF_ERR_CAPACITY);
  CHECK(ff_probability(1, 0, 0, 1, 0.0, 0.0, default_w0(), default_dw(), nullptr) ==
        FF_ERR_PARAM);
  CHECK(ff_probability(1, 0, 2, 0, 0.0, 0.0, default_w0(), default_dw(), &p) ==
        FF_ERR_PARAM);
}

TEST_CASE("scan handles") {
  ff_scan* scan = nullptr;
  REQUIRE(ff_scan_create(2, 1, 2, 1, 110e-15, default_w0(), default_dw(), 64, &scan) ==
          FF_OK);
  REQUIRE(scan != nullptr);
  CHECK(ff_scan_size(scan) == 64);
  std::vector<double> thetas(64);
  std::vector<double> probabilities(64);
  REQUIRE(ff_scan_copy(scan, thetas.data(), probabilities.data()) == FF_OK);
  CHECK(thetas[0] == 0.0);
  CHECK(thetas[16] == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  for (const double p : probabilities) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
  double point = 0.0;
  REQUIRE(ff_probability(2, 1, 2, 1, 110e-15, 0.0, default_w0(), default_dw(), &point) ==
          FF_OK);
  CHECK(probabilities[0] == doctest::Approx(point).epsilon(1e-14));
  ff_scan_free(scan);
  ff_scan_free(nullptr);

  ff_scan* bad = nullptr;
  CHECK(ff_scan_create(2, 1, 2, 1, 110e-15, default_w0(), default_dw(), 10, &bad) ==
        FF_ERR_PARAM);
  CHECK(bad == nullptr);
  CHECK(ff_scan_create(2, 1, 2, 1, 110e-15, default_w0(), default_dw(), 64, nullptr) ==
        FF_ERR_PARAM);
  CHECK(ff_scan_copy(nullptr, nullptr, nullptr) == FF_ERR_PARAM);
  CHECK(ff_scan_size(nullptr) == 0);
}

TEST_CASE("visibility curve handles") {
  std::vector<double> taus;
  for (int i = 0; i < 8; ++i) taus.push_back(i * 110e-15);
  ff_vis_curve* curve = nullptr;
  REQUIRE(ff_vis_curve_create(1, 0, 0, 1, taus.data(), static_cast<int>(taus.size()),
                              default_w0(), default_dw(), 0, &curve) == FF_OK);
  REQUIRE(curve != nullptr);
  CHECK(ff_vis_curve_size(curve) == 8);
  for (int i = 0; i < 8; ++i) {
    double tau = 0.0;
    double visibility = 0.0;
    double contrast = 0.0;
    int harmonic = -1;
    REQUIRE(ff_vis_curve_point(curve, i, &tau, &visibility, &contrast, &harmonic) == FF_OK);
    const double dw = default_dw();
    const double expected = std::exp(-dw * dw * taus[i] * taus[i] / 4.0);
    CHECK(tau == taus[i]);
    CHECK(visibility == doctest::Approx(expected).epsilon(1e-9));
    CHECK(harmonic == 1);
  }
  CHECK(ff_vis_curve_point(curve, 8, nullptr, nullptr, nullptr, nullptr) == FF_ERR_PARAM);
  CHECK(ff_vis_curve_point(curve, -1, nullptr, nullptr, nullptr, nullptr) == FF_ERR_PARAM);
  ff_vis_curve_free(curve);
  ff_vis_curve_free(nullptr);

  ff_vis_curve* bad = nullptr;
  CHECK(ff_vis_curve_create(1, 0, 0, 1, nullptr, 0, default_w0(), default_dw(), 0, &bad) ==
        FF_ERR_PARAM);
}

TEST_CASE("budget handles expose the component decomposition") {
  ff_budget* budget = nullptr;
  REQUIRE(ff_budget_create(2, 1, 2, 1, 110e-15, default_w0(), default_dw(), 0, &budget) ==
          FF_OK);
  REQUIRE(budget != nullptr);
  CHECK(ff_budget_size(budget) == 3);
  CHECK(ff_budget_harmonic(budget) == 1);

  double ar = 0.0;
  double ai = 0.0;
  REQUIRE(ff_decompose(110e-15, default_w0(), default_dw(), &ar, &ai, nullptr, nullptr) ==
          FF_OK);
  const double a = std::hypot(ar, ai);
  const double b2 = 1.0 - a * a;

  int count = 0;
  double offset = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  REQUIRE(ff_budget_part(budget, 0, &count, &offset, &amplitude, &phase) == FF_OK);
  CHECK(count == 3);
  CHECK(offset == doctest::Approx(a * a * (a * a + 1.0) / 16.0).epsilon(1e-9));
  CHECK(amplitude == doctest::Approx(a * a * a / 8.0).epsilon(1e-9));
  REQUIRE(ff_budget_part(budget, 1, &count, &offset, &amplitude, &phase) == FF_OK);
  CHECK(count == 2);
  CHECK(offset == doctest::Approx(b2 * (4.0 * a * a + 3.0) / 16.0).epsilon(1e-9));
  REQUIRE(ff_budget_part(budget, 2, &count, &offset, &amplitude, &phase) == FF_OK);
  CHECK(count == 1);
  CHECK(amplitude < 1e-12);

  CHECK(ff_budget_part(budget, 3, nullptr, nullptr, nullptr, nullptr) == FF_ERR_PARAM);
  ff_budget_free(budget);
  ff_budget_free(nullptr);
}

TEST_CASE("sinusoid fitting through the C surface") {
  std::vector<double> thetas;
  std::vector<double> counts;
  for (int s = 0; s < 64; ++s) {
    const double theta = 2.0 * kPi * s / 64.0;
    thetas.push_back(theta);
    counts.push_back(0.5 + 0.25 * std::cos(theta + 0.4));
  }
  double offset = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double residual = 1.0;
  double visibility = 0.0;
  int negative = -1;
  REQUIRE(ff_fit_sinusoid(thetas.data(), counts.data(), nullptr,
                          static_cast<int>(thetas.size()), 1, &offset, &amplitude, &phase,
                          &residual, &visibility, &negative) == FF_OK);
  CHECK(offset == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(amplitude == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(phase == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(visibility == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(residual < 1e-12);
  CHECK(negative == 0);

  CHECK(ff_fit_sinusoid(thetas.data(), counts.data(), nullptr, 3, 1, nullptr, nullptr,
                        nullptr, nullptr, nullptr, nullptr) == FF_ERR_PARAM);
  CHECK(ff_fit_sinusoid(nullptr, counts.data(), nullptr, 8, 1, nullptr, nullptr, nullptr,
                        nullptr, nullptr, nullptr) == FF_ERR_PARAM);

  const std::vector<double> flat_thetas(8, 1.0);
  const std::vector<double> flat_counts(8, 0.5);
  CHECK(ff_fit_sinusoid(flat_thetas.data(), flat_counts.data(), nullptr, 8, 1, nullptr,
                        nullptr, nullptr, nullptr, nullptr, nullptr) == FF_ERR_DATA);
}
