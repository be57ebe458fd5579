#include "fockfringe/optics.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "combinatorics.hpp"
#include "fockfringe/errors.hpp"

namespace fockfringe {

namespace {

constexpr double kUnitarityTolerance = 1e-12;

std::complex<double> ipow(std::complex<double> z, int k) {
  std::complex<double> r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

BeamSplitterConvention BeamSplitterConvention::balanced() {
  const double s = 1.0 / std::sqrt(2.0);
  BeamSplitterConvention convention;
  convention.u = {s, s, s, -s};
  return convention;
}

void BeamSplitterConvention::validate() const {
  // Columns are images of the input modes; unitarity keeps probability.
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      std::complex<double> dot{0.0, 0.0};
      for (int i = 0; i < 2; ++i) dot += std::conj(at(i, j)) * at(i, k);
      const double expected = (j == k) ? 1.0 : 0.0;
      if (std::abs(dot - expected) > kUnitarityTolerance)
        throw parameter_error("beam splitter matrix is not unitary");
    }
  }
}

PureState apply_beam_splitter(const PureState& state, const BeamSplitterConvention& convention) {
  if (state.domain() != PathDomain::input)
    throw precondition_error("beam splitter acts on input-path states");
  convention.validate();

  const std::complex<double> uca = convention.at(0, 0);
  const std::complex<double> uda = convention.at(1, 0);
  const std::complex<double> ucb = convention.at(0, 1);
  const std::complex<double> udb = convention.at(1, 1);

  PureState out(PathDomain::output);
  for (const auto& [basis, z] : state.terms()) {
    const int na0 = basis.occ[0];
    const int na1 = basis.occ[1];
    const int nb0 = basis.occ[2];
    const int nb1 = basis.occ[3];
    const double in_norm = detail::sqrt_factorial(na0) * detail::sqrt_factorial(na1) *
                           detail::sqrt_factorial(nb0) * detail::sqrt_factorial(nb1);
    // Each creation operator splits independently; j* photons of a mode go to C.
    for (int ja0 = 0; ja0 <= na0; ++ja0) {
      for (int ja1 = 0; ja1 <= na1; ++ja1) {
        for (int jb0 = 0; jb0 <= nb0; ++jb0) {
          for (int jb1 = 0; jb1 <= nb1; ++jb1) {
            const int c0 = ja0 + jb0;
            const int c1 = ja1 + jb1;
            const int d0 = (na0 - ja0) + (nb0 - jb0);
            const int d1 = (na1 - ja1) + (nb1 - jb1);
            const std::complex<double> weight =
                z *
                static_cast<double>(detail::binomial(na0, ja0) * detail::binomial(na1, ja1) *
                                    detail::binomial(nb0, jb0) * detail::binomial(nb1, jb1)) *
                ipow(uca, ja0) * ipow(uda, na0 - ja0) * ipow(uca, ja1) * ipow(uda, na1 - ja1) *
                ipow(ucb, jb0) * ipow(udb, nb0 - jb0) * ipow(ucb, jb1) * ipow(udb, nb1 - jb1) *
                (detail::sqrt_factorial(c0) * detail::sqrt_factorial(c1) *
                 detail::sqrt_factorial(d0) * detail::sqrt_factorial(d1)) /
                in_norm;
            out.add(FockBasisState::from_occupation(c0, c1, d0, d1), weight);
          }
        }
      }
    }
  }
  out.prune();
  return out;
}

double detection_probability(const PureState& state, DetectionPattern pattern) {
  if (state.domain() != PathDomain::output)
    throw precondition_error("detection applies to output-path states");
  if (pattern.at_c < 0 || pattern.at_d < 0)
    throw parameter_error("detection counts must be nonnegative");
  if (!state.empty() && pattern.total() != state.total_photons())
    throw parameter_error("detection pattern total must match the photon number");

  // Detectors resolve path counts only; internal modes are traced out.
  double probability = 0.0;
  for (const auto& [basis, z] : state.terms()) {
    if (basis.path_total(0) == pattern.at_c && basis.path_total(1) == pattern.at_d)
      probability += std::norm(z);
  }
  return probability;
}

}  // namespace fockfringe
