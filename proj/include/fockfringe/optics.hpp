#pragma once

#include <array>
#include <complex>

#include "fockfringe/fock.hpp"

namespace fockfringe {

/// 2x2 unitary acting on the path creation operators; column j is the image
/// of input path j over the output paths (row 0 -> C, row 1 -> D). The
/// internal index is untouched: both internal modes see the same unitary.
struct BeamSplitterConvention {
  std::array<std::complex<double>, 4> u{};  // row-major

  /// Balanced 50:50 splitter, a -> (c+d)/sqrt2, b -> (c-d)/sqrt2. The sign
  /// choice fixes (0,1) detection of the delayed single-photon state to
  /// (1 - |alpha| cos theta)/2.
  static BeamSplitterConvention balanced();

  void validate() const;  // unitary within 1e-12, else parameter_error

  std::complex<double> at(int out_path, int in_path) const {
    return u[out_path * 2 + in_path];
  }
};

/// Coincidence pattern: m photons counted at output C, n at output D.
struct DetectionPattern {
  int at_c = 0;
  int at_d = 0;

  int total() const { return at_c + at_d; }
};

/// Substitutes every input creation operator by the convention's linear
/// combination of output operators, per internal mode independently, and
/// collects ordering factors exactly. Norm is preserved.
PureState apply_beam_splitter(
    const PureState& state,
    const BeamSplitterConvention& convention = BeamSplitterConvention::balanced());

/// Probability of the (m,n) coincidence: the incoherent sum of |amplitude|^2
/// over every basis state whose path-C and path-D totals match the pattern.
/// Detectors count photons regardless of internal mode, so orthogonal-mode
/// occupations add probabilities, not amplitudes.
double detection_probability(const PureState& state, DetectionPattern pattern);

}  // namespace fockfringe
