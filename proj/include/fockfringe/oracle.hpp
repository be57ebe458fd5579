#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "fockfringe/optics.hpp"

namespace fockfringe {

/// Dense square complex matrix, row-major.
struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  explicit ComplexMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::complex<double> at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Matrix permanent via Ryser's inclusion-exclusion formula with Gray-code
/// subset updates, O(2^n n). Supports 1 <= n <= 16.
std::complex<double> permanent(const ComplexMatrix& m);

/// Permanent as the plain sum over permutations, O(n! n). Slow; kept as an
/// independent check of the Ryser evaluation for small n (<= 8).
std::complex<double> permanent_naive(const ComplexMatrix& m);

/// 4x4 unitary on the (path x internal) lattice, row-major; rows are output
/// modes (C0, C1, D0, D1), columns input modes (A0, A1, B0, B1).
using Network = std::array<std::complex<double>, 16>;

/// Path unitary extended to the lattice: identity on the internal index.
Network enlarged_network(const BeamSplitterConvention& convention);

struct TransitionQuery {
  FockBasisState input;   // on paths A, B
  FockBasisState output;  // on paths C, D
  Network network{};
};

/// Fock-state transition amplitude through the network,
///   Per(U_sub) / sqrt(prod_j in_j! prod_i out_i!),
/// where U_sub repeats column j in_j times and row i out_i times.
std::complex<double> transition_amplitude(const TransitionQuery& query);

/// Probability of the pattern for an input-path state evolved through the
/// network, computed entirely from permanents: coherent amplitude sum per
/// output basis state, incoherent sum over the pattern's output occupations.
/// Independent of apply_beam_splitter / detection_probability.
double oracle_probability(
    const PureState& state, DetectionPattern pattern,
    const BeamSplitterConvention& convention = BeamSplitterConvention::balanced());

/// Memoizes basis-to-basis transition amplitudes for one fixed convention.
/// The amplitudes do not depend on the delay or phase, so sweeping a
/// (theta, tau) grid reuses every permanent evaluation.
class TransitionCache {
public:
  explicit TransitionCache(
      const BeamSplitterConvention& convention = BeamSplitterConvention::balanced());

  double probability(const PureState& state, DetectionPattern pattern);
  std::size_t size() const { return amplitudes_.size(); }

private:
  std::complex<double> amplitude(const FockBasisState& in, const FockBasisState& out);

  Network network_;
  std::map<std::pair<FockBasisState, FockBasisState>, std::complex<double>> amplitudes_;
};

}  // namespace fockfringe
