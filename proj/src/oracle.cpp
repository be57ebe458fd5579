#include "fockfringe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "combinatorics.hpp"
#include "fockfringe/errors.hpp"
#include "fockfringe/fock.hpp"

namespace fockfringe {

namespace {

constexpr double kUnitarityTolerance = 1e-12;

void check_network(const Network& network) {
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      std::complex<double> dot{0.0, 0.0};
      for (int i = 0; i < 4; ++i)
        dot += std::conj(network[static_cast<std::size_t>(i) * 4 + j]) *
               network[static_cast<std::size_t>(i) * 4 + k];
      const double expected = (j == k) ? 1.0 : 0.0;
      if (std::abs(dot - expected) > kUnitarityTolerance)
        throw parameter_error("interference network is not unitary");
    }
  }
}

// Mode indices repeated by occupation, e.g. (2,0,1,0) -> {0,0,2}.
std::vector<int> repeated_modes(const FockBasisState& basis) {
  std::vector<int> modes;
  for (int mode = 0; mode < 4; ++mode)
    for (int r = 0; r < basis.occ[static_cast<std::size_t>(mode)]; ++r) modes.push_back(mode);
  return modes;
}

double occupation_norm(const FockBasisState& basis) {
  double product = 1.0;
  for (int mode = 0; mode < 4; ++mode) product *= detail::factorial(basis.occ[static_cast<std::size_t>(mode)]);
  return product;
}

}  // namespace

std::complex<double> permanent(const ComplexMatrix& m) {
  if (m.n < 1 || m.n > 16) throw parameter_error("permanent supports sizes 1 through 16");
  const int n = m.n;
  // Ryser: Per(A) = sum over nonempty column subsets S of
  // (-1)^(n-|S|) prod_i sum_{j in S} a_ij, visited in Gray-code order so each
  // step updates the row sums by one column.
  std::vector<std::complex<double>> row_sums(static_cast<std::size_t>(n), {0.0, 0.0});
  std::complex<double> total{0.0, 0.0};
  const std::uint32_t limit = 1u << n;
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < limit; ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const int j = std::countr_zero(gray ^ next);
    const double direction = (next & (1u << j)) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += direction * m.at(i, j);
    gray = next;
    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= row_sums[static_cast<std::size_t>(i)];
    const int popcount = std::popcount(gray);
    const double sign = ((n - popcount) % 2 == 0) ? 1.0 : -1.0;
    total += sign * prod;
  }
  return total;
}

std::complex<double> permanent_naive(const ComplexMatrix& m) {
  if (m.n < 1 || m.n > 8) throw parameter_error("naive permanent supports sizes 1 through 8");
  const int n = m.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> total{0.0, 0.0};
  do {
    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= m.at(i, perm[static_cast<std::size_t>(i)]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Network enlarged_network(const BeamSplitterConvention& convention) {
  Network network{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      network[static_cast<std::size_t>(i) * 4 + j] =
          (i % 2 == j % 2) ? convention.at(i / 2, j / 2) : std::complex<double>{0.0, 0.0};
  return network;
}

std::complex<double> transition_amplitude(const TransitionQuery& query) {
  check_network(query.network);
  const int total = query.input.total();
  if (total != query.output.total())
    throw parameter_error("transition endpoints must hold the same photon number");
  if (total > kPhotonCap) throw capacity_error("photon number exceeds the supported cap");
  if (total == 0) return {1.0, 0.0};

  const std::vector<int> cols = repeated_modes(query.input);
  const std::vector<int> rows = repeated_modes(query.output);
  ComplexMatrix sub(total);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c)
      sub.at(r, c) = query.network[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)]) * 4 +
                                   cols[static_cast<std::size_t>(c)]];
  return permanent(sub) /
         std::sqrt(occupation_norm(query.input) * occupation_norm(query.output));
}

namespace {

double pattern_probability(const PureState& state, DetectionPattern pattern,
                           const Network& network,
                           std::map<std::pair<FockBasisState, FockBasisState>,
                                    std::complex<double>>* cache) {
  if (state.domain() != PathDomain::input)
    throw precondition_error("the oracle evolves input-path states");
  if (pattern.at_c < 0 || pattern.at_d < 0)
    throw parameter_error("detection counts must be nonnegative");
  if (state.empty()) return 0.0;
  if (pattern.total() != state.total_photons())
    throw parameter_error("detection pattern total must match the photon number");

  double probability = 0.0;
  for (int c0 = 0; c0 <= pattern.at_c; ++c0) {
    for (int d0 = 0; d0 <= pattern.at_d; ++d0) {
      const auto out =
          FockBasisState::from_occupation(c0, pattern.at_c - c0, d0, pattern.at_d - d0);
      std::complex<double> amp{0.0, 0.0};
      for (const auto& [basis, z] : state.terms()) {
        std::complex<double> a;
        if (cache != nullptr) {
          const auto key = std::make_pair(basis, out);
          auto it = cache->find(key);
          if (it == cache->end())
            it = cache->emplace(key, transition_amplitude({basis, out, network})).first;
          a = it->second;
        } else {
          a = transition_amplitude({basis, out, network});
        }
        amp += z * a;
      }
      probability += std::norm(amp);
    }
  }
  return probability;
}

}  // namespace

double oracle_probability(const PureState& state, DetectionPattern pattern,
                          const BeamSplitterConvention& convention) {
  return pattern_probability(state, pattern, enlarged_network(convention), nullptr);
}

TransitionCache::TransitionCache(const BeamSplitterConvention& convention)
    : network_(enlarged_network(convention)) {
  check_network(network_);
}

double TransitionCache::probability(const PureState& state, DetectionPattern pattern) {
  return pattern_probability(state, pattern, network_, &amplitudes_);
}

std::complex<double> TransitionCache::amplitude(const FockBasisState& in,
                                                const FockBasisState& out) {
  const auto key = std::make_pair(in, out);
  auto it = amplitudes_.find(key);
  if (it == amplitudes_.end())
    it = amplitudes_.emplace(key, transition_amplitude({in, out, network_})).first;
  return it->second;
}

}  // namespace fockfringe
