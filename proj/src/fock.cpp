#include "fockfringe/fock.hpp"

#include <cmath>

#include "combinatorics.hpp"
#include "fockfringe/errors.hpp"

namespace fockfringe {

namespace {

void check_count(int count) {
  if (count < 0) throw parameter_error("photon count must be nonnegative");
  if (count > kPhotonCap) throw capacity_error("photon count exceeds the supported cap");
}

// std::pow(z, 0) is NaN for z == 0; plain repeated product is exact enough here.
std::complex<double> ipow(std::complex<double> z, int k) {
  std::complex<double> r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

FockBasisState FockBasisState::from_paths(int path0, int path1) {
  return from_occupation(path0, 0, path1, 0);
}

FockBasisState FockBasisState::from_occupation(int p0i0, int p0i1, int p1i0, int p1i1) {
  for (int c : {p0i0, p0i1, p1i0, p1i1}) check_count(c);
  FockBasisState s;
  s.occ = {static_cast<std::uint8_t>(p0i0), static_cast<std::uint8_t>(p0i1),
           static_cast<std::uint8_t>(p1i0), static_cast<std::uint8_t>(p1i1)};
  if (s.total() > kPhotonCap) throw capacity_error("total photon number exceeds the supported cap");
  return s;
}

int FockBasisState::total() const { return occ[0] + occ[1] + occ[2] + occ[3]; }

int FockBasisState::path_total(int path) const { return occ[path * 2] + occ[path * 2 + 1]; }

int FockBasisState::internal_total(int internal_mode) const {
  return occ[internal_mode] + occ[2 + internal_mode];
}

int PureState::total_photons() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total();
}

double PureState::norm_squared() const {
  double n2 = 0.0;
  for (const auto& [basis, amp] : terms_) n2 += std::norm(amp);
  return n2;
}

void PureState::add(const FockBasisState& basis, std::complex<double> amplitude) {
  if (!terms_.empty() && basis.total() != total_photons())
    throw parameter_error("basis state breaks the fixed total photon number");
  terms_[basis] += amplitude;
}

void PureState::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = std::abs(it->second) < threshold ? terms_.erase(it) : std::next(it);
}

PureState build_nm_superposition(int n, int m) {
  if (n < m) throw parameter_error("superposition requires N >= M");
  if (m < 0) throw parameter_error("photon counts must be nonnegative");
  if (n + m < 1) throw parameter_error("superposition needs at least one photon");
  if (n + m > kPhotonCap) throw capacity_error("total photon number exceeds the supported cap");

  PureState state{PathDomain::input};
  if (n == m) {
    // The two kets coincide; the normalized state is the single ket |N,N>.
    state.add(FockBasisState::from_paths(n, n), 1.0);
  } else {
    const double amp = 1.0 / std::sqrt(2.0);
    state.add(FockBasisState::from_paths(n, m), amp);
    state.add(FockBasisState::from_paths(m, n), amp);
  }
  return state;
}

PureState apply_delay_to_path_b(const PureState& state,
                                const DelayDecomposition& decomposition) {
  if (state.domain() != PathDomain::input)
    throw precondition_error("delay acts on input-path states");
  for (const auto& [basis, amp] : state.terms())
    if (basis.internal_total(1) != 0)
      throw precondition_error("state already delayed: orthogonal-mode photons present");

  PureState out{PathDomain::input};
  for (const auto& [basis, amp] : state.terms()) {
    const int nb = basis.occ[2];
    // (alpha B0 + beta B1)^nb expanded binomially; the k-th term moves k
    // photons into the orthogonal mode with weight sqrt(C(nb,k)).
    for (int k = 0; k <= nb; ++k) {
      const std::complex<double> coeff =
          std::sqrt(detail::binomial(nb, k)) *
          ipow(decomposition.alpha, nb - k) * ipow(decomposition.beta, k);
      out.add(FockBasisState::from_occupation(basis.occ[0], basis.occ[1], nb - k, k),
              amp * coeff);
    }
  }
  out.prune();
  return out;
}

}  // namespace fockfringe
