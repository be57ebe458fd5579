#pragma once

#include <complex>
#include <optional>

namespace fockfringe {

/// Gaussian wavepacket of a single photon: central angular frequency and
/// angular-frequency bandwidth, both in rad/s.
struct WavepacketSpec {
  double omega0 = 2.41e15;
  double delta_omega = 3.99e12;

  void validate() const;  // throws parameter_error unless both are positive
};

/// Gram-Schmidt split of the delayed wavepacket creation operator into the
/// undelayed reference mode (weight alpha) and its orthogonal complement
/// (weight beta), with |alpha|^2 + |beta|^2 = 1.
struct DelayDecomposition {
  double tau = 0.0;  // s
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
};

/// Decomposes a wavepacket delayed by tau against the undelayed reference:
///   |alpha| = exp(-delta_omega^2 tau^2 / 4),
///   |beta|  = sqrt(1 - |alpha|^2),
/// both carrying the common phase omega0*tau. The phase can be overridden
/// independently of tau, which models a fringe scan where the envelope is set
/// by the delay while the interferometer phase is controlled separately.
DelayDecomposition decompose(double tau, const WavepacketSpec& spec,
                             std::optional<double> theta_override = std::nullopt);

}  // namespace fockfringe
