#include "fockfringe/wavepacket.hpp"

#include <cmath>

#include "fockfringe/errors.hpp"

namespace fockfringe {

void WavepacketSpec::validate() const {
  if (!(omega0 > 0.0)) throw parameter_error("wavepacket omega0 must be positive");
  if (!(delta_omega > 0.0)) throw parameter_error("wavepacket delta_omega must be positive");
}

DelayDecomposition decompose(double tau, const WavepacketSpec& spec,
                             std::optional<double> theta_override) {
  spec.validate();
  if (!(tau >= 0.0)) throw parameter_error("delay tau must be nonnegative");

  const double x = spec.delta_omega * tau;
  const double alpha_mag = std::exp(-x * x / 4.0);
  // 1 - exp(-x^2/2) via expm1 keeps |beta| accurate for small delays.
  const double beta_mag = std::sqrt(-std::expm1(-x * x / 2.0));
  const double theta = theta_override.value_or(spec.omega0 * tau);
  const std::complex<double> phase = std::polar(1.0, theta);

  return DelayDecomposition{tau, alpha_mag * phase, beta_mag * phase};
}

}  // namespace fockfringe
