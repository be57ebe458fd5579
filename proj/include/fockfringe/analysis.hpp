#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "fockfringe/optics.hpp"
#include "fockfringe/wavepacket.hpp"

namespace fockfringe {

/// Fringe harmonics below this magnitude count as absent.
inline constexpr double kHarmonicFloor = 1e-10;

/// A scan with all probabilities below this is a zero fringe (visibility 0).
inline constexpr double kZeroFringeThreshold = 1e-12;

/// Detection probability sampled over a uniform phase grid [0, 2pi).
struct FringeScan {
  std::vector<double> thetas;
  std::vector<double> probabilities;
  DetectionPattern pattern{};
  double tau = 0.0;  // s

  int samples() const { return static_cast<int>(thetas.size()); }
};

/// Fringe summary at one delay. visibility is (Pmax-Pmin)/(Pmax+Pmin) of the
/// fitted dominant harmonic; signed_contrast carries the same magnitude but
/// flips sign when the fringe acquires a pi phase shift.
struct VisibilityPoint {
  double tau = 0.0;
  double visibility = 0.0;
  double signed_contrast = 0.0;
  int dominant_harmonic = 0;
};

/// One component of the probability, P(theta) = offset + amplitude *
/// cos(harmonic * theta + phase), amplitude >= 0, phase in [0, 2pi).
struct BudgetPart {
  double offset = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Detection probability split by how many photons remain in the reference
/// (non-tilded) internal mode. Parts sum back to the full fringe.
struct InterferenceBudget {
  std::map<int, BudgetPart> parts;  // keyed by non-tilded photon count
  int harmonic = 0;                 // common fringe harmonic of every part
};

/// Closed form for the delayed single-photon superposition seen by (0,1)
/// detection: probability (1 - alpha_mag cos theta)/2, visibility alpha_mag.
std::pair<double, double> analytic_single(double alpha_mag, double theta);

struct ThreePhotonProbabilities {
  double p_three = 0.0;  // all three photons indistinguishable
  double p_two = 0.0;    // two indistinguishable, one in the orthogonal mode
  double p_no = 0.0;     // no interference
  double visibility = 0.0;
};

/// Closed form for the delayed |2,1>+|1,2> state seen by (2,1) detection:
/// the three interference components and the visibility
/// |alpha_mag (2 - 3 alpha_mag^2)| / (3 - 2 alpha_mag^2).
ThreePhotonProbabilities analytic_three(double alpha_mag, double theta);

/// Full pipeline scan: build (|N,M>+|M,N>)/sqrt2, delay path B, apply the
/// balanced beam splitter, read the pattern probability at each phase sample.
/// The delay fixes the envelope; the scanned phase overrides the decomposition
/// phase. samples >= 64.
FringeScan fringe_scan(int n, int m, DetectionPattern pattern, double tau,
                       const WavepacketSpec& spec, int samples = 256);

/// Discrete Fourier coefficients c_h of P(theta) for h = 0 .. samples/2, with
/// c_0 the mean and P(theta) ~ c_0 + sum_h 2 Re(c_h e^{i h theta}). Requires
/// uniform sampling.
std::map<int, std::complex<double>> harmonic_content(const FringeScan& scan);

/// Reduces one scan to a VisibilityPoint via its dominant harmonic.
VisibilityPoint scan_visibility(const FringeScan& scan);

/// One VisibilityPoint per delay in the ascending grid, each from a scan with
/// samples >= 256.
std::vector<VisibilityPoint> visibility_curve(int n, int m, DetectionPattern pattern,
                                              std::span<const double> tau_grid,
                                              const WavepacketSpec& spec,
                                              int samples = 256);

/// Groups the detection probability by the number of non-tilded photons in
/// the delayed input state. Terms with different tilded counts evolve into
/// orthogonal output subspaces, so each group contributes an independent
/// fringe and the parts reconstruct the total exactly.
InterferenceBudget interference_budget(int n, int m, DetectionPattern pattern,
                                       double tau, const WavepacketSpec& spec,
                                       int samples = 256);

struct SinusoidFit {
  double offset = 0.0;
  double amplitude = 0.0;  // >= 0
  double phase = 0.0;      // [0, 2pi)
  double residual = 0.0;   // weighted RMS of data minus model
  double visibility = 0.0;
  bool negative_offset = false;
};

/// Weighted least squares of counts ~ offset + amplitude cos(h theta + phase)
/// for a fixed harmonic h >= 1. stddevs, when nonempty, weight points by
/// 1/sigma^2. Needs >= 4 points and a nondegenerate design.
SinusoidFit fit_sinusoid(std::span<const double> thetas,
                         std::span<const double> counts,
                         std::span<const double> stddevs = {}, int harmonic = 1);

}  // namespace fockfringe
