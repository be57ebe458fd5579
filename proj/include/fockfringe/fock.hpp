#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>

#include "fockfringe/wavepacket.hpp"

namespace fockfringe {

/// Largest supported total photon number.
inline constexpr int kPhotonCap = 8;

/// Amplitudes below this magnitude are dropped after state-building operations.
inline constexpr double kPruneThreshold = 1e-15;

/// Whether a state lives on the interferometer inputs (paths A, B) or on the
/// beam-splitter outputs (paths C, D).
enum class PathDomain : std::uint8_t { input, output };

/// One mode of the 2x2 lattice: a path index (0 = A or C, 1 = B or D) and an
/// internal index (0 = undelayed reference wavepacket, 1 = its orthogonal
/// complement, the "tilded" mode).
struct ModeLabel {
  std::uint8_t path = 0;
  std::uint8_t internal_mode = 0;

  int flat_index() const { return path * 2 + internal_mode; }
};

/// Photon occupations over the four (path x internal) modes, stored in the
/// canonical order (path0/int0, path0/int1, path1/int0, path1/int1) so that
/// equality, ordering and hashing are well defined.
struct FockBasisState {
  std::array<std::uint8_t, 4> occ{};

  /// All photons in internal mode 0.
  static FockBasisState from_paths(int path0, int path1);
  static FockBasisState from_occupation(int p0i0, int p0i1, int p1i0, int p1i1);

  int total() const;
  int path_total(int path) const;
  int internal_total(int internal_mode) const;
  std::uint8_t occupation(ModeLabel m) const { return occ[m.flat_index()]; }

  auto operator<=>(const FockBasisState&) const = default;
};

/// Sparse complex superposition over Fock basis states sharing one fixed
/// total photon number. Immutable in practice: operations return fresh states.
class PureState {
public:
  PureState() = default;
  explicit PureState(PathDomain domain) : domain_(domain) {}

  PathDomain domain() const { return domain_; }
  const std::map<FockBasisState, std::complex<double>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int total_photons() const;
  double norm_squared() const;

  /// Accumulates an amplitude; rejects basis states whose total photon number
  /// differs from the terms already present.
  void add(const FockBasisState& basis, std::complex<double> amplitude);
  void prune(double threshold = kPruneThreshold);

private:
  PathDomain domain_ = PathDomain::input;
  std::map<FockBasisState, std::complex<double>> terms_;
};

/// (|N,M> + |M,N>)/sqrt(2) on input paths, all photons in internal mode 0.
/// For N == M the two kets coincide and the state is the single ket |N,N>.
PureState build_nm_superposition(int n, int m);

/// Rewrites every photon in path B through the delay decomposition, producing
/// binomially weighted terms with k photons moved to the orthogonal internal
/// mode. Requires a state that has not been delayed yet.
PureState apply_delay_to_path_b(const PureState& state,
                                const DelayDecomposition& decomposition);

}  // namespace fockfringe
