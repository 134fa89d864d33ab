#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinorth/linalg.hpp"

namespace spinorth {

/// Environment and coupling configuration for a periodic anisotropic XY
/// chain in a transverse field with a Dzyaloshinsky-Moriya (DM) term,
/// locally coupled to a two-qubit system.
struct ChainParams {
  int n_sites = 7;        // N, odd and >= 3
  double anisotropy = 0;  // gamma, exchange anisotropy in the xy plane
  double field = 0;       // lambda, transverse field strength
  double dm = 0;          // D, DM interaction strength along z
  double coupling = 0.1;  // g, system-environment coupling

  /// Throws std::invalid_argument on hard violations (even/too-small N,
  /// non-finite values). Soft range excursions are reported by warnings().
  void validate() const;

  /// Non-fatal notes: anisotropy outside [0,1] or dm outside [-1,1].
  std::vector<std::string> warnings() const;

  /// M = (N-1)/2, the number of paired momentum modes.
  int mode_count() const { return (n_sites - 1) / 2; }
};

/// Momentum mode k in {-M,...,M} with K = 2*pi*k/N.
struct ModeIndex {
  int k = 0;
  double momentum = 0;
};

/// The modes k = 1..M entering the product over paired modes.
std::vector<ModeIndex> positive_modes(const ChainParams& params);

/// Effective transverse fields seen by the chain, one per two-qubit
/// computational basis channel {|00>,|01>,|10>,|11>}:
/// (lambda+g, lambda, lambda, lambda-g).
struct DressedFields {
  std::array<double, 4> values{};

  /// 1-based channel index.
  double at(int channel) const { return values[static_cast<std::size_t>(channel - 1)]; }
};

DressedFields dressed_fields(const ChainParams& params);

/// Quasiparticle energy of mode K at effective field lam:
/// 2*sqrt((lam-cos K)^2 + gamma^2 sin^2 K) + 4*D*sin K.
/// May be negative for strong DM in the -K direction; not clamped.
double dispersion(double momentum, double lam, double gamma, double dm);

/// Mixing angle of the Bogoliubov rotation that diagonalizes the chain at
/// effective field lam, taken as the two-argument arctangent of
/// (gamma sin K, lam - cos K) so the angle stays continuous across
/// lam = cos K. At the doubly degenerate point (both arguments zero) the
/// angle is defined to be 0.
double bogoliubov_angle(double momentum, double lam, double gamma);

/// Half the angle mismatch between the mode dressed by channel field lam_nu
/// and the bare environment mode at field lam.
double eta(double momentum, double lam_nu, double lam, double gamma);

/// Channel indices are 1..4; throws std::invalid_argument otherwise.
bool valid_channel(int channel);

/// Overlap of the environment evolved under channel beta against channel
/// alpha, starting from the environment ground state: the product over the
/// paired modes k = 1..M of the per-mode interference factor built from the
/// dispersion and mixing angles above. The unpaired k = 0 mode is excluded.
Complex decoherence_factor(double t, int alpha, int beta, const ChainParams& params);

/// 4x4 matrix of decoherence factors at a fixed time. Entries satisfy
/// S[a][a] = 1, S[b][a] = conj(S[a][b]), |S| <= 1, and S[2][3] = 1 exactly
/// (channels 2 and 3 share the same dressed field).
struct DecoherenceMatrix {
  Mat4 entries;
  double time = 0;

  /// 1-based channel access.
  Complex at(int alpha, int beta) const { return entries(alpha - 1, beta - 1); }
};

/// Fills the matrix from the strict upper triangle: five products plus the
/// fixed (2,3) entry; the rest follow by conjugate symmetry and unit
/// diagonal. Throws InvariantError if an entry exceeds unit modulus beyond
/// rounding.
DecoherenceMatrix decoherence_matrix(double t, const ChainParams& params);

/// Raised when a computed quantity violates one of its structural bounds.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinorth
