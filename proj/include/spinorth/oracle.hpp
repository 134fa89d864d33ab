#pragma once

#include <span>
#include <vector>

#include "spinorth/chain.hpp"
#include "spinorth/linalg.hpp"

namespace spinorth {

/// Hamiltonian of one momentum pair (k, -k) in the occupation basis
/// (|0_k 0_-k>, |1_k 1_-k>, |1_k 0_-k>, |0_k 1_-k>), normal ordered so the
/// pair ground energy is -(Omega_k + Omega_-k)/2. The pairing term couples
/// only |00> <-> |11| with magnitude 2*gamma*|sin K|; the DM term acts as a
/// number imbalance on the odd-parity block, so the even block carries no
/// DM dependence at all.
struct PairHamiltonian {
  Mat4 h;
  double momentum = 0;
};

/// Throws std::invalid_argument for K = 0 (the unpaired mode).
PairHamiltonian pair_hamiltonian(double momentum, double lam_nu, double gamma, double dm);

/// Ground state of the pair at bath field lam:
/// (cos(theta/2), i sin(theta/2), 0, 0) with theta the Bogoliubov angle.
Vec4 pair_ground_state(double momentum, double lam, double gamma);

/// Exact evolution overlap <G| e^{+i H_beta t} e^{-i H_alpha t} |G>
/// computed pair by pair with closed-form propagators of the 2x2 even
/// blocks (the ground state has even parity and parity is conserved).
/// This is the independent reference the analytic product formula is
/// checked against.
Complex oracle_decoherence_factor(double t, int alpha, int beta, const ChainParams& params);

struct PairGap {
  int alpha = 0;
  int beta = 0;
  double max_abs_gap = 0;      // max_t |S_formula - S_exact|
  double max_modulus_gap = 0;  // max_t | |S_formula| - |S_exact| |
  double max_phase_gap = 0;    // max_t |arg(S_formula * conj(S_exact))|
};

struct DivergenceReport {
  ChainParams params;
  std::vector<PairGap> pairs;  // the six unordered channel pairs
  double max_abs_gap = 0;
  bool dm_sensitive = false;  // dm != 0 and max gap above 1e-6
};

/// Compares the analytic product formula against the exact pair evolution
/// over a time grid. Informational: quantifies how far the DM-dependent
/// formula drifts from the DM-free exact dynamics.
DivergenceReport divergence_report(const ChainParams& params, std::span<const double> t_grid);

}  // namespace spinorth
