#include "spinorth/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinorth {

PairHamiltonian pair_hamiltonian(double momentum, double lam_nu, double gamma, double dm) {
  if (momentum == 0.0)
    throw std::invalid_argument("momentum must be nonzero: the k = 0 mode has no partner");
  if (!std::isfinite(momentum) || !std::isfinite(lam_nu) || !std::isfinite(gamma) ||
      !std::isfinite(dm))
    throw std::invalid_argument("pair_hamiltonian arguments must be finite");

  const double a = 2.0 * (lam_nu - std::cos(momentum));
  const double gs = 2.0 * gamma * std::sin(momentum);
  const double d = 4.0 * dm * std::sin(momentum);

  PairHamiltonian out;
  out.momentum = momentum;
  Mat4& h = out.h;
  h(0, 0) = -a;
  h(0, 1) = Complex{0.0, gs};
  h(1, 0) = Complex{0.0, -gs};
  h(1, 1) = a;
  h(2, 2) = d;
  h(3, 3) = -d;
  return out;
}

Vec4 pair_ground_state(double momentum, double lam, double gamma) {
  if (momentum == 0.0)
    throw std::invalid_argument("momentum must be nonzero: the k = 0 mode has no partner");
  const double half = 0.5 * bogoliubov_angle(momentum, lam, gamma);
  return {Complex{std::cos(half), 0.0}, Complex{0.0, std::sin(half)}, 0.0, 0.0};
}

namespace {

struct EvenBlock {
  double a = 0;   // diagonal: (-a, +a)
  double gs = 0;  // off-diagonal magnitude, entry (0,1) = +i*gs
};

EvenBlock even_block(double momentum, double lam_nu, double gamma) {
  return {2.0 * (lam_nu - std::cos(momentum)), 2.0 * gamma * std::sin(momentum)};
}

/// exp(-i h t) on the even block, exact: h has eigenvalues +-w with
/// w = hypot(a, gs), so exp(-i h t) = cos(wt) I - i sin(wt)/w h.
struct Unitary2 {
  Complex u00, u01, u10, u11;
};

Unitary2 even_propagator(const EvenBlock& b, double t) {
  const double w = std::hypot(b.a, b.gs);
  if (w == 0.0) return {1.0, 0.0, 0.0, 1.0};
  const double c = std::cos(w * t);
  const double s = std::sin(w * t) / w;
  // h = [[-a, i gs], [-i gs, a]]
  return {Complex{c, s * b.a}, Complex{s * b.gs, 0.0}, Complex{-s * b.gs, 0.0},
          Complex{c, -s * b.a}};
}

Unitary2 dagger(const Unitary2& u) {
  return {std::conj(u.u00), std::conj(u.u10), std::conj(u.u01), std::conj(u.u11)};
}

}  // namespace

Complex oracle_decoherence_factor(double t, int alpha, int beta, const ChainParams& params) {
  params.validate();
  if (!valid_channel(alpha) || !valid_channel(beta))
    throw std::invalid_argument("channel index must be in 1..4");
  if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");

  const DressedFields fields = dressed_fields(params);
  const double lam_a = fields.at(alpha);
  const double lam_b = fields.at(beta);

  Complex out = 1.0;
  const int m = params.mode_count();
  for (int k = 1; k <= m; ++k) {
    const double momentum = 2.0 * std::numbers::pi * k / params.n_sites;
    const double half = 0.5 * bogoliubov_angle(momentum, params.field, params.anisotropy);
    const Complex g0{std::cos(half), 0.0};
    const Complex g1{0.0, std::sin(half)};

    const Unitary2 ua = even_propagator(even_block(momentum, lam_a, params.anisotropy), t);
    const Unitary2 ub = dagger(even_propagator(even_block(momentum, lam_b, params.anisotropy), t));

    const Complex v0 = ua.u00 * g0 + ua.u01 * g1;
    const Complex v1 = ua.u10 * g0 + ua.u11 * g1;
    const Complex w0 = ub.u00 * v0 + ub.u01 * v1;
    const Complex w1 = ub.u10 * v0 + ub.u11 * v1;
    out *= std::conj(g0) * w0 + std::conj(g1) * w1;
  }
  return out;
}

DivergenceReport divergence_report(const ChainParams& params, std::span<const double> t_grid) {
  params.validate();
  if (t_grid.empty()) throw std::invalid_argument("time grid is empty");

  DivergenceReport rep;
  rep.params = params;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      PairGap gap;
      gap.alpha = a;
      gap.beta = b;
      for (const double t : t_grid) {
        const Complex sf = decoherence_factor(t, a, b, params);
        const Complex se = oracle_decoherence_factor(t, a, b, params);
        gap.max_abs_gap = std::max(gap.max_abs_gap, std::abs(sf - se));
        gap.max_modulus_gap = std::max(gap.max_modulus_gap, std::abs(std::abs(sf) - std::abs(se)));
        if (std::abs(sf) > 1e-30 && std::abs(se) > 1e-30)
          gap.max_phase_gap = std::max(gap.max_phase_gap, std::abs(std::arg(sf * std::conj(se))));
      }
      rep.max_abs_gap = std::max(rep.max_abs_gap, gap.max_abs_gap);
      rep.pairs.push_back(gap);
    }
  }
  rep.dm_sensitive = params.dm != 0.0 && rep.max_abs_gap > 1e-6;
  return rep;
}

}  // namespace spinorth
