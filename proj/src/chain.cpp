#include "spinorth/chain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinorth {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void ChainParams::validate() const {
  if (n_sites < 3) throw std::invalid_argument("n_sites must be at least 3");
  if (n_sites % 2 == 0) throw std::invalid_argument("n_sites must be odd");
  if (!finite(anisotropy)) throw std::invalid_argument("anisotropy must be finite");
  if (!finite(field)) throw std::invalid_argument("field must be finite");
  if (!finite(dm)) throw std::invalid_argument("dm must be finite");
  if (!finite(coupling)) throw std::invalid_argument("coupling must be finite");
}

std::vector<std::string> ChainParams::warnings() const {
  std::vector<std::string> out;
  if (anisotropy < 0.0 || anisotropy > 1.0)
    out.push_back("anisotropy " + std::to_string(anisotropy) + " outside the usual range [0, 1]");
  if (dm < -1.0 || dm > 1.0)
    out.push_back("dm " + std::to_string(dm) + " outside the usual range [-1, 1]");
  return out;
}

std::vector<ModeIndex> positive_modes(const ChainParams& params) {
  params.validate();
  std::vector<ModeIndex> out;
  const int m = params.mode_count();
  out.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k)
    out.push_back({k, 2.0 * std::numbers::pi * k / params.n_sites});
  return out;
}

DressedFields dressed_fields(const ChainParams& params) {
  params.validate();
  return DressedFields{
      {params.field + params.coupling, params.field, params.field, params.field - params.coupling}};
}

double dispersion(double momentum, double lam, double gamma, double dm) {
  return 2.0 * std::hypot(lam - std::cos(momentum), gamma * std::sin(momentum)) +
         4.0 * dm * std::sin(momentum);
}

double bogoliubov_angle(double momentum, double lam, double gamma) {
  const double y = gamma * std::sin(momentum);
  const double x = lam - std::cos(momentum);
  if (y == 0.0 && x == 0.0) return 0.0;  // degenerate point, fixed convention
  return std::atan2(y, x);
}

double eta(double momentum, double lam_nu, double lam, double gamma) {
  return 0.5 * (bogoliubov_angle(momentum, lam_nu, gamma) - bogoliubov_angle(momentum, lam, gamma));
}

bool valid_channel(int channel) { return channel >= 1 && channel <= 4; }

namespace {

void check_channel(int channel) {
  if (!valid_channel(channel)) throw std::invalid_argument("channel index must be in 1..4");
}

/// One paired-mode interference factor. The two ends of the bracket carry
/// the difference and the sum of the channel dispersions; the DM shift
/// cancels in the difference and survives in the sum.
Complex mode_factor(double t, double momentum, double lam_a, double lam_b, double lam, double gamma,
                    double dm) {
  const double eta_a = eta(momentum, lam_a, lam, gamma);
  const double eta_b = eta(momentum, lam_b, lam, gamma);
  const double omega_a = dispersion(momentum, lam_a, gamma, dm);
  const double omega_b = dispersion(momentum, lam_b, gamma, dm);
  const double delta = eta_a - eta_b;

  const Complex e_diff = std::polar(1.0, t * (omega_a - omega_b));
  const Complex e_sum = std::polar(1.0, t * (omega_a + omega_b));

  const double ca = std::cos(eta_a), sa = std::sin(eta_a);
  const double cb = std::cos(eta_b), sb = std::sin(eta_b);

  return std::cos(delta) * (ca * cb * e_diff + sa * sb * std::conj(e_diff)) -
         std::sin(delta) * (ca * sb * e_sum - sa * cb * std::conj(e_sum));
}

}  // namespace

Complex decoherence_factor(double t, int alpha, int beta, const ChainParams& params) {
  params.validate();
  check_channel(alpha);
  check_channel(beta);
  if (!finite(t)) throw std::invalid_argument("t must be finite");

  const DressedFields fields = dressed_fields(params);
  const double lam_a = fields.at(alpha);
  const double lam_b = fields.at(beta);

  Complex out = 1.0;
  const int m = params.mode_count();
  for (int k = 1; k <= m; ++k) {
    const double momentum = 2.0 * std::numbers::pi * k / params.n_sites;
    out *= mode_factor(t, momentum, lam_a, lam_b, params.field, params.anisotropy, params.dm);
  }
  return out;
}

DecoherenceMatrix decoherence_matrix(double t, const ChainParams& params) {
  DecoherenceMatrix s;
  s.time = t;
  for (int i = 0; i < 4; ++i) s.entries(i, i) = 1.0;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      // channels 2 and 3 share a dressed field, so their relative factor is trivial
      const Complex v = (a == 2 && b == 3) ? Complex{1.0} : decoherence_factor(t, a, b, params);
      if (std::abs(v) > 1.0 + 1e-9)
        throw InvariantError("decoherence factor exceeded unit modulus at t=" + std::to_string(t));
      s.entries(a - 1, b - 1) = v;
      s.entries(b - 1, a - 1) = std::conj(v);
    }
  }
  return s;
}

}  // namespace spinorth
