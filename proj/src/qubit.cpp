#include "spinorth/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "spinorth/golden.hpp"

namespace spinorth {

namespace {

constexpr double kCoherenceFloor = 1e-14;
constexpr double kDegenerateGap = 1e-9;
constexpr double kRefineTol = 1e-4;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

void TwoQubitDensity::validate() const {
  const double hd = hermiticity_defect(matrix);
  if (hd > 1e-12)
    throw std::invalid_argument("matrix is not Hermitian (defect " + std::to_string(hd) + ")");
  const double tr_err = std::abs(trace(matrix) - Complex{1.0});
  if (tr_err > 1e-12)
    throw std::invalid_argument("matrix trace differs from 1 by " + std::to_string(tr_err));
  const auto eig = hermitian_eigensystem(matrix);
  if (eig.values.back() < -1e-10)
    throw std::invalid_argument("matrix is not positive semidefinite (min eigenvalue " +
                                std::to_string(eig.values.back()) + ")");
  const double pur = purity();
  if (pur < 0.25 - 1e-12 || pur > 1.0 + 1e-12)
    throw std::invalid_argument("purity " + std::to_string(pur) + " outside [1/4, 1]");
}

double TwoQubitDensity::purity() const { return trace(matrix * matrix).real(); }

InitialStateSpec InitialStateSpec::generic_pure(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  InitialStateSpec s;
  s.kind_ = Kind::GenericPure;
  s.p_ = p;
  s.q_ = std::sqrt(1.0 - p * p);
  return s;
}

InitialStateSpec InitialStateSpec::bell_phi_plus() {
  InitialStateSpec s;
  s.kind_ = Kind::BellPhiPlus;
  return s;
}

InitialStateSpec InitialStateSpec::custom(const Mat4& rho) {
  TwoQubitDensity d{rho};
  d.validate();
  InitialStateSpec s;
  s.kind_ = Kind::Custom;
  s.custom_ = rho;
  return s;
}

TwoQubitDensity initial_state(const InitialStateSpec& spec) {
  Mat4 m;
  switch (spec.kind()) {
    case InitialStateSpec::Kind::BellPhiPlus:
      m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
      break;
    case InitialStateSpec::Kind::GenericPure: {
      const double p = spec.p();
      const double q = spec.q();
      // 1/4 (I + p(sx - tx) - sx tx - q(sy ty + sz tz)) in the computational basis
      const double dlo = 0.25 * (1.0 - q);
      const double dhi = 0.25 * (1.0 + q);
      m(0, 0) = m(3, 3) = dlo;
      m(1, 1) = m(2, 2) = dhi;
      m(0, 3) = m(3, 0) = -dlo;
      m(1, 2) = m(2, 1) = -dhi;
      m(0, 1) = m(1, 0) = -0.25 * p;
      m(0, 2) = m(2, 0) = 0.25 * p;
      m(1, 3) = m(3, 1) = 0.25 * p;
      m(2, 3) = m(3, 2) = -0.25 * p;
      break;
    }
    case InitialStateSpec::Kind::Custom:
      m = spec.custom_matrix();
      break;
  }
  return TwoQubitDensity{m};
}

TwoQubitDensity initial_state_x_block(const InitialStateSpec& spec) {
  TwoQubitDensity full = initial_state(spec);
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    m(i, i) = full.matrix(i, i);
    m(i, 3 - i) = full.matrix(i, 3 - i);
  }
  return TwoQubitDensity{m};
}

TwoQubitDensity evolve_state(const InitialStateSpec& spec, const DecoherenceMatrix& s,
                             EvolutionForm form) {
  const TwoQubitDensity rho0 =
      form == EvolutionForm::Full ? initial_state(spec) : initial_state_x_block(spec);
  return TwoQubitDensity{hadamard(rho0.matrix, s.entries)};
}

namespace {

EigenSystem analytic_generic_initial(double p, double q) {
  const double n = 2.0 * std::sqrt(1.0 + q);
  EigenSystem es;
  es.ordering = EigenOrdering::AnalyticFamily;
  es.pairs[0] = {0.0, phase_fixed({kInvSqrt2, 0.0, 0.0, kInvSqrt2})};
  es.pairs[1] = {0.0, phase_fixed({0.0, kInvSqrt2, kInvSqrt2, 0.0})};
  es.pairs[2] = {0.0, phase_fixed({(1.0 + q) / n, p / n, -p / n, -(1.0 + q) / n})};
  es.pairs[3] = {1.0, phase_fixed({-p / n, (1.0 + q) / n, -(1.0 + q) / n, p / n})};
  return es;
}

EigenSystem analytic_bell_initial() {
  EigenSystem es;
  es.ordering = EigenOrdering::AnalyticFamily;
  es.pairs[0] = {0.0, phase_fixed({0.0, 1.0, 0.0, 0.0})};
  es.pairs[1] = {0.0, phase_fixed({0.0, 0.0, 1.0, 0.0})};
  es.pairs[2] = {1.0, phase_fixed({kInvSqrt2, 0.0, 0.0, kInvSqrt2})};
  es.pairs[3] = {0.0, phase_fixed({-kInvSqrt2, 0.0, 0.0, kInvSqrt2})};
  return es;
}

/// Final eigenvectors of the X block. Only the phase of s14 enters the
/// vectors; the magnitude enters the eigenvalues.
EigenSystem analytic_final(const InitialStateSpec& spec, Complex s14) {
  const double mag = std::abs(s14);
  if (mag < kCoherenceFloor) throw DegenerateCoherence{};
  const Complex phase = s14 / mag;

  EigenSystem es;
  es.ordering = EigenOrdering::AnalyticFamily;
  if (spec.kind() == InitialStateSpec::Kind::BellPhiPlus) {
    es.pairs[0] = {0.0, phase_fixed({0.0, 1.0, 0.0, 0.0})};
    es.pairs[1] = {0.0, phase_fixed({0.0, 0.0, 1.0, 0.0})};
    es.pairs[2] = {0.5 * (1.0 + mag),
                   phase_fixed({phase * kInvSqrt2, 0.0, 0.0, Complex{kInvSqrt2}})};
    es.pairs[3] = {0.5 * (1.0 - mag),
                   phase_fixed({-phase * kInvSqrt2, 0.0, 0.0, Complex{kInvSqrt2}})};
  } else {
    const double q = spec.q();
    const double w = 0.25 * (1.0 - q);
    es.pairs[0] = {0.0, phase_fixed({0.0, kInvSqrt2, kInvSqrt2, 0.0})};
    es.pairs[1] = {0.5 * (1.0 + q), phase_fixed({0.0, -kInvSqrt2, kInvSqrt2, 0.0})};
    es.pairs[2] = {w * (1.0 + mag),
                   phase_fixed({-phase * kInvSqrt2, 0.0, 0.0, Complex{kInvSqrt2}})};
    es.pairs[3] = {w * (1.0 - mag),
                   phase_fixed({phase * kInvSqrt2, 0.0, 0.0, Complex{kInvSqrt2}})};
  }
  return es;
}

}  // namespace

EigenSystem eigensystem_analytic(const InitialStateSpec& spec, const DecoherenceMatrix& s,
                                 EigenWhen when) {
  if (spec.kind() == InitialStateSpec::Kind::Custom)
    throw std::invalid_argument("no closed-form eigenvectors for custom states");
  if (when == EigenWhen::Initial) {
    return spec.kind() == InitialStateSpec::Kind::BellPhiPlus
               ? analytic_bell_initial()
               : analytic_generic_initial(spec.p(), spec.q());
  }
  return analytic_final(spec, s.at(1, 4));
}

EigenSystem eigensystem_numeric(const TwoQubitDensity& rho) {
  const HermitianEigen raw = hermitian_eigensystem(rho.matrix);

  EigenSystem es;
  es.ordering = EigenOrdering::Descending;
  for (std::size_t i = 0; i < 4; ++i) es.pairs[i] = {raw.values[i], raw.vectors[i]};

  // rebuild degenerate clusters against the computational basis in index order
  std::size_t start = 0;
  while (start < 4) {
    std::size_t stop = start + 1;
    while (stop < 4 && std::abs(es.pairs[stop].value - es.pairs[start].value) <= kDegenerateGap)
      ++stop;
    const std::size_t size = stop - start;
    if (size > 1) {
      std::vector<Vec4> picked;
      picked.reserve(size);
      for (std::size_t b = 0; b < 4 && picked.size() < size; ++b) {
        // project e_b onto the cluster subspace
        Vec4 w{};
        for (std::size_t m = start; m < stop; ++m) {
          const Vec4& v = es.pairs[m].vector;
          const Complex coef = std::conj(v[b]);
          for (std::size_t i = 0; i < 4; ++i) w[i] += v[i] * coef;
        }
        for (const Vec4& u : picked) {
          const Complex proj = inner(u, w);
          for (std::size_t i = 0; i < 4; ++i) w[i] -= u[i] * proj;
        }
        if (norm(w) > 1e-6) picked.push_back(normalized(w));
      }
      // keep the raw Jacobi basis in the (unreachable) case the projections degenerate
      if (picked.size() == size)
        for (std::size_t m = start; m < stop; ++m) es.pairs[m].vector = picked[m - start];
    }
    start = stop;
  }

  for (auto& pair : es.pairs) pair.vector = phase_fixed(pair.vector);
  return es;
}

namespace {

void check_pair(const PairSelector& pair) {
  if (pair.initial < 1 || pair.initial > 4 || pair.final < 1 || pair.final > 4)
    throw std::invalid_argument("pair selector indices must be in 1..4");
}

Vec4 initial_vector(const SignalRequest& req) {
  if (req.state.kind() == InitialStateSpec::Kind::Custom) {
    const EigenSystem es = eigensystem_numeric(initial_state(req.state));
    return es.at(req.pair.initial).vector;
  }
  const EigenSystem es = req.state.kind() == InitialStateSpec::Kind::BellPhiPlus
                             ? analytic_bell_initial()
                             : analytic_generic_initial(req.state.p(), req.state.q());
  return es.at(req.pair.initial).vector;
}

}  // namespace

Complex overlap_sample(const SignalRequest& req, double t, bool* fallback) {
  check_pair(req.pair);
  const Vec4 mu = initial_vector(req);

  Vec4 psi;
  bool used_numeric = false;
  const bool closed_form = req.state.kind() != InitialStateSpec::Kind::Custom;
  const Complex s14 = closed_form ? decoherence_factor(t, 1, 4, req.chain) : Complex{};

  if (closed_form && std::abs(s14) >= kCoherenceFloor) {
    psi = analytic_final(req.state, s14).at(req.pair.final).vector;
  } else {
    const DecoherenceMatrix s = decoherence_matrix(t, req.chain);
    const EigenSystem es = eigensystem_numeric(evolve_state(req.state, s, req.form));
    psi = es.at(req.pair.final).vector;
    used_numeric = true;
  }
  if (fallback) *fallback = used_numeric;

  const Complex overlap = inner(psi, mu);
  if (std::abs(overlap) > 1.0 + 1e-10)
    throw InvariantError("overlap exceeded unit modulus at t=" + std::to_string(t));
  return overlap;
}

namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const int n = std::max(1, threads);
  if (n == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + static_cast<std::size_t>(n) - 1) / static_cast<std::size_t>(n);
  for (int w = 0; w < n; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

OrthogonalitySignal orthogonality_signal(const SignalRequest& req, std::span<const double> grid,
                                         int threads) {
  if (grid.empty()) throw std::invalid_argument("time grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("time grid must be increasing");
  check_pair(req.pair);
  req.chain.validate();

  OrthogonalitySignal sig;
  sig.pair = req.pair;
  sig.times.assign(grid.begin(), grid.end());
  sig.overlaps.resize(grid.size());
  std::vector<unsigned char> fell(grid.size(), 0);

  parallel_for(grid.size(), threads, [&](std::size_t i) {
    bool fb = false;
    sig.overlaps[i] = overlap_sample(req, sig.times[i], &fb);
    fell[i] = fb ? 1 : 0;
  });

  for (std::size_t i = 0; i < fell.size(); ++i)
    if (fell[i]) sig.fallback_samples.push_back(static_cast<std::uint32_t>(i));
  return sig;
}

OrthogonalityEvents find_orthogonality_events(const OrthogonalitySignal& signal, double threshold,
                                              const std::function<double(double)>& abs_overlap) {
  if (signal.times.empty()) throw std::invalid_argument("signal is empty");
  if (!(threshold > 0.0 && threshold <= 0.5))
    throw std::invalid_argument("threshold must lie in (0, 0.5]");

  const std::size_t n = signal.times.size();
  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(signal.overlaps[i]);

  OrthogonalityEvents ev;
  ev.threshold = threshold;

  // One event per maximal below-threshold run that is entered from above.
  // A signal that starts below threshold (or never rises above it) has not
  // dipped, so such a leading run produces no event.
  std::size_t i = 0;
  while (i < n) {
    if (mag[i] >= threshold) {
      ++i;
      continue;
    }
    std::size_t lo = i;
    while (i < n && mag[i] < threshold) ++i;
    const std::size_t hi = i;  // run is [lo, hi)
    if (lo == 0) continue;

    std::size_t imin = lo;
    for (std::size_t j = lo + 1; j < hi; ++j)
      if (mag[j] < mag[imin]) imin = j;

    double t_star = signal.times[imin];
    double v_star = mag[imin];
    if (abs_overlap) {
      const double left = signal.times[imin - 1];
      const double right = signal.times[std::min(imin + 1, n - 1)];
      if (right > left) {
        auto [tg, vg] = golden_minimize(abs_overlap, left, right, kRefineTol);
        if (vg < v_star) {
          t_star = tg;
          v_star = vg;
        }
      }
    }
    ev.event_times.push_back(t_star);
  }
  ev.count = static_cast<int>(ev.event_times.size());
  if (!ev.event_times.empty()) ev.first_event = ev.event_times.front();
  return ev;
}

std::function<double(double)> abs_overlap_evaluator(const SignalRequest& req) {
  return [req](double t) { return std::abs(overlap_sample(req, t)); };
}

}  // namespace spinorth
