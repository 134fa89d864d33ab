#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spinorth/chain.hpp"
#include "spinorth/linalg.hpp"

namespace spinorth {

/// Two-qubit density matrix in the ordered basis {|00>,|01>,|10>,|11>}.
struct TwoQubitDensity {
  Mat4 matrix;

  /// Hermiticity, unit trace, positivity and purity bounds; throws
  /// std::invalid_argument naming the violated property.
  void validate() const;

  double purity() const;
};

/// Initial two-qubit state selector.
///
/// GenericPure(p) is the one-parameter pure family
///   1/4 (I + p(sx - tx) - sx tx - q(sy ty + sz tz)),  q = sqrt(1 - p^2),
/// BellPhiPlus is (|00>+|11>)/sqrt(2), and Custom is any valid density
/// matrix supplied by the caller.
class InitialStateSpec {
 public:
  enum class Kind { GenericPure, BellPhiPlus, Custom };

  static InitialStateSpec generic_pure(double p);
  static InitialStateSpec bell_phi_plus();
  static InitialStateSpec custom(const Mat4& rho);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  double q() const { return q_; }
  const Mat4& custom_matrix() const { return custom_; }

 private:
  InitialStateSpec() = default;
  Kind kind_ = Kind::BellPhiPlus;
  double p_ = 0;
  double q_ = 1;
  Mat4 custom_;
};

/// Which coherences the dephasing channel acts on.
///
/// Full keeps every entry of the initial matrix; XBlock drops the
/// single-qubit coherences of the generic pure family first, leaving the
/// X-shaped matrix whose closed-form eigenvectors are used by the figure
/// presets.
enum class EvolutionForm { Full, XBlock };

TwoQubitDensity initial_state(const InitialStateSpec& spec);

/// Initial matrix with the off-X entries removed (diagonal and
/// anti-diagonal kept). A pinching, so still a valid density matrix.
TwoQubitDensity initial_state_x_block(const InitialStateSpec& spec);

/// Entrywise product of the initial density matrix with the decoherence
/// matrix; diagonal entries are untouched.
TwoQubitDensity evolve_state(const InitialStateSpec& spec, const DecoherenceMatrix& s,
                             EvolutionForm form = EvolutionForm::Full);

struct EigenPair {
  double value = 0;
  Vec4 vector{};
};

/// Order of the four pairs in an EigenSystem.
///
/// Numeric decompositions sort by descending eigenvalue with a
/// deterministic convention inside degenerate clusters. The closed-form
/// path keeps the fixed index order of the analytic eigenvector families
/// (the X-block coherence pair sits at indices 3 and 4 for the Bell state
/// and carries the evolved phase for both families).
enum class EigenOrdering { Descending, AnalyticFamily };

struct EigenSystem {
  std::array<EigenPair, 4> pairs;
  EigenOrdering ordering = EigenOrdering::Descending;

  /// 1-based access.
  const EigenPair& at(int index) const { return pairs[static_cast<std::size_t>(index - 1)]; }
};

enum class EigenWhen { Initial, Final };

/// Raised when the final X-block coherence vanishes and its eigenvectors
/// stop being uniquely defined.
class DegenerateCoherence : public std::runtime_error {
 public:
  DegenerateCoherence()
      : std::runtime_error(
            "coherence collapsed; final eigenvectors of the X-block are not uniquely defined") {}
};

/// Closed-form eigenvectors of the generic-pure / Bell families, normalized
/// and phase-fixed. Initial vectors diagonalize the t=0 matrix; final
/// vectors diagonalize the X-block of the evolved matrix and depend on S
/// only through the phase of S14. Throws DegenerateCoherence when
/// |S14| < 1e-14 and when = Final; throws std::invalid_argument for Custom
/// specs.
EigenSystem eigensystem_analytic(const InitialStateSpec& spec, const DecoherenceMatrix& s,
                                 EigenWhen when);

/// Full Hermitian eigendecomposition by cyclic Jacobi rotations, sorted by
/// descending eigenvalue. Inside a degenerate cluster the basis is rebuilt
/// to maximize overlap with the computational basis vectors in index order,
/// then every vector gets the standard phase fix.
EigenSystem eigensystem_numeric(const TwoQubitDensity& rho);

/// Tracked (initial eigenvector, final eigenvector) pair, 1-based indices
/// into the respective EigenSystems.
struct PairSelector {
  int initial = 3;
  int final = 3;
};

struct OrthogonalitySignal {
  std::vector<double> times;
  std::vector<Complex> overlaps;
  PairSelector pair;
  /// Sample indices where the closed-form path was unavailable and the
  /// numeric eigensolver convention was used instead.
  std::vector<std::uint32_t> fallback_samples;
};

/// Everything needed to evaluate the overlap <psi_pair(t)|mu_pair(0)> at an
/// arbitrary time.
struct SignalRequest {
  InitialStateSpec state = InitialStateSpec::bell_phi_plus();
  ChainParams chain;
  PairSelector pair;
  EvolutionForm form = EvolutionForm::Full;
};

/// One overlap sample; `fallback` reports whether the numeric path was used.
Complex overlap_sample(const SignalRequest& req, double t, bool* fallback = nullptr);

/// Samples the overlap on a time grid. The grid must be nonempty and
/// strictly increasing. Samples may be evaluated on several threads; the
/// result is ordered by time and independent of the thread count.
OrthogonalitySignal orthogonality_signal(const SignalRequest& req, std::span<const double> grid,
                                         int threads = 1);

struct OrthogonalityEvents {
  std::vector<double> event_times;
  int count = 0;
  std::optional<double> first_event;
  double threshold = 0;
};

/// Locates orthogonality events: each maximal run of grid samples below the
/// threshold that was entered from above counts once, at its minimum,
/// refined by golden-section search inside the bracketing grid cells to an
/// absolute time tolerance of 1e-4. A signal that starts below the
/// threshold or never rises above it has not dipped, so no event is
/// reported for such a run. Requires threshold in (0, 0.5] and a nonempty
/// signal.
OrthogonalityEvents find_orthogonality_events(const OrthogonalitySignal& signal, double threshold,
                                              const std::function<double(double)>& abs_overlap);

/// Convenience: |overlap_sample| as a reusable evaluator.
std::function<double(double)> abs_overlap_evaluator(const SignalRequest& req);

}  // namespace spinorth
