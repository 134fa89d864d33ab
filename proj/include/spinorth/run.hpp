#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinorth/config.hpp"
#include "spinorth/oracle.hpp"
#include "spinorth/qubit.hpp"

namespace spinorth {

/// Overlap signal plus the S14 trace it derives from.
struct SignalArtifact {
  Config config;
  OrthogonalitySignal signal;
  std::vector<Complex> s14;
};

/// Long-format sweep: |S_or| over axis2 x time.
struct SweepArtifact {
  Config config;
  std::vector<double> times;
  std::vector<double> axis2_values;
  std::string axis2_name;
  // rows[j][i] = |S_or| at axis2_values[j], times[i]
  std::vector<std::vector<double>> rows;
};

struct EventsArtifact {
  Config config;
  OrthogonalityEvents events;
  std::size_t fallback_samples = 0;
};

struct VerifyArtifact {
  Config config;
  DivergenceReport report;
};

SignalArtifact run_signal(const Config& cfg);
SweepArtifact run_sweep(const Config& cfg);
EventsArtifact run_events(const Config& cfg);
VerifyArtifact run_verify(const Config& cfg);

/// Format a double with 17 significant digits, enough to reproduce the
/// exact bit pattern on read-back.
std::string format_full(double v);

void write_csv(const SignalArtifact& a, std::ostream& os);
void write_csv(const SweepArtifact& a, std::ostream& os);
void write_json(const SignalArtifact& a, std::ostream& os);
void write_json(const SweepArtifact& a, std::ostream& os);
void write_json(const EventsArtifact& a, std::ostream& os);
void write_json(const VerifyArtifact& a, std::ostream& os);
void write_text(const VerifyArtifact& a, std::ostream& os);
void write_svg(const SignalArtifact& a, std::ostream& os);
void write_svg(const SweepArtifact& a, std::ostream& os);

}  // namespace spinorth
