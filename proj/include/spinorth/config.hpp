#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinorth/chain.hpp"
#include "spinorth/qubit.hpp"

namespace spinorth {

/// Configuration problem; `key` names the offending entry when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Second sweep axis: a named parameter with ordered values.
struct SweepAxis {
  std::string name;            // gamma | lambda | dm | g | n_sites | p
  std::vector<double> values;  // strictly increasing
};

/// Resolved run configuration. Every key is optional in the input document;
/// the defaults below are the baseline most figure settings differ from by
/// one or two keys.
struct Config {
  ChainParams chain{.n_sites = 7, .anisotropy = 0, .field = 0, .dm = 0, .coupling = 0.1};

  std::string state_kind = "pure";  // pure | bell
  double p = 0.5;
  std::string evolution = "full";  // full | x-block

  double t_min = 0;
  double t_max = 100;
  double t_step = 0.05;
  std::optional<SweepAxis> axis2;

  double threshold = 0.02;
  PairSelector pair{3, 3};

  int threads = 1;

  std::vector<double> time_grid() const;
  InitialStateSpec state_spec() const;
  EvolutionForm evolution_form() const;
  SignalRequest signal_request() const;

  /// Cross-field validation; throws ConfigError naming the bad key.
  void validate() const;

  /// Ordered key=value view of every setting, used for artifact headers.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

/// Parses the sectioned key-value document:
///
///   [chain]      n_sites, gamma, lambda, dm, g
///   [state]      kind, p, evolution
///   [grid]       t_min, t_max, t_step, axis2, axis2_values,
///                axis2_min, axis2_max, axis2_step
///   [detection]  threshold, pair
///
/// '#' and ';' start comments. Unknown sections or keys are errors.
Config parse_config(const std::string& text);

/// Loads and parses a config file; empty path gives the defaults.
Config load_config(const std::string& path);

/// Applies one dotted override, e.g. "chain.gamma=0.5".
void apply_override(Config& cfg, const std::string& assignment);

}  // namespace spinorth
