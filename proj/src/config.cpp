#include "spinorth/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spinorth {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v.empty()) throw ConfigError(key, "empty numeric value");
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || !std::isfinite(out))
    throw ConfigError(key, "not a finite number: '" + value + "'");
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(key, "not an integer: '" + value + "'");
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

PairSelector parse_pair(const std::string& key, const std::string& value) {
  const auto comma = value.find(',');
  if (comma == std::string::npos) throw ConfigError(key, "expected 'i,f' with indices in 1..4");
  PairSelector p;
  p.initial = parse_int(key, value.substr(0, comma));
  p.final = parse_int(key, value.substr(comma + 1));
  if (p.initial < 1 || p.initial > 4 || p.final < 1 || p.final > 4)
    throw ConfigError(key, "pair indices must be in 1..4");
  return p;
}

const std::vector<std::string> kAxisNames = {"gamma", "lambda", "dm", "g", "n_sites", "p"};

struct Axis2Builder {
  std::optional<std::string> name;
  std::optional<std::vector<double>> values;
  std::optional<double> min, max, step;

  void finish(Config& cfg) const {
    if (!name) {
      if (values || min || max || step)
        throw ConfigError("grid.axis2", "axis2 values given without an axis2 name");
      return;
    }
    SweepAxis axis;
    axis.name = *name;
    if (values) {
      if (min || max || step)
        throw ConfigError("grid.axis2_values", "give either axis2_values or axis2_min/max/step");
      axis.values = *values;
    } else {
      if (!min || !max || !step)
        throw ConfigError("grid.axis2", "axis2 needs axis2_values or all of axis2_min/max/step");
      if (*step <= 0) throw ConfigError("grid.axis2_step", "step must be positive");
      for (double v = *min; v <= *max + *step * 1e-9; v += *step) axis.values.push_back(v);
    }
    cfg.axis2 = axis;
  }
};

void apply_key(Config& cfg, Axis2Builder& axis2, const std::string& section,
               const std::string& key, const std::string& value) {
  const std::string full = section + "." + key;
  if (section == "chain") {
    if (key == "n_sites")
      cfg.chain.n_sites = parse_int(full, value);
    else if (key == "gamma")
      cfg.chain.anisotropy = parse_double(full, value);
    else if (key == "lambda")
      cfg.chain.field = parse_double(full, value);
    else if (key == "dm")
      cfg.chain.dm = parse_double(full, value);
    else if (key == "g")
      cfg.chain.coupling = parse_double(full, value);
    else
      throw ConfigError(full, "unknown key");
  } else if (section == "state") {
    if (key == "kind") {
      const std::string v = trim(value);
      if (v != "pure" && v != "bell") throw ConfigError(full, "must be 'pure' or 'bell'");
      cfg.state_kind = v;
    } else if (key == "p") {
      cfg.p = parse_double(full, value);
    } else if (key == "evolution") {
      const std::string v = trim(value);
      if (v != "full" && v != "x-block") throw ConfigError(full, "must be 'full' or 'x-block'");
      cfg.evolution = v;
    } else {
      throw ConfigError(full, "unknown key");
    }
  } else if (section == "grid") {
    if (key == "t_min")
      cfg.t_min = parse_double(full, value);
    else if (key == "t_max")
      cfg.t_max = parse_double(full, value);
    else if (key == "t_step")
      cfg.t_step = parse_double(full, value);
    else if (key == "axis2")
      axis2.name = trim(value);
    else if (key == "axis2_values")
      axis2.values = parse_list(full, value);
    else if (key == "axis2_min")
      axis2.min = parse_double(full, value);
    else if (key == "axis2_max")
      axis2.max = parse_double(full, value);
    else if (key == "axis2_step")
      axis2.step = parse_double(full, value);
    else
      throw ConfigError(full, "unknown key");
  } else if (section == "detection") {
    if (key == "threshold")
      cfg.threshold = parse_double(full, value);
    else if (key == "pair")
      cfg.pair = parse_pair(full, value);
    else
      throw ConfigError(full, "unknown key");
  } else {
    throw ConfigError(section, "unknown section");
  }
}

}  // namespace

std::vector<double> Config::time_grid() const {
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((t_max - t_min) / t_step + 1e-9)) + 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(t_min + static_cast<double>(i) * t_step);
  return out;
}

InitialStateSpec Config::state_spec() const {
  if (state_kind == "bell") return InitialStateSpec::bell_phi_plus();
  return InitialStateSpec::generic_pure(p);
}

EvolutionForm Config::evolution_form() const {
  return evolution == "x-block" ? EvolutionForm::XBlock : EvolutionForm::Full;
}

SignalRequest Config::signal_request() const {
  return SignalRequest{state_spec(), chain, pair, evolution_form()};
}

void Config::validate() const {
  try {
    chain.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("chain", e.what());
  }
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("state.p", "must lie in [0, 1]");
  if (!(t_step > 0)) throw ConfigError("grid.t_step", "must be positive");
  if (!(t_max > t_min)) throw ConfigError("grid.t_max", "must exceed t_min");
  if (!(threshold > 0 && threshold <= 0.5))
    throw ConfigError("detection.threshold", "must lie in (0, 0.5]");
  if (threads < 1) throw ConfigError("threads", "must be at least 1");
  if (axis2) {
    if (std::find(kAxisNames.begin(), kAxisNames.end(), axis2->name) == kAxisNames.end())
      throw ConfigError("grid.axis2", "unknown axis name '" + axis2->name + "'");
    if (axis2->values.empty()) throw ConfigError("grid.axis2_values", "empty axis");
    for (std::size_t i = 1; i < axis2->values.size(); ++i)
      if (!(axis2->values[i] > axis2->values[i - 1]))
        throw ConfigError("grid.axis2_values", "values must be strictly increasing");
    if (axis2->name == "n_sites") {
      for (const double v : axis2->values) {
        const double rounded = std::round(v);
        if (std::abs(v - rounded) > 1e-9 || static_cast<int>(rounded) % 2 == 0 || rounded < 3)
          throw ConfigError("grid.axis2_values", "n_sites values must be odd integers >= 3");
      }
    }
    if (axis2->name == "p") {
      for (const double v : axis2->values)
        if (v < 0.0 || v > 1.0) throw ConfigError("grid.axis2_values", "p values must lie in [0, 1]");
    }
  }
}

std::vector<std::pair<std::string, std::string>> Config::describe() const {
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("chain.n_sites", std::to_string(chain.n_sites));
  out.emplace_back("chain.gamma", num(chain.anisotropy));
  out.emplace_back("chain.lambda", num(chain.field));
  out.emplace_back("chain.dm", num(chain.dm));
  out.emplace_back("chain.g", num(chain.coupling));
  out.emplace_back("state.kind", state_kind);
  out.emplace_back("state.p", num(p));
  out.emplace_back("state.evolution", evolution);
  out.emplace_back("grid.t_min", num(t_min));
  out.emplace_back("grid.t_max", num(t_max));
  out.emplace_back("grid.t_step", num(t_step));
  if (axis2) {
    out.emplace_back("grid.axis2", axis2->name);
    std::string vals;
    for (std::size_t i = 0; i < axis2->values.size(); ++i) {
      if (i) vals += ",";
      vals += num(axis2->values[i]);
    }
    out.emplace_back("grid.axis2_values", vals);
  }
  out.emplace_back("detection.threshold", num(threshold));
  out.emplace_back("detection.pair",
                   std::to_string(pair.initial) + "," + std::to_string(pair.final));
  return out;
}

Config parse_config(const std::string& text) {
  Config cfg;
  Axis2Builder axis2;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(line_no), "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw ConfigError(key, "key outside any [section]");
    apply_key(cfg, axis2, section, key, value);
  }
  axis2.finish(cfg);
  return cfg;
}

Config load_config(const std::string& path) {
  if (path.empty()) return Config{};
  std::ifstream f(path);
  if (!f) throw ConfigError(path, "cannot open config file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void apply_override(Config& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError(assignment, "override must look like section.key=value");
  const std::string dotted = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  const auto dot = dotted.find('.');
  if (dot == std::string::npos)
    throw ConfigError(dotted, "override must look like section.key=value");
  Axis2Builder axis2;
  if (cfg.axis2) {
    axis2.name = cfg.axis2->name;
    axis2.values = cfg.axis2->values;
  }
  apply_key(cfg, axis2, dotted.substr(0, dot), dotted.substr(dot + 1), value);
  cfg.axis2.reset();
  axis2.finish(cfg);
}

}  // namespace spinorth
