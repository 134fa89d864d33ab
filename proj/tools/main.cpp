#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinorth/config.hpp"
#include "spinorth/presets.hpp"
#include "spinorth/run.hpp"
#include "spinorth/version.hpp"

namespace {

using namespace spinorth;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  int threads = 1;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_config = true) {
  if (with_config) cmd->add_option("--config", opts.config_path, "config file path");
  cmd->add_option("--out", opts.out_path, "output path ('-' or empty writes to stdout)");
  cmd->add_option("--format", opts.format, "output format: csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  cmd->add_option("--threads", opts.threads, "worker threads for grid evaluation")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--set", opts.overrides, "override, e.g. --set chain.gamma=0.5")
      ->take_all();
}

Config resolve(const CommonOpts& opts, const Config* base = nullptr) {
  Config cfg = base ? *base : load_config(opts.config_path);
  if (base && !opts.config_path.empty())
    throw ConfigError("--config", "presets do not take a config file; use --set overrides");
  for (const std::string& o : opts.overrides) apply_override(cfg, o);
  cfg.threads = opts.threads;
  cfg.validate();
  for (const std::string& w : cfg.chain.warnings()) std::cerr << "warning: " << w << "\n";
  return cfg;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_signal(const Config& cfg, const CommonOpts& opts) {
  const SignalArtifact art = run_signal(cfg);
  Output out(opts.out_path);
  if (opts.format == "json")
    write_json(art, out.stream());
  else if (opts.format == "svg")
    write_svg(art, out.stream());
  else
    write_csv(art, out.stream());
}

void emit_sweep(const Config& cfg, const CommonOpts& opts) {
  const SweepArtifact art = run_sweep(cfg);
  Output out(opts.out_path);
  if (opts.format == "json")
    write_json(art, out.stream());
  else if (opts.format == "svg")
    write_svg(art, out.stream());
  else
    write_csv(art, out.stream());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit dephasing against an XY chain with DM interaction"};
  app.set_version_flag("--version", std::string("spinorth ") + kVersion);
  app.require_subcommand(1);

  CommonOpts opts;

  auto* simulate = app.add_subcommand("simulate", "overlap signal on the configured time grid");
  add_common(simulate, opts);

  auto* sweep = app.add_subcommand("sweep", "signal over a second parameter axis");
  add_common(sweep, opts);

  auto* events = app.add_subcommand("events", "detect and refine orthogonality events");
  add_common(events, opts);

  auto* verify = app.add_subcommand("verify", "compare the product formula with exact dynamics");
  add_common(verify, opts);

  std::string preset_name;
  auto* figure = app.add_subcommand("figure", "run a named figure preset");
  figure->add_option("preset", preset_name, "preset name (see list-presets)")->required();
  add_common(figure, opts, /*with_config=*/false);

  auto* list = app.add_subcommand("list-presets", "list the built-in figure presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      emit_signal(resolve(opts), opts);
    } else if (sweep->parsed()) {
      emit_sweep(resolve(opts), opts);
    } else if (events->parsed()) {
      const EventsArtifact art = run_events(resolve(opts));
      Output out(opts.out_path);
      write_json(art, out.stream());
    } else if (verify->parsed()) {
      const VerifyArtifact art = run_verify(resolve(opts));
      Output out(opts.out_path);
      if (opts.format == "json")
        write_json(art, out.stream());
      else
        write_text(art, out.stream());
    } else if (figure->parsed()) {
      const auto preset = find_preset(preset_name);
      if (!preset) throw ConfigError("preset", "unknown preset '" + preset_name + "'");
      const Config cfg = resolve(opts, &preset->config);
      if (cfg.axis2)
        emit_sweep(cfg, opts);
      else
        emit_signal(cfg, opts);
    } else if (list->parsed()) {
      for (const FigurePreset& p : figure_presets())
        std::cout << p.name << "  -  " << p.description << "\n";
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
