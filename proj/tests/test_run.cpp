#include <chrono>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "spinorth/presets.hpp"
#include "spinorth/run.hpp"

using namespace spinorth;

namespace {

Config small_signal_config() {
  Config cfg;
  cfg.chain = {.n_sites = 7, .anisotropy = 0.5, .field = 0.2, .dm = 0, .coupling = 0.1};
  cfg.state_kind = "bell";
  cfg.t_max = 5.0;
  cfg.t_step = 0.05;
  return cfg;
}

}  // namespace

TEST_CASE("signal artifact shape and determinism") {
  const Config cfg = small_signal_config();
  const SignalArtifact art = run_signal(cfg);
  CHECK(art.signal.times.size() == 101);
  CHECK(art.s14.size() == 101);

  std::ostringstream a, b;
  write_csv(art, a);
  write_csv(run_signal(cfg), b);
  CHECK(a.str() == b.str());

  // one data row per grid point
  std::istringstream in(a.str());
  std::string line;
  int data_rows = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (!header_seen) {
      CHECK(line == "t,re_Sor,im_Sor,abs_Sor,re_S14,im_S14");
      header_seen = true;
      continue;
    }
    ++data_rows;
  }
  CHECK(data_rows == 101);
}

TEST_CASE("csv metadata header is pinned") {
  const SignalArtifact art = run_signal(small_signal_config());
  std::ostringstream os;
  write_csv(art, os);
  const std::string text = os.str();
  CHECK(text.rfind("# spinorth signal v1\n", 0) == 0);
  CHECK(text.find("# version = 0.1.0\n") != std::string::npos);
  CHECK(text.find("# chain.n_sites = 7\n") != std::string::npos);
  CHECK(text.find("# chain.gamma = 0.5\n") != std::string::npos);
  CHECK(text.find("# state.kind = bell\n") != std::string::npos);
  CHECK(text.find("# detection.pair = 3,3\n") != std::string::npos);
  CHECK(text.find("# fallback_samples = 0\n") != std::string::npos);
}

TEST_CASE("json keys are pinned") {
  const SignalArtifact art = run_signal(small_signal_config());
  std::ostringstream os;
  write_json(art, os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["schema"] == "spinorth-signal-v1");
  for (const char* key : {"version", "params", "t", "re_Sor", "im_Sor", "abs_Sor", "re_S14",
                          "im_S14", "fallback_samples"})
    CHECK(j.contains(key));
}

TEST_CASE("sweep artifact ordering") {
  Config cfg = small_signal_config();
  cfg.axis2 = SweepAxis{"gamma", {0.0, 0.5, 1.0}};
  const SweepArtifact art = run_sweep(cfg);
  CHECK(art.axis2_values.size() == 3);
  CHECK(art.rows.size() == 3);
  CHECK(art.rows[0].size() == art.times.size());

  std::ostringstream os;
  write_csv(art, os);
  std::istringstream in(os.str());
  std::string line;
  std::vector<std::string> rows;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (!header_seen) {
      CHECK(line == "t,gamma,abs_Sor");
      header_seen = true;
      continue;
    }
    rows.push_back(line);
  }
  REQUIRE(rows.size() == 3 * art.times.size());
  // axis2-major: first block is gamma=0 rows in time order
  CHECK(rows[0].rfind("0,0,", 0) == 0);
  CHECK(rows[art.times.size()].rfind("0,0.5,", 0) == 0);

  // single-value second axis reduces to the plain signal's magnitudes
  Config degenerate = small_signal_config();
  degenerate.axis2 = SweepAxis{"gamma", {0.5}};
  const SweepArtifact one = run_sweep(degenerate);
  const SignalArtifact sig = run_signal(small_signal_config());
  REQUIRE(one.rows.size() == 1);
  for (std::size_t i = 0; i < sig.signal.times.size(); ++i)
    CHECK(one.rows[0][i] == std::abs(sig.signal.overlaps[i]));

  Config missing = small_signal_config();
  CHECK_THROWS_AS(run_sweep(missing), ConfigError);
}

TEST_CASE("events artifact") {
  Config cfg;
  cfg.chain = {.n_sites = 7, .anisotropy = 0.5, .field = 0.4, .dm = 0, .coupling = 0.0};
  cfg.state_kind = "bell";
  cfg.t_max = 20.0;
  const EventsArtifact art = run_events(cfg);
  CHECK(art.events.count == 0);
  CHECK_FALSE(art.events.first_event.has_value());

  std::ostringstream os;
  write_json(art, os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["schema"] == "spinorth-events-v1");
  CHECK(j["count"] == 0);
  CHECK(j["first_event"].is_null());
  CHECK(j["event_times"].is_array());
}

TEST_CASE("verify artifact") {
  Config cfg;
  cfg.chain = {.n_sites = 7, .anisotropy = 0.5, .field = 0.2, .dm = 0, .coupling = 0.1};
  cfg.t_max = 20.0;
  cfg.t_step = 0.5;
  const VerifyArtifact art = run_verify(cfg);
  CHECK(art.report.max_abs_gap < 1e-9);
  CHECK_FALSE(art.report.dm_sensitive);

  std::ostringstream os;
  write_json(art, os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["schema"] == "spinorth-verify-v1");
  CHECK(j["pairs"].size() == 6);
  CHECK(j.contains("dm_sensitive"));

  std::ostringstream txt;
  write_text(art, txt);
  CHECK(txt.str().find("S_14") != std::string::npos);

  Config dm = cfg;
  dm.chain.dm = 0.3;
  CHECK(run_verify(dm).report.dm_sensitive);
}

TEST_CASE("svg emission") {
  const SignalArtifact art = run_signal(small_signal_config());
  std::ostringstream os;
  write_svg(art, os);
  const std::string svg = os.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);

  Config cfg = small_signal_config();
  cfg.axis2 = SweepAxis{"gamma", {0.0, 0.5, 1.0}};
  std::ostringstream os2;
  write_svg(run_sweep(cfg), os2);
  CHECK(os2.str().find("<polyline") != std::string::npos);

  std::vector<double> dense;
  for (double v = 0; v <= 1.0 + 1e-9; v += 0.05) dense.push_back(v);
  cfg.axis2 = SweepAxis{"gamma", dense};
  cfg.t_max = 2.0;
  std::ostringstream os3;
  write_svg(run_sweep(cfg), os3);
  CHECK(os3.str().find("<rect") != std::string::npos);
}

TEST_CASE("the default grid yields exactly 2001 rows") {
  Config cfg;
  cfg.state_kind = "bell";
  cfg.chain = {.n_sites = 3, .anisotropy = 0, .field = 1.0, .dm = 0, .coupling = 0.05};
  const SignalArtifact art = run_signal(cfg);
  CHECK(art.signal.times.size() == 2001);

  std::ostringstream os;
  write_csv(art, os);
  std::istringstream in(os.str());
  std::string line;
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#' && line[0] != 't') ++rows;
  CHECK(rows == 2001);
}

TEST_CASE("the heaviest preset stays inside the time budget") {
  const auto preset = find_preset("mes-contour-gamma-n9");
  REQUIRE(preset.has_value());
  const auto start = std::chrono::steady_clock::now();
  const SweepArtifact art = run_sweep(preset->config);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(art.rows.size() == 101);
  CHECK(secs < 10.0);
}

TEST_CASE("figure presets resolve and validate") {
  const auto& presets = figure_presets();
  CHECK(presets.size() == 15);
  for (const char* name :
       {"pes-n7", "pes-n27", "pes-lambda02", "pes-lambda09", "pes-g03", "pes-dm0-n13",
        "pes-dm03-n13", "pes-contour-n3", "pes-contour-n9", "mes-contour-gamma-n3",
        "mes-contour-gamma-n9", "mes-contour-dm-n7-gamma0", "mes-contour-dm-n7-gamma05",
        "mes-contour-dm-n7-gamma1", "mes-g03"})
    CHECK(find_preset(name).has_value());
  CHECK_FALSE(find_preset("pes-n8").has_value());

  for (const FigurePreset& p : presets) {
    CHECK_NOTHROW(p.config.validate());
    CHECK(p.config.axis2.has_value());
    if (p.name.rfind("pes", 0) == 0) {
      CHECK(p.config.state_kind == "pure");
      CHECK(p.config.pair.initial == 4);
    } else {
      CHECK(p.config.state_kind == "bell");
      CHECK(p.config.pair.initial == 3);
    }
  }
}
