#include "doctest.h"
#include "spinorth/config.hpp"

using namespace spinorth;

TEST_CASE("defaults") {
  const Config cfg;
  CHECK(cfg.chain.n_sites == 7);
  CHECK(cfg.chain.coupling == 0.1);
  CHECK(cfg.state_kind == "pure");
  CHECK(cfg.p == 0.5);
  CHECK(cfg.threshold == 0.02);
  CHECK(cfg.pair.initial == 3);
  CHECK(cfg.pair.final == 3);
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.time_grid().size() == 2001);
  CHECK(cfg.time_grid().front() == 0.0);
  CHECK(cfg.time_grid().back() == doctest::Approx(100.0));
}

TEST_CASE("parse a full document") {
  const Config cfg = parse_config(R"(
# comment line
[chain]
n_sites = 13
gamma = 0.5
lambda = 0.1   ; trailing comment
dm = 0.3
g = 0.2

[state]
kind = bell

[grid]
t_min = 0
t_max = 50
t_step = 0.1
axis2 = gamma
axis2_values = 0, 0.5, 1

[detection]
threshold = 0.05
pair = 4,4
)");
  CHECK(cfg.chain.n_sites == 13);
  CHECK(cfg.chain.anisotropy == 0.5);
  CHECK(cfg.chain.field == 0.1);
  CHECK(cfg.chain.dm == 0.3);
  CHECK(cfg.chain.coupling == 0.2);
  CHECK(cfg.state_kind == "bell");
  CHECK(cfg.t_max == 50.0);
  REQUIRE(cfg.axis2.has_value());
  CHECK(cfg.axis2->name == "gamma");
  CHECK(cfg.axis2->values == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(cfg.threshold == 0.05);
  CHECK(cfg.pair.initial == 4);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("axis from range keys") {
  const Config cfg = parse_config(R"(
[grid]
axis2 = dm
axis2_min = 0
axis2_max = 1
axis2_step = 0.25
)");
  REQUIRE(cfg.axis2.has_value());
  CHECK(cfg.axis2->values.size() == 5);
  CHECK(cfg.axis2->values[4] == doctest::Approx(1.0));
}

TEST_CASE("errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse_config("[chain]\nwidth = 3\n"), doctest::Contains("chain.width"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[engine]\nx = 1\n"), doctest::Contains("engine"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[chain]\ngamma = fast\n"), doctest::Contains("chain.gamma"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[state]\nkind = wobbly\n"), doctest::Contains("state.kind"),
                       ConfigError);
  CHECK_THROWS_AS(parse_config("gamma = 0.5\n"), ConfigError);

  Config cfg;
  cfg.t_step = -1;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("t_step"), ConfigError);
  cfg = Config{};
  cfg.threshold = 0.9;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("threshold"), ConfigError);
  cfg = Config{};
  cfg.chain.n_sites = 8;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = Config{};
  cfg.axis2 = SweepAxis{"gamma", {0.5, 0.5}};
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("increasing"), ConfigError);
  cfg.axis2 = SweepAxis{"n_sites", {4.0, 6.0}};
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("odd"), ConfigError);
  cfg.axis2 = SweepAxis{"volume", {0.0, 1.0}};
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("axis"), ConfigError);
}

TEST_CASE("overrides") {
  Config cfg;
  apply_override(cfg, "chain.gamma=0.5");
  apply_override(cfg, "state.kind=bell");
  apply_override(cfg, "detection.pair=4,4");
  CHECK(cfg.chain.anisotropy == 0.5);
  CHECK(cfg.state_kind == "bell");
  CHECK(cfg.pair.final == 4);

  CHECK_THROWS_AS(apply_override(cfg, "nonsense"), ConfigError);
  CHECK_THROWS_WITH_AS(apply_override(cfg, "chain.mass=3"), doctest::Contains("chain.mass"),
                       ConfigError);
}

TEST_CASE("describe lists every effective setting") {
  Config cfg;
  cfg.axis2 = SweepAxis{"gamma", {0.0, 1.0}};
  const auto kv = cfg.describe();
  auto has = [&](const std::string& key) {
    for (const auto& [k, v] : kv)
      if (k == key) return true;
    return false;
  };
  for (const char* key : {"chain.n_sites", "chain.gamma", "chain.lambda", "chain.dm", "chain.g",
                          "state.kind", "state.p", "state.evolution", "grid.t_min", "grid.t_max",
                          "grid.t_step", "grid.axis2", "grid.axis2_values", "detection.threshold",
                          "detection.pair"})
    CHECK(has(key));
}
