// Strict config parsing, defaults, and the serialize/parse round trip.
#include <doctest.h>

#include <string>

#include "hriot/config.hpp"
#include "hriot/rng.hpp"

using namespace hriot;

TEST_CASE("empty input yields the defaults, materialized") {
  const ScenarioConfig cfg = parse_config("");
  CHECK(cfg.rho == 0.5);
  CHECK(cfg.branching == 2);
  CHECK(cfg.device_count == 100);
  CHECK(cfg.cloud_x == doctest::Approx(100.0));  // area center materialized
  CHECK(cfg.cloud_y == doctest::Approx(100.0));
  CHECK(cfg.weights.size() == 6);
}

TEST_CASE("comments and blank lines are ignored") {
  const ScenarioConfig cfg = parse_config(
      "# scenario\n\ndevice_count = 7  # inline comment\n rounds = 3 \n");
  CHECK(cfg.device_count == 7);
  CHECK(cfg.rounds == 3);
}

TEST_CASE("errors name the key and line") {
  SUBCASE("unknown key") {
    try {
      parse_config("rounds = 1\nbogus_key = 3\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("bogus_key") != std::string::npos);
      CHECK(msg.find("line 2") != std::string::npos);
    }
  }
  SUBCASE("negative count") {
    try {
      parse_config("device_count = -1\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("device_count") != std::string::npos);
    }
  }
  SUBCASE("type mismatch") {
    CHECK_THROWS_AS(parse_config("rounds = soon\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("rho = high\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("duplicate_to_all_overlaps = yes\n"), ConfigError);
  }
  SUBCASE("missing equals sign") {
    CHECK_THROWS_AS(parse_config("just some text\n"), ConfigError);
  }
  SUBCASE("constraint violations") {
    CHECK_THROWS_AS(parse_config("rho = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("rho = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("base_loss = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("area_width = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("weights = 1,2,3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("branching = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("fog_count = 2\nfog_positions = 1:2\n"), ConfigError);
  }
}

TEST_CASE("explicit fog positions") {
  const ScenarioConfig cfg =
      parse_config("fog_count = 2\nfog_positions = 50:60; 150:40\n");
  REQUIRE(cfg.fog_positions.size() == 2);
  CHECK(cfg.fog_positions[0].x == 50.0);
  CHECK(cfg.fog_positions[1].y == 40.0);
}

TEST_CASE("serialize/parse round trip") {
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    ScenarioConfig cfg;
    cfg.area_width = rng.uniform(10.0, 1000.0);
    cfg.area_height = rng.uniform(10.0, 1000.0);
    cfg.device_count = std::uint32_t(rng.below(500));
    cfg.fog_count = std::uint32_t(1 + rng.below(9));
    cfg.rounds = std::uint32_t(rng.below(1000));
    cfg.seed = rng.next_u64();
    cfg.rho = rng.uniform(0.01, 1.0);
    cfg.base_loss = rng.uniform(0.0, 1.0);
    cfg.packet_bits = rng.uniform(0.0, 1e5);
    cfg.aggregation_ratio = rng.uniform(0.01, 1.0);
    cfg.max_speed_mps = rng.uniform(0.0, 20.0);
    cfg.traffic_model = rng.bernoulli(0.5) ? TrafficModel::Constant : TrafficModel::Poisson;
    for (double& w : cfg.weights) w = rng.uniform(0.0, 2.0);
    cfg.weights[0] += 0.1;
    if (rng.bernoulli(0.5)) {
      cfg.fog_positions.clear();
      for (std::uint32_t f = 0; f < cfg.fog_count; ++f) {
        cfg.fog_positions.push_back({rng.uniform(0.0, 500.0), rng.uniform(0.0, 500.0)});
      }
    }
    cfg.validate();

    const std::string text = serialize_config(cfg);
    const ScenarioConfig reparsed = parse_config(text);
    CHECK(serialize_config(reparsed) == text);
  }
}

TEST_CASE("protocol names") {
  CHECK(parse_protocol("HRIOT") == Protocol::HRIOT);
  CHECK(parse_protocol("EECRP_LIKE") == Protocol::EECRP_LIKE);
  CHECK(protocol_name(Protocol::DIRECT) == "DIRECT");
  CHECK_THROWS_AS(parse_protocol("LEACH"), ConfigError);
}
