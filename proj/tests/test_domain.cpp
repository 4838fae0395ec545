// Radio/energy model, RSSI and link expiration time.
#include <doctest.h>

#include <cmath>
#include <limits>

#include "hriot/node.hpp"
#include "hriot/rng.hpp"

using namespace hriot;

namespace {

NodeState at(double x, double y, double vx = 0.0, double vy = 0.0) {
  NodeState n;
  n.position = {x, y};
  n.velocity = {vx, vy};
  return n;
}

}  // namespace

TEST_CASE("distance basics") {
  CHECK(distance(at(0, 0), at(0, 0)) == 0.0);
  CHECK(distance(at(0, 0), at(3, 4)) == doctest::Approx(5.0));
  CHECK(distance(at(10, 10), at(-10, 10)) == doctest::Approx(20.0));
  // symmetry
  CHECK(distance(at(1, 2), at(7, -3)) == distance(at(7, -3), at(1, 2)));
}

TEST_CASE("tx_energy follows the first-order radio model") {
  RadioModel m;  // defaults: e_elec 50 nJ/bit, eps_fs 10 pJ/bit/m^2

  CHECK(tx_energy(m, 1000, 0.0) == doctest::Approx(50e-6));
  CHECK(tx_energy(m, 2000, 50.0) == doctest::Approx(150e-6));
  CHECK(tx_energy(m, 0, 123.0) == 0.0);

  SUBCASE("monotone in bits and distance") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
      const double bits = rng.uniform(0.0, 1e5);
      const double d1 = rng.uniform(0.0, 300.0);
      const double d2 = rng.uniform(0.0, 300.0);
      const double lo = std::min(d1, d2);
      const double hi = std::max(d1, d2);
      CHECK(tx_energy(m, bits, lo) <= tx_energy(m, bits, hi));
      CHECK(tx_energy(m, bits, lo) <= tx_energy(m, bits + 1.0, lo));
    }
  }

  SUBCASE("continuous at the crossover distance") {
    const double d0 = m.d0();
    const double eps = 1e-9 * d0;
    const double below = tx_energy(m, 4000, d0 - eps);
    const double above = tx_energy(m, 4000, d0 + eps);
    CHECK(std::abs(below - above) / above < 1e-6);
  }
}

TEST_CASE("rx_energy is the electronics term") {
  RadioModel m;
  CHECK(rx_energy(m, 0) == 0.0);
  CHECK(rx_energy(m, 1000) == doctest::Approx(50e-6));
  CHECK(rx_energy(m, 1000) < tx_energy(m, 1000, 0.1));
}

TEST_CASE("rssi log-distance path loss") {
  RadioModel m;  // tx 0 dBm, pl0 40 dB, exponent 2
  CHECK(rssi(m, 1.0, 0.0) == doctest::Approx(-40.0));
  CHECK(rssi(m, 10.0, 0.0) == doctest::Approx(-60.0));
  CHECK(rssi(m, 100.0, 0.0) == doctest::Approx(-80.0));
  // d = 0 is clamped to the 1 m reference value
  CHECK(rssi(m, 0.0, 0.0) == rssi(m, 1.0, 0.0));
  CHECK(rssi(m, 10.0, 3.0) == doctest::Approx(-63.0));

  SUBCASE("strictly decreasing in distance") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
      double d1 = rng.uniform(1.0, 500.0);
      double d2 = rng.uniform(1.0, 500.0);
      if (d1 == d2) continue;
      if (d1 > d2) std::swap(d1, d2);
      CHECK(rssi(m, d1, 0.0) > rssi(m, d2, 0.0));
    }
  }
}

TEST_CASE("link expiration time") {
  SUBCASE("static pair in range never expires") {
    CHECK(link_expiration_time(at(0, 0), at(40, 0), 100.0) ==
          std::numeric_limits<double>::infinity());
  }
  SUBCASE("receding collinear pair") {
    CHECK(link_expiration_time(at(0, 0), at(40, 0, 10, 0), 100.0) ==
          doctest::Approx(6.0));
  }
  SUBCASE("already out of range") {
    CHECK(link_expiration_time(at(0, 0), at(150, 0), 100.0) == 0.0);
  }

  SUBCASE("general formula matches the collinear closed form") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
      const double d = rng.uniform(0.0, 99.0);
      const double v = rng.uniform(0.1, 30.0);
      const double angle = rng.uniform(0.0, 2.0 * M_PI);
      const double range = 100.0;
      // place the pair on a random line, receding along it
      NodeState a = at(0, 0);
      NodeState b = at(d * std::cos(angle), d * std::sin(angle),
                       v * std::cos(angle), v * std::sin(angle));
      const double expected = (range - d) / v;
      CHECK(std::abs(link_expiration_time(a, b, range) - expected) < 1e-9);
    }
  }
}
