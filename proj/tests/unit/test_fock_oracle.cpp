#include <cmath>
#include <numbers>
#include <vector>

#include "bcsent/concurrence.hpp"
#include "bcsent/errors.hpp"
#include "bcsent/fock_oracle.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "random.hpp"

using namespace bcsent;
using bcsent::testing::Rng;

namespace {

struct Modes {
  std::vector<double> u, v;
};

// Random normalized (u, v) with arbitrary signs.
Modes random_modes(Rng& rng, int m) {
  Modes out;
  for (int i = 0; i < m; ++i) {
    const double theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
    out.u.push_back(std::cos(theta));
    out.v.push_back(std::sin(theta));
  }
  return out;
}

}  // namespace

TEST_CASE("build_bcs_state small cases") {
  SUBCASE("vacuum") {
    const auto s = build_bcs_state(std::vector{1.0}, std::vector{0.0});
    CHECK(s.num_modes() == 1);
    CHECK(s.amplitude(0) == 1.0);
    CHECK(s.amplitude(1) == 0.0);
  }
  SUBCASE("single half-filled pair") {
    const double r = 1.0 / std::numbers::sqrt2;
    const auto s = build_bcs_state(std::vector{r}, std::vector{r});
    CHECK(s.amplitude(0) == r);
    CHECK(s.amplitude(1) == r);
  }
  SUBCASE("two modes expanded by hand") {
    const std::vector<double> u{0.8, 0.6}, v{0.6, 0.8};
    const auto s = build_bcs_state(u, v);
    CHECK(s.amplitude(0b00) == doctest::Approx(0.48));  // u0 u1
    CHECK(s.amplitude(0b01) == doctest::Approx(0.36));  // v0 u1
    CHECK(s.amplitude(0b10) == doctest::Approx(0.64));  // u0 v1
    CHECK(s.amplitude(0b11) == doctest::Approx(0.48));  // v0 v1
  }
}

TEST_CASE("property: coefficients match the factor-by-factor expansion and stay normalized") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_modes(rng, rng.integer(1, 10));
    const auto s = build_bcs_state(m.u, m.v);
    const auto t = time_reverse(m.u, m.v);
    double norm = 0.0;
    for (std::size_t p = 0; p < s.amplitudes().size(); ++p) {
      CHECK(s.amplitude(p) == doctest::Approx(bcsent::testing::bcs_coefficient(m.u, m.v, p)).epsilon(1e-13));
      CHECK(t.amplitude(p) == doctest::Approx(bcsent::testing::bcs_coefficient(m.u, m.v, p, -1.0)).epsilon(1e-13));
      norm += s.amplitude(p) * s.amplitude(p);
    }
    CHECK(std::abs(norm - 1.0) < 1e-10);
    CHECK(std::abs(overlap(s, s) - 1.0) < 1e-10);
  }
}

TEST_CASE("time_reverse") {
  SUBCASE("vacuum factors are unchanged") {
    const std::vector<double> u{1.0, -1.0, 1.0}, v{0.0, 0.0, 0.0};
    const auto s = build_bcs_state(u, v);
    const auto t = time_reverse(u, v);
    for (std::size_t p = 0; p < 8; ++p) CHECK(s.amplitude(p) == t.amplitude(p));
  }
  SUBCASE("twice is the identity") {
    Rng rng(2);
    const auto m = random_modes(rng, 6);
    std::vector<double> minus_v(m.v.size());
    for (std::size_t i = 0; i < m.v.size(); ++i) minus_v[i] = -m.v[i];
    const auto back = time_reverse(m.u, minus_v);
    const auto s = build_bcs_state(m.u, m.v);
    for (std::size_t p = 0; p < s.amplitudes().size(); ++p) CHECK(back.amplitude(p) == s.amplitude(p));
  }
  SUBCASE("single half-filled pair is orthogonal to its partner") {
    const double r = 1.0 / std::numbers::sqrt2;
    const auto t = time_reverse(std::vector{r}, std::vector{r});
    CHECK(t.amplitude(0) == r);
    CHECK(t.amplitude(1) == -r);
    CHECK(overlap(build_bcs_state(std::vector{r}, std::vector{r}), t) == 0.0);
  }
  SUBCASE("equals the pair-parity flip of the state") {
    Rng rng(8);
    const auto m = random_modes(rng, 7);
    const auto a = time_reverse(m.u, m.v);
    const auto b = parity_flip(build_bcs_state(m.u, m.v));
    for (std::size_t p = 0; p < a.amplitudes().size(); ++p) CHECK(a.amplitude(p) == doctest::Approx(b.amplitude(p)));
  }
}

TEST_CASE("property: overlap with the time-reversed state is the discrete concurrence") {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int modes = rng.integer(1, 10);
    const auto eps = rng.uniform_vector(static_cast<std::size_t>(modes), -2.0, 2.0);
    const double gap = rng.uniform(0.0, 1.0);
    const auto amps = bcs_amplitudes(eps, gap);
    std::vector<double> u, v;
    double exact_sign = 1.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
      u.push_back(std::sqrt(amps.u2()[k]));
      v.push_back(std::sqrt(amps.v2()[k]));
      if (amps.v2()[k] > amps.u2()[k]) exact_sign = -exact_sign;
    }
    const double ov = overlap(build_bcs_state(u, v), time_reverse(u, v));
    const double c = concurrence_discrete(amps).value;
    CHECK(std::abs(std::abs(ov) - c) < 1e-10);
    if (c > 1e-8) CHECK(ov * exact_sign > 0.0);
  }
}

TEST_CASE("Fermi sea has unit concurrence") {
  const std::vector<double> u(8, 0.0), v(8, 1.0);
  CHECK(std::abs(overlap(build_bcs_state(u, v), time_reverse(u, v))) == 1.0);
}

TEST_CASE("GHZ- and W-like pair states have zero concurrence") {
  const double g = 1.0 / std::numbers::sqrt2;
  const double w = 1.0 / std::sqrt(3.0);
  const PairModeState ghz({g, 0, 0, 0, 0, 0, 0, g});
  const PairModeState wstate({0, w, w, 0, w, 0, 0, 0});
  CHECK(overlap(ghz, spin_flip(ghz)) == doctest::Approx(0.0));
  CHECK(overlap(ghz, parity_flip(ghz)) == doctest::Approx(0.0));
  CHECK(overlap(wstate, spin_flip(wstate)) == 0.0);
  // Spin flip of W lands on the complementary patterns.
  const auto flipped = spin_flip(wstate);
  CHECK(std::abs(flipped.amplitude(0b110)) == doctest::Approx(w));
  CHECK(std::abs(flipped.amplitude(0b011)) == doctest::Approx(w));
  // A product Bell-pair factor, by contrast, is its own spin-flip partner up to sign.
  const PairModeState bell({0, g, -g, 0});
  CHECK(std::abs(overlap(bell, spin_flip(bell))) == doctest::Approx(1.0));
}

TEST_CASE("fock oracle errors") {
  CHECK_THROWS_AS(build_bcs_state(std::vector{0.8}, std::vector{0.8}), InvalidArgument);
  CHECK_THROWS_AS(build_bcs_state(std::vector{1.0, 1.0}, std::vector{0.0}), InvalidArgument);
  CHECK_THROWS_AS(build_bcs_state(std::vector<double>{}, std::vector<double>{}), InvalidArgument);
  const std::vector<double> u17(17, 1.0), v17(17, 0.0);
  CHECK_THROWS_AS(build_bcs_state(u17, v17), CapacityError);
  CHECK_NOTHROW(build_bcs_state(u17, v17, 17));
  CHECK_THROWS_AS(PairModeState({1.0, 0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(PairModeState({0.5, 0.5}), InvalidArgument);
  const auto one = build_bcs_state(std::vector{1.0}, std::vector{0.0});
  const auto two = build_bcs_state(std::vector{1.0, 1.0}, std::vector{0.0, 0.0});
  CHECK_THROWS_AS(overlap(one, two), InvalidArgument);
}
