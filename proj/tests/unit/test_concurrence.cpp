#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bcsent/concurrence.hpp"
#include "bcsent/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "random.hpp"

using namespace bcsent;
using bcsent::testing::Rng;

namespace {
// ε with ε/E = c for a unit gap, so that |u² − v²| = c.
double energy_for_factor(double c) { return c / std::sqrt(1.0 - c * c); }
}  // namespace

TEST_CASE("partial_concurrence values") {
  CHECK(partial_concurrence(0.5, 0.5) == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-15));
  CHECK(partial_concurrence(-3.0, 0.0) == 1.0);
  CHECK(partial_concurrence(1e-300, 0.0) == 1.0);
  CHECK(partial_concurrence(0.0, 0.9) == 0.0);
  CHECK(partial_concurrence(0.0, 0.0) == 1.0);
  CHECK_THROWS_AS(partial_concurrence(1.0, -0.1), InvalidArgument);
}

TEST_CASE("partial_concurrence is even and anchored at 1/sqrt(2)") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double gap = rng.log_uniform(1e-8, 1e4);
    const double eps = rng.uniform(-10.0, 10.0) * gap;
    CHECK(partial_concurrence(eps, gap) == partial_concurrence(-eps, gap));
    CHECK(std::abs(partial_concurrence(gap, gap) - 1.0 / std::numbers::sqrt2) < 1e-15);
  }
}

TEST_CASE("partial_concurrence equals |u^2 - v^2|") {
  Rng rng(4);
  const auto eps = rng.uniform_vector(500, -3.0, 3.0);
  const auto a = bcs_amplitudes(eps, 0.7);
  for (std::size_t i = 0; i < eps.size(); ++i)
    CHECK(std::abs(partial_concurrence(eps[i], 0.7) - std::abs(a.u2()[i] - a.v2()[i])) < 1e-15);
}

TEST_CASE("concurrence_discrete") {
  SUBCASE("unoccupied modes give 1") {
    const std::vector<double> eps{0.5, 1.0, 2.0};
    const auto c = concurrence_discrete(bcs_amplitudes(eps, 0.0));
    CHECK(c.value == 1.0);
    CHECK(c.log_value == 0.0);
    CHECK(c.method == ConcurrenceMethod::discrete_product);
  }
  SUBCASE("a half-filled mode annihilates the product") {
    const std::vector<double> eps{0.5, 0.0, 2.0};
    const auto c = concurrence_discrete(bcs_amplitudes(eps, 0.3));
    CHECK(c.value == 0.0);
    CHECK(c.log_value == -std::numeric_limits<double>::infinity());
  }
  SUBCASE("four modes with factors 0.9, 0.8, 0.7, 0.6") {
    std::vector<double> eps;
    for (double f : {0.9, 0.8, 0.7, 0.6}) eps.push_back(energy_for_factor(f));
    const auto c = concurrence_discrete(bcs_amplitudes(eps, 1.0));
    CHECK(std::abs(c.value - 0.3024) < 1e-12);
    CHECK(std::abs(std::exp(c.log_value) - c.value) < 1e-12);
  }
  SUBCASE("weights scale the exponent") {
    std::vector<double> eps{energy_for_factor(0.5)};
    const auto c = concurrence_discrete(bcs_amplitudes(eps, 1.0), 3.0);
    CHECK(c.value == doctest::Approx(0.125).epsilon(1e-13));
    CHECK_THROWS_AS(concurrence_discrete(bcs_amplitudes(eps, 1.0), 0.0), InvalidArgument);
  }
}

TEST_CASE("concurrence_closed_form values") {
  CHECK(concurrence_closed_form(DimensionlessPair(3.0, 0.0)).value == 1.0);
  CHECK(concurrence_closed_form(DimensionlessPair(3.0, 0.0)).log_value == 0.0);
  // 2^(−1/2) e^(−π/4)
  const auto c = concurrence_closed_form(DimensionlessPair(1.0, 1.0));
  CHECK(c.value == doctest::Approx(0.32239694194483447).epsilon(1e-14));
  CHECK(c.method == ConcurrenceMethod::closed_form);
  // 2^(−n/2) e^(−nπ/4) for n1 = n2 = n
  for (double n : {0.01, 0.5, 2.0, 30.0}) {
    const double expected = std::pow(2.0, -n / 2.0) * std::exp(-n * std::numbers::pi / 4.0);
    CHECK(concurrence_closed_form(DimensionlessPair(n, n)).value == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("closed form agrees with values frozen from 40-digit quadrature") {
  // mpmath.quad of ∫₀^{n1} ln(x/sqrt(x²+n2²)) dx at 40 digits.
  struct Case {
    double n1, n2, log_c;
  };
  const Case cases[] = {
      {0.02, 0.001, -0.001545806733058825879802201505169493202868},
      {0.5, 0.01, -0.0156079699335491950296933004321497157316},
      {1.0, 1.0, -1.131971753677420964324276906548964005087},
      {100.0, 100.0, -113.1971753677420964324276906548964005087},
      {1e-3, 100.0, -0.01251292546498689532641702891618997763979},
      {100.0, 1e-3, -0.001570791326794896735263214023653565221935},
  };
  for (const auto& k : cases) {
    const DimensionlessPair p(k.n1, k.n2);
    CHECK(std::abs(concurrence_closed_form(p).log_value - k.log_c) <= 1e-12 * std::max(1.0, std::abs(k.log_c)));
    CHECK(std::abs(log_concurrence_quadrature(p) - k.log_c) <= 1e-12 * std::max(1.0, std::abs(k.log_c)));
  }
  CHECK(concurrence_closed_form(DimensionlessPair(0.02, 0.001)).value ==
        doctest::Approx(0.9984553874107847075).epsilon(1e-14));
}

TEST_CASE("log_concurrence_quadrature") {
  CHECK(std::abs(log_concurrence_quadrature(DimensionlessPair(1.0, 1.0)) -
                 (-0.5 * std::numbers::ln2 - std::numbers::pi / 4.0)) < 1e-13);
  const DimensionlessPair p(0.5, 0.01);
  CHECK(std::abs(log_concurrence_quadrature(p) - concurrence_closed_form(p).log_value) < 1e-10);

  double previous = 0.0;
  for (double n2 : {0.01, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
    const double v = log_concurrence_quadrature(DimensionlessPair(2.0, n2));
    CHECK(v < previous);
    previous = v;
  }

  CHECK_THROWS_AS(log_concurrence_quadrature(DimensionlessPair(1.0, 0.0)), InvalidArgument);
  CHECK_THROWS_AS(log_concurrence_quadrature(p, 0.0), InvalidArgument);
}

TEST_CASE("log_concurrence_quadrature reports an unreachable tolerance") {
  const DimensionlessPair p(50.0, 0.3);
  try {
    log_concurrence_quadrature(p, 1e-15, 1);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::abs(e.best_estimate() - concurrence_closed_form(p).log_value) < 1e-2);
  }
}

TEST_CASE("property: closed form is at most 1 and strictly decreasing in n2") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const double n1 = rng.log_uniform(1e-3, 1e2);
    const double n2 = rng.log_uniform(1e-6, 1e2);
    const double c = concurrence_closed_form(DimensionlessPair(n1, n2)).value;
    CHECK(c < 1.0);
    CHECK(c >= 0.0);
    const double bigger = concurrence_closed_form(DimensionlessPair(n1, n2 * 1.01)).value;
    CHECK(bigger < c);
    // MEP is only resolvable while C is well above one ulp of 1.
    if (c > 1e-10) CHECK(mep(DimensionlessPair(n1, n2 * 1.01)) > mep(DimensionlessPair(n1, n2)));
  }
}

TEST_CASE("mep") {
  CHECK(mep(DimensionlessPair(4.0, 0.0)) == 0.0);
  CHECK(mep(DimensionlessPair(1.0, 1.0)) == doctest::Approx(1.0 - 0.32239694194483447).epsilon(1e-14));
  CHECK(mep(DimensionlessPair(1e4, 1e4)) == 1.0);
  // Small-n2 series.
  for (double n2 : {1e-9, 1e-7, 1e-5}) {
    const double n1 = 0.1;
    const double m = mep(DimensionlessPair(n1, n2));
    CHECK(std::abs(m - bcsent::testing::mep_small_gap_series(n1, n2)) < 1e-6 * m);
    CHECK(std::abs(m - (1.0 - std::exp(-std::numbers::pi * n2 / 2.0))) < 1e-3 * m);
  }
}

TEST_CASE("mep_discrete") {
  SUBCASE("Fermi sea is unentangled") {
    const std::vector<double> eps{-2.0, -1.0, -0.1, 0.1, 1.0, 2.0};
    CHECK(mep_discrete(bcs_amplitudes(eps, 0.0)) == 0.0);
  }
  SUBCASE("mode at the Fermi level gives 1") {
    const std::vector<double> eps{-1.0, 0.0, 1.0};
    CHECK(mep_discrete(bcs_amplitudes(eps, 0.2)) == 1.0);
  }
  SUBCASE("weighted one-sided grid converges to the continuum at first order") {
    const DimensionlessPair p(0.8, 0.05);
    const double target = mep(p);
    double previous_error = 0.0;
    for (int modes : {1000, 2000, 4000, 8000}) {
      // Dimensionless energies x = N(εF)·ε on (0, n1], weight Δx.
      const double h = p.n1() / modes;
      std::vector<double> x(static_cast<std::size_t>(modes));
      for (int i = 0; i < modes; ++i) x[i] = (i + 1) * h;
      const double err = std::abs(mep_discrete(bcs_amplitudes(x, p.n2()), h) - target);
      if (previous_error > 0.0) CHECK(err / previous_error == doctest::Approx(0.5).epsilon(0.05));
      previous_error = err;
    }
    CHECK(previous_error < 1e-2 * target);
  }
}

TEST_CASE("entanglement_of_formation") {
  CHECK(entanglement_of_formation(0.0) == 0.0);
  CHECK(entanglement_of_formation(1.0) == 1.0);
  // h(0.9), 40-digit reference 0.46899559358928122125...
  CHECK(entanglement_of_formation(0.6) == doctest::Approx(0.4689955935892812).epsilon(1e-14));
  CHECK(binary_entropy(0.9) == doctest::Approx(binary_entropy(0.1)).epsilon(1e-15));
  CHECK(binary_entropy(0.9) == doctest::Approx(bcsent::testing::binary_entropy_reference(0.9)).epsilon(1e-14));
  CHECK_THROWS_AS(entanglement_of_formation(-0.01), InvalidArgument);
  CHECK_THROWS_AS(entanglement_of_formation(1.01), InvalidArgument);

  double previous = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double v = entanglement_of_formation(i / 10000.0);
    CHECK(v >= previous - 1e-14);
    previous = v;
  }
}

TEST_CASE("method names") {
  CHECK(to_string(ConcurrenceMethod::discrete_product) == "discrete-product");
  CHECK(to_string(ConcurrenceMethod::closed_form) == "closed-form");
  CHECK(to_string(ConcurrenceMethod::quadrature) == "quadrature");
}
