#include "bcsent/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bcsent/errors.hpp"
#include "bcsent/quadrature.hpp"

namespace bcsent {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

ConcurrenceResult from_log(double log_value, ConcurrenceMethod method) {
  return {log_value == kNegInf ? 0.0 : std::exp(log_value), log_value, method};
}

// ln(x / sqrt(x² + g²)) without cancellation on either side of x = g.
double log_partial(double x, double g) {
  if (x < g) {
    const double r = x / g;
    return std::log(r) - 0.5 * std::log1p(r * r);
  }
  const double r = g / x;
  return -0.5 * std::log1p(r * r);
}

}  // namespace

std::string_view to_string(ConcurrenceMethod method) noexcept {
  switch (method) {
    case ConcurrenceMethod::discrete_product: return "discrete-product";
    case ConcurrenceMethod::closed_form: return "closed-form";
    case ConcurrenceMethod::quadrature: return "quadrature";
  }
  return "unknown";
}

double partial_concurrence(double epsilon, double gap) {
  if (!(gap >= 0.0)) throw InvalidArgument("partial_concurrence: gap must be non-negative");
  if (gap == 0.0) return 1.0;
  if (epsilon == 0.0) return 0.0;
  return std::abs(epsilon) / std::hypot(epsilon, gap);
}

ConcurrenceResult concurrence_discrete(const BcsAmplitudes& amplitudes) {
  return concurrence_discrete(amplitudes, 1.0);
}

ConcurrenceResult concurrence_discrete(const BcsAmplitudes& amplitudes, double weight) {
  if (amplitudes.size() == 0) throw InvalidArgument("concurrence_discrete: empty grid");
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw InvalidArgument("concurrence_discrete: weight must be positive");
  const auto u2 = amplitudes.u2();
  const auto v2 = amplitudes.v2();
  double log_sum = 0.0;
  for (std::size_t i = 0; i < u2.size(); ++i) {
    const double factor = std::abs(u2[i] - v2[i]);
    if (factor == 0.0) return {0.0, kNegInf, ConcurrenceMethod::discrete_product};
    log_sum += std::log(factor);
  }
  return from_log(weight * log_sum, ConcurrenceMethod::discrete_product);
}

ConcurrenceResult concurrence_closed_form(const DimensionlessPair& numbers) {
  const double n1 = numbers.n1();
  const double n2 = numbers.n2();
  if (n2 == 0.0) return {1.0, 0.0, ConcurrenceMethod::closed_form};
  const double ratio = n2 / n1;
  const double log_base = ratio < 1e150 ? std::log1p(ratio * ratio) : 2.0 * std::log(ratio);
  const double log_value = -0.5 * n1 * log_base - n2 * std::atan(n1 / n2);
  return from_log(log_value, ConcurrenceMethod::closed_form);
}

double log_concurrence_quadrature(const DimensionlessPair& numbers, double rel_tol, int max_levels) {
  const double n1 = numbers.n1();
  const double n2 = numbers.n2();
  if (!(n2 > 0.0)) throw InvalidArgument("log_concurrence_quadrature: n2 must be positive");
  if (!(rel_tol > 0.0)) throw InvalidArgument("log_concurrence_quadrature: rel_tol must be positive");
  if (max_levels < 1) throw InvalidArgument("log_concurrence_quadrature: max_levels must be at least 1");

  // Panels: [0, min(n1, n2)] holds the log singularity; beyond n2 the
  // integrand decays like -n2²/(2x²), so panels grow geometrically.
  constexpr double kPanelRatio = 8.0;
  std::vector<double> breaks{0.0, std::min(n1, n2)};
  while (breaks.back() < n1) breaks.push_back(std::min(n1, breaks.back() * kPanelRatio));

  TanhSinhOptions opt;
  opt.rel_tol = rel_tol;
  opt.max_levels = max_levels;
  opt.min_levels = std::min(opt.min_levels, max_levels);
  auto integrand = [n2](double x) { return log_partial(x, n2); };

  double total = 0.0;
  bool converged = true;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const auto piece = tanh_sinh(integrand, breaks[i], breaks[i + 1], opt);
    total += piece.value;
    converged = converged && piece.converged;
  }
  if (!converged)
    throw ConvergenceError("log_concurrence_quadrature: tolerance not reached", total);
  return total;
}

double mep(const DimensionlessPair& numbers) {
  return 0.0 - std::expm1(concurrence_closed_form(numbers).log_value);  // no -0 at n2 = 0
}

double mep_discrete(const BcsAmplitudes& amplitudes) { return mep_discrete(amplitudes, 1.0); }

double mep_discrete(const BcsAmplitudes& amplitudes, double weight) {
  const auto c = concurrence_discrete(amplitudes, weight);
  return c.log_value == kNegInf ? 1.0 : 0.0 - std::expm1(c.log_value);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("binary_entropy: x must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -(x * std::log2(x) + (1.0 - x) * std::log2(1.0 - x));
}

double entanglement_of_formation(double concurrence) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0))
    throw InvalidArgument("entanglement_of_formation: concurrence must lie in [0, 1]");
  const double c2 = concurrence * concurrence;
  const double s = std::sqrt((1.0 - concurrence) * (1.0 + concurrence));
  // 1 - x = ½(1 - s) = c²/(2(1 + s)), formed without cancellation.
  const double q = 0.5 * c2 / (1.0 + s);
  if (q == 0.0) return 0.0;
  return -((1.0 - q) * std::log1p(-q) / std::numbers::ln2 + q * std::log2(q));
}

}  // namespace bcsent
