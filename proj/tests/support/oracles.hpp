#pragma once

// Independent reference computations used only by tests. None of these call
// into the library routine they are compared against.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>

namespace bcsent::testing {

/// Coefficient of occupation pattern `pattern` in ∏(u_i + v_i b†_i)|0⟩,
/// evaluated factor by factor.
inline double bcs_coefficient(std::span<const double> u, std::span<const double> v, std::size_t pattern,
                              double v_sign = 1.0) {
  double c = 1.0;
  for (std::size_t i = 0; i < u.size(); ++i) c *= ((pattern >> i) & 1U) ? v_sign * v[i] : u[i];
  return c;
}

/// Number of single-spin states below energy e for ε = ħ²k²/(2m) in a box of
/// volume L³: k³L³/(6π²).
inline double parabolic_state_count(double volume, double mass, double energy, double hbar = 1.0) {
  const double k = std::sqrt(2.0 * mass * energy) / hbar;
  return k * k * k * volume / (6.0 * std::numbers::pi * std::numbers::pi);
}

/// Central finite difference of the state count, dN/dε at `energy`.
inline double state_count_derivative(double volume, double mass, double energy, double hbar = 1.0) {
  const double h = 1e-5 * energy;
  return (parabolic_state_count(volume, mass, energy + h, hbar) -
          parabolic_state_count(volume, mass, energy - h, hbar)) /
         (2.0 * h);
}

/// Second-order small-n2 expansion of the continuum MEP:
/// ln C = −π n2/2 + n2²/(2 n1) + O(n2³/n1²).
inline double mep_small_gap_series(double n1, double n2) {
  return -std::expm1(-std::numbers::pi * n2 / 2.0 + n2 * n2 / (2.0 * n1));
}

/// −x log₂x − (1−x) log₂(1−x) in natural logs.
inline double binary_entropy_reference(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -(x * std::log(x) + (1.0 - x) * std::log(1.0 - x)) / std::numbers::ln2;
}

/// Solution of 1 = λ asinh(ω/Δ).
inline double gap_closed_form(double coupling, double debye_energy) {
  return debye_energy / std::sinh(1.0 / coupling);
}

}  // namespace bcsent::testing
