#pragma once

// Concurrence of the BCS state (overlap with its time-reversed partner) and
// the macrocanonical entanglement of pairing (MEP) derived from it.
//
// Continuum convention: each Cooper pair (k↑, −k↓) is counted once, so the
// continuum exponent is N(εF)·∫₀^{ħω_D} ln C_k dε over the one-sided shell.
// Integrating over the symmetric shell [−ħω_D, ħω_D] instead doubles ln C.

#include <string_view>

#include "bcsent/model.hpp"

namespace bcsent {

enum class ConcurrenceMethod { discrete_product, closed_form, quadrature };

std::string_view to_string(ConcurrenceMethod method) noexcept;

struct ConcurrenceResult {
  double value = 1.0;
  /// ln(value); -infinity when value is exactly 0.
  double log_value = 0.0;
  ConcurrenceMethod method = ConcurrenceMethod::closed_form;
};

/// C_k = |ε| / sqrt(ε² + Δ²). Returns 1 at ε = Δ = 0 (normal-metal limit).
double partial_concurrence(double epsilon, double gap);

/// ∏_k |u_k² − v_k²|, accumulated as a left-to-right sum of logarithms.
ConcurrenceResult concurrence_discrete(const BcsAmplitudes& amplitudes);

/// exp(weight · Σ_k ln|u_k² − v_k²|). With weight = N(εF)·Δε on a one-sided
/// grid this is a Riemann sum for the continuum exponent.
ConcurrenceResult concurrence_discrete(const BcsAmplitudes& amplitudes, double weight);

/// [1 + (n2/n1)²]^(−n1/2) · exp(−n2·atan(n1/n2)); exactly 1 at n2 = 0.
ConcurrenceResult concurrence_closed_form(const DimensionlessPair& numbers);

/// ∫₀^{n1} ln(x / sqrt(x² + n2²)) dx evaluated by tanh-sinh quadrature,
/// split at x = n2 and geometrically beyond it. Requires n2 > 0.
/// Throws ConvergenceError (with the best estimate) if `rel_tol` is not met
/// within `max_levels` halvings per panel.
double log_concurrence_quadrature(const DimensionlessPair& numbers, double rel_tol = 1e-13, int max_levels = 12);

/// 1 − C(BCS), with the Fermi sea (C = 1) as the zero-entanglement reference.
double mep(const DimensionlessPair& numbers);

/// 1 − concurrence_discrete(amplitudes).
double mep_discrete(const BcsAmplitudes& amplitudes);
double mep_discrete(const BcsAmplitudes& amplitudes, double weight);

/// Wootters' ℰ(C) = h(½[1 + sqrt(1 − C²)]) with the binary entropy h.
double entanglement_of_formation(double concurrence);

/// h(x) = −x log₂x − (1−x) log₂(1−x), h(0) = h(1) = 0.
double binary_entropy(double x);

}  // namespace bcsent
