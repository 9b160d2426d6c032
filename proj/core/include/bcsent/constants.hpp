#pragma once

namespace bcsent::constants {

/// Boltzmann constant in eV/K (CODATA 2018, exact).
inline constexpr double boltzmann_ev_per_k = 8.617333262e-5;

/// Weak-coupling BCS ratio Δ(0) / (k_B T_c).
inline constexpr double bcs_gap_ratio = 1.764;

/// One Rydberg in eV (CODATA 2018).
inline constexpr double rydberg_ev = 13.605693122994;

inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace bcsent::constants
