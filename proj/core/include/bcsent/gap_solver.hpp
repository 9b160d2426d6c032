#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "bcsent/model.hpp"

namespace bcsent {

/// Tabulated Eliashberg function α²(ω)·N_ph(ω) on a strictly ascending,
/// positive frequency grid (energy units).
class PhononSpectrum {
 public:
  /// Throws InvalidArgument on length < 2, mismatched lengths, ω <= 0,
  /// non-ascending ω or negative α²N.
  PhononSpectrum(std::vector<double> frequencies, std::vector<double> alpha2n);

  std::span<const double> frequencies() const noexcept { return frequencies_; }
  std::span<const double> alpha2n() const noexcept { return alpha2n_; }

 private:
  std::vector<double> frequencies_;
  std::vector<double> alpha2n_;
};

struct GapSolverOptions {
  double tol = 1e-12;
  int max_iter = 200;
};

/// Solves 1 = λ·asinh(ħω_D/Δ) for the homogeneous gap of a constant pairing
/// kernel inside the Debye shell.
///
/// The root is bracketed in s = ln(Δ/ħω_D), starting from [1e-12, 1]·ħω_D and
/// widening until the residual changes sign, then refined by Illinois
/// regula falsi with a bisection safeguard. Working in s makes the result
/// exactly covariant under ħω_D → c·ħω_D.
///
/// If the root is below the smallest normal double, returns gap = 0 with
/// `underflow` set. Throws ConvergenceError (best Δ attached) after
/// `max_iter` refinement steps.
GapSolution solve_gap(double coupling, double debye_energy, const GapSolverOptions& options = {});

/// |λ·asinh(ħω_D/Δ) − 1|.
double gap_residual(double coupling, double debye_energy, double gap);

/// λ = 2∫ α²N(ω)/ω dω by the trapezoidal rule over the tabulated points.
double coupling_from_spectrum(const PhononSpectrum& spectrum);

/// Reads a two-column (ω, α²N) whitespace-separated table. Blank lines and
/// text after '#' are ignored. Throws ParseError with the line number.
PhononSpectrum read_phonon_spectrum(std::istream& in);

}  // namespace bcsent
