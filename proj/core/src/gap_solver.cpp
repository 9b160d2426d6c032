#include "bcsent/gap_solver.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <locale>
#include <numbers>
#include <sstream>
#include <string>

#include "bcsent/errors.hpp"

namespace bcsent {

namespace {

// asinh(e^y), stable for large |y|.
double asinh_exp(double y) {
  if (y > 20.0) return y + std::numbers::ln2 + 0.25 * std::exp(-2.0 * y);
  return std::asinh(std::exp(y));
}

}  // namespace

PhononSpectrum::PhononSpectrum(std::vector<double> frequencies, std::vector<double> alpha2n)
    : frequencies_(std::move(frequencies)), alpha2n_(std::move(alpha2n)) {
  if (frequencies_.size() != alpha2n_.size())
    throw InvalidArgument("phonon spectrum: column lengths differ");
  if (frequencies_.size() < 2) throw InvalidArgument("phonon spectrum: need at least two points");
  for (std::size_t i = 0; i < frequencies_.size(); ++i) {
    if (!(frequencies_[i] > 0.0) || !std::isfinite(frequencies_[i]))
      throw InvalidArgument("phonon spectrum: frequencies must be positive");
    if (i > 0 && !(frequencies_[i] > frequencies_[i - 1]))
      throw InvalidArgument("phonon spectrum: frequencies must be strictly ascending");
    if (!(alpha2n_[i] >= 0.0) || !std::isfinite(alpha2n_[i]))
      throw InvalidArgument("phonon spectrum: alpha2N must be non-negative");
  }
}

double gap_residual(double coupling, double debye_energy, double gap) {
  return std::abs(coupling * std::asinh(debye_energy / gap) - 1.0);
}

GapSolution solve_gap(double coupling, double debye_energy, const GapSolverOptions& options) {
  if (!(coupling > 0.0) || !std::isfinite(coupling))
    throw InvalidArgument("solve_gap: coupling must be positive");
  if (!(debye_energy > 0.0) || !std::isfinite(debye_energy))
    throw InvalidArgument("solve_gap: debye_energy must be positive");
  if (!(options.tol > 0.0)) throw InvalidArgument("solve_gap: tol must be positive");

  // Residual in s = ln(Δ/ħω_D); strictly decreasing from +inf to -1.
  auto residual = [coupling](double s) { return coupling * asinh_exp(-s) - 1.0; };

  const double s_min = std::log(std::numeric_limits<double>::min() / debye_energy);
  double lo = std::log(1e-12);
  double hi = 0.0;
  double r_lo = residual(lo);
  double r_hi = residual(hi);
  for (double step = 1.0; r_hi > 0.0; step *= 2.0) {
    lo = hi;
    r_lo = r_hi;
    hi += step;
    r_hi = residual(hi);
  }
  for (double step = 16.0; r_lo < 0.0;) {
    if (lo <= s_min) {
      GapSolution under;
      under.underflow = true;
      under.residual = std::abs(r_lo);
      return under;
    }
    hi = lo;
    r_hi = r_lo;
    lo = std::max(s_min, lo - step);
    step *= 2.0;
    r_lo = residual(lo);
  }

  auto finish = [&](double s, int iterations) {
    GapSolution sol;
    sol.gap = debye_energy * std::exp(s);
    sol.iterations = iterations;
    sol.residual = gap_residual(coupling, debye_energy, sol.gap);
    return sol;
  };

  if (std::abs(r_lo) <= options.tol) return finish(lo, 0);
  if (std::abs(r_hi) <= options.tol) return finish(hi, 0);

  int side = 0;
  double best = hi;
  for (int it = 1; it <= options.max_iter; ++it) {
    double s = (lo * r_hi - hi * r_lo) / (r_hi - r_lo);
    if (!(s > lo && s < hi) || it % 8 == 0) s = 0.5 * (lo + hi);
    const double r = residual(s);
    best = s;
    if (std::abs(r) <= options.tol) {
      auto sol = finish(s, it);
      // The s-space and direct residuals differ only by rounding.
      if (sol.residual <= options.tol) return sol;
    }
    if (r > 0.0) {
      lo = s;
      r_lo = r;
      if (side == -1) r_hi *= 0.5;
      side = -1;
    } else {
      hi = s;
      r_hi = r;
      if (side == 1) r_lo *= 0.5;
      side = 1;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s))) {
      auto sol = finish(s, it);
      if (sol.residual <= options.tol) return sol;
      break;
    }
  }
  throw ConvergenceError("solve_gap: residual tolerance not reached", debye_energy * std::exp(best));
}

double coupling_from_spectrum(const PhononSpectrum& spectrum) {
  const auto w = spectrum.frequencies();
  const auto a = spectrum.alpha2n();
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    integral += 0.5 * (a[i] / w[i] + a[i + 1] / w[i + 1]) * (w[i + 1] - w[i]);
  return 2.0 * integral;
}

PhononSpectrum read_phonon_spectrum(std::istream& in) {
  std::vector<double> freq, a2n;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    double w = 0.0, a = 0.0;
    if (!(fields >> w)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("expected two numeric columns", line_no);
    }
    if (!(fields >> a)) throw ParseError("expected two numeric columns", line_no);
    std::string extra;
    if (fields >> extra) throw ParseError("unexpected third column '" + extra + "'", line_no);
    if (!(w > 0.0)) throw ParseError("frequency must be positive", line_no);
    freq.push_back(w);
    a2n.push_back(a);
  }
  try {
    return PhononSpectrum(std::move(freq), std::move(a2n));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace bcsent
