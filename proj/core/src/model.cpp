#include "bcsent/model.hpp"

#include <cmath>

#include "bcsent/constants.hpp"
#include "bcsent/errors.hpp"

namespace bcsent {

namespace {

constexpr double kAmplitudeTol = 1e-12;

std::string label(const MaterialParams& p) {
  return p.name.empty() ? std::string("material '<unnamed>'") : "material '" + p.name + "'";
}

}  // namespace

void MaterialParams::validate() const {
  if (name.empty()) throw InvalidArgument("material name must not be empty");
  if (!std::isfinite(dos_fermi) || dos_fermi <= 0.0)
    throw InvalidArgument(label(*this) + ": dos_fermi must be positive");
  if (!std::isfinite(debye_energy) || debye_energy <= 0.0)
    throw InvalidArgument(label(*this) + ": debye_energy must be positive");
  if (gap) {
    if (!std::isfinite(*gap) || *gap < 0.0 || *gap >= debye_energy)
      throw InvalidArgument(label(*this) + ": gap must satisfy 0 <= gap < debye_energy");
  }
  if (tc && (!std::isfinite(*tc) || *tc < 0.0))
    throw InvalidArgument(label(*this) + ": tc must be non-negative");
  if (lambda_ep && (!std::isfinite(*lambda_ep) || *lambda_ep <= 0.0))
    throw InvalidArgument(label(*this) + ": lambda must be positive");
  if (!gap && !tc && !lambda_ep)
    throw MissingDataError(label(*this) + ": one of gap, tc or lambda is required to derive the gap");
}

DimensionlessPair::DimensionlessPair(double n1, double n2) : n1_(n1), n2_(n2) {
  if (!std::isfinite(n1) || n1 <= 0.0) throw InvalidArgument("cut-off number n1 must be positive");
  if (!std::isfinite(n2) || n2 < 0.0) throw InvalidArgument("gap number n2 must be non-negative");
}

BcsAmplitudes::BcsAmplitudes(std::vector<double> energies, std::vector<double> u2,
                             std::vector<double> v2, std::vector<double> quasiparticle_energies,
                             double gap)
    : energies_(std::move(energies)),
      u2_(std::move(u2)),
      v2_(std::move(v2)),
      quasiparticle_(std::move(quasiparticle_energies)),
      gap_(gap) {
  const std::size_t n = energies_.size();
  if (n == 0) throw InvalidArgument("amplitude grid must not be empty");
  if (u2_.size() != n || v2_.size() != n || quasiparticle_.size() != n)
    throw InvalidArgument("amplitude arrays must have equal length");
  if (!std::isfinite(gap_) || gap_ < 0.0) throw InvalidArgument("gap must be finite and non-negative");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(u2_[i] >= 0.0 && u2_[i] <= 1.0 && v2_[i] >= 0.0 && v2_[i] <= 1.0))
      throw InvalidArgument("u^2 and v^2 must lie in [0, 1] (index " + std::to_string(i) + ")");
    if (std::abs(u2_[i] + v2_[i] - 1.0) > kAmplitudeTol)
      throw InvalidArgument("u^2 + v^2 != 1 at index " + std::to_string(i));
    if (std::abs(quasiparticle_[i] - std::hypot(energies_[i], gap_)) > kAmplitudeTol)
      throw InvalidArgument("E != sqrt(eps^2 + gap^2) at index " + std::to_string(i));
  }
}

BcsAmplitudes bcs_amplitudes(std::span<const double> energies, double gap) {
  if (!std::isfinite(gap) || gap < 0.0) throw InvalidArgument("gap must be finite and non-negative");
  std::vector<double> eps(energies.begin(), energies.end());
  std::vector<double> u2(eps.size()), v2(eps.size()), e(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!std::isfinite(eps[i])) throw InvalidArgument("energies must be finite");
    e[i] = std::hypot(eps[i], gap);
    const double ratio = e[i] > 0.0 ? eps[i] / e[i] : 0.0;
    u2[i] = 0.5 * (1.0 + ratio);
    v2[i] = 0.5 * (1.0 - ratio);
  }
  return BcsAmplitudes(std::move(eps), std::move(u2), std::move(v2), std::move(e), gap);
}

double dos_parabolic(double volume, double mass, double fermi_wavevector, double hbar) {
  if (!(volume > 0.0) || !(mass > 0.0) || !(fermi_wavevector > 0.0) || !(hbar > 0.0))
    throw InvalidArgument("dos_parabolic: all arguments must be positive");
  return volume * mass * fermi_wavevector / (2.0 * constants::pi * constants::pi * hbar * hbar);
}

double resolve_gap(const MaterialParams& params) {
  double gap = 0.0;
  if (params.gap) {
    gap = *params.gap;
  } else if (params.tc) {
    gap = constants::bcs_gap_ratio * constants::boltzmann_ev_per_k * *params.tc;
  } else if (params.lambda_ep) {
    gap = params.debye_energy / std::sinh(1.0 / *params.lambda_ep);
  } else {
    throw MissingDataError(label(params) + ": no gap, tc or lambda to derive the gap from");
  }
  if (!std::isfinite(gap) || gap < 0.0 || gap >= params.debye_energy)
    throw InvalidArgument(label(params) + ": derived gap " + std::to_string(gap) +
                          " eV is outside [0, debye_energy)");
  return gap;
}

DimensionlessPair dimensionless_numbers(const MaterialParams& params) {
  if (!(params.dos_fermi > 0.0)) throw InvalidArgument(label(params) + ": dos_fermi must be positive");
  if (!(params.debye_energy > 0.0))
    throw InvalidArgument(label(params) + ": debye_energy must be positive");
  const double gap = resolve_gap(params);
  return DimensionlessPair(params.dos_fermi * params.debye_energy, params.dos_fermi * gap);
}

}  // namespace bcsent
