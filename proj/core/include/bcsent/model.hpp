#pragma once

// Domain types and the BCS amplitude formulas shared by the rest of the
// library. The math here is unit-agnostic; the materials path uses eV.

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bcsent {

/// Experimental inputs for one superconductor.
///
/// `dos_fermi` is the per-spin density of states at the Fermi level in
/// states per eV per normalization cell; energies are in eV, `tc` in kelvin.
struct MaterialParams {
  std::string name;
  double dos_fermi = 0.0;
  double debye_energy = 0.0;
  std::optional<double> gap;
  std::optional<double> tc;
  std::optional<double> lambda_ep;

  /// Throws InvalidArgument (naming the material) if an invariant fails,
  /// MissingDataError if none of gap / tc / lambda_ep is present.
  void validate() const;

  friend bool operator==(const MaterialParams&, const MaterialParams&) = default;
};

/// Cut-off number n1 = N(εF)·ħω_D and gap number n2 = N(εF)·Δ.
class DimensionlessPair {
 public:
  /// Throws InvalidArgument unless n1 > 0 and n2 >= 0 (both finite).
  DimensionlessPair(double n1, double n2);

  double n1() const noexcept { return n1_; }
  double n2() const noexcept { return n2_; }

  friend bool operator==(const DimensionlessPair&, const DimensionlessPair&) = default;

 private:
  double n1_;
  double n2_;
};

/// Coherence factors u_k², v_k² and quasiparticle energies E_k on an energy
/// grid measured from the chemical potential, for a homogeneous gap.
class BcsAmplitudes {
 public:
  /// Validates equal non-zero lengths, u² + v² = 1, u², v² ∈ [0, 1] and
  /// E = sqrt(ε² + Δ²), all to 1e-12. Throws InvalidArgument otherwise.
  BcsAmplitudes(std::vector<double> energies, std::vector<double> u2,
                std::vector<double> v2, std::vector<double> quasiparticle_energies,
                double gap);

  std::span<const double> energies() const noexcept { return energies_; }
  std::span<const double> u2() const noexcept { return u2_; }
  std::span<const double> v2() const noexcept { return v2_; }
  std::span<const double> quasiparticle_energies() const noexcept { return quasiparticle_; }
  double gap() const noexcept { return gap_; }
  std::size_t size() const noexcept { return energies_.size(); }

 private:
  std::vector<double> energies_;
  std::vector<double> u2_;
  std::vector<double> v2_;
  std::vector<double> quasiparticle_;
  double gap_;
};

/// Converged homogeneous gap with solver diagnostics.
struct GapSolution {
  double gap = 0.0;
  int iterations = 0;
  double residual = 0.0;
  /// Set when the root lies below the smallest representable gap; `gap` is then 0.
  bool underflow = false;
};

/// u² = ½(1 + ε/E), v² = ½(1 − ε/E), E = sqrt(ε² + Δ²).
/// At ε = 0 with Δ = 0 the 0/0 is resolved as u² = v² = ½.
/// Throws InvalidArgument for negative/non-finite gap or non-finite energies.
BcsAmplitudes bcs_amplitudes(std::span<const double> energies, double gap);

/// Density of states L³·m·k_F / (2π²ħ²) of a parabolic band, in units with ħ = 1
/// unless `hbar` is given.
double dos_parabolic(double volume, double mass, double fermi_wavevector, double hbar = 1.0);

/// Δ from the first available of: explicit gap, 1.764·k_B·T_c, or the
/// weak-coupling result ħω_D / sinh(1/λ).
/// Throws MissingDataError if no route exists and InvalidArgument if a
/// derived gap falls outside [0, ħω_D).
double resolve_gap(const MaterialParams& params);

/// (N(εF)·ħω_D, N(εF)·Δ) with Δ from resolve_gap.
DimensionlessPair dimensionless_numbers(const MaterialParams& params);

}  // namespace bcsent
