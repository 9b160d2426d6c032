#pragma once

// Library side of the `bcsent` command-line tool. Each subcommand's
// computation lives here so it can be tested without spawning a process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bcsent/materials.hpp"
#include "bcsent/model.hpp"

namespace bcsent::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 2,
  exit_data = 3,
  exit_convergence = 4,
  exit_verification = 5,
};

/// Partial-concurrence curves C_k(ε − μ) for several gaps.
struct CurveSpec {
  std::vector<double> gaps{0.0, 0.1, 0.5, 0.9};
  double eps_min = -1.0;
  double eps_max = 1.0;
  int points = 401;

  /// Throws InvalidArgument if points < 2, eps_min >= eps_max or a gap is negative.
  void validate() const;
};

struct CurveSample {
  double epsilon = 0.0;
  double gap = 0.0;
  double concurrence = 0.0;
};

/// Gap-major samples. The energy grid is mirror-symmetric when the range is.
std::vector<CurveSample> sample_curve(const CurveSpec& spec);
void write_curve_csv(std::ostream& out, const std::vector<CurveSample>& samples);

enum class AxisScale { linear, logarithmic };

struct AxisSpec {
  double min = 1e-3;
  double max = 1e1;
  int count = 50;
  AxisScale scale = AxisScale::logarithmic;

  std::vector<double> values() const;
};

/// MEP over an (n1, n2) grid.
struct SurfaceSpec {
  AxisSpec n1;
  AxisSpec n2;

  /// Throws InvalidArgument if a count < 2, min >= max, a logarithmic axis
  /// has a non-positive bound, n1 is not positive or n2 is negative.
  void validate() const;
};

struct SurfaceSample {
  double n1 = 0.0;
  double n2 = 0.0;
  double mep = 0.0;
};

/// n1-major samples.
std::vector<SurfaceSample> sample_surface(const SurfaceSpec& spec);
void write_surface_csv(std::ostream& out, const std::vector<SurfaceSample>& samples);

/// MEP summary for a dimensionless pair, optionally labelled with the material it came from.
void print_mep(std::ostream& out, const DimensionlessPair& numbers,
               const std::optional<std::string>& material = std::nullopt,
               const std::optional<std::string>& normalization = std::nullopt);

void print_gap(std::ostream& out, double coupling, double debye_energy, const GapSolution& solution);

struct VerifyCheck {
  std::string name;
  std::size_t instances = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;
  std::vector<std::string> warnings;

  bool passed() const;
};

/// Cross-checks on `count` random instances per check, deterministic in `seed`:
/// quadrature vs closed form, Fock-space overlap vs discrete product, gap
/// residuals and the closed-form gap.
VerifyReport run_verification(std::uint64_t seed, std::size_t count);
void print_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace bcsent::cli
