#include "bcsent_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "bcsent/concurrence.hpp"
#include "bcsent/errors.hpp"
#include "bcsent/fock_oracle.hpp"
#include "bcsent/format.hpp"
#include "bcsent/gap_solver.hpp"

namespace bcsent::cli {

namespace {

// Fully specified engine + explicit bit-to-double mapping, so reports are
// identical across standard libraries.
class UnitStream {
 public:
  explicit UnitStream(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

// Value at index i of an n-point grid, formed so symmetric ranges give exactly mirrored grids.
double lerp_grid(double lo, double hi, int i, int n) {
  const double k = static_cast<double>(i);
  const double m = static_cast<double>(n - 1);
  return ((m - k) * lo + k * hi) / m;
}

}  // namespace

void CurveSpec::validate() const {
  if (points < 2) throw InvalidArgument("curve: points must be at least 2");
  if (!(eps_min < eps_max)) throw InvalidArgument("curve: eps-min must be below eps-max");
  if (gaps.empty()) throw InvalidArgument("curve: at least one gap value is required");
  for (double g : gaps)
    if (!(g >= 0.0) || !std::isfinite(g)) throw InvalidArgument("curve: gap values must be non-negative");
}

std::vector<CurveSample> sample_curve(const CurveSpec& spec) {
  spec.validate();
  std::vector<CurveSample> out;
  out.reserve(spec.gaps.size() * static_cast<std::size_t>(spec.points));
  for (double gap : spec.gaps) {
    for (int i = 0; i < spec.points; ++i) {
      const double eps = lerp_grid(spec.eps_min, spec.eps_max, i, spec.points);
      out.push_back({eps, gap, partial_concurrence(eps, gap)});
    }
  }
  return out;
}

void write_curve_csv(std::ostream& out, const std::vector<CurveSample>& samples) {
  out << "epsilon_minus_mu,gap,partial_concurrence\n";
  for (const auto& s : samples)
    out << format_number(s.epsilon) << ',' << format_number(s.gap) << ',' << format_number(s.concurrence) << '\n';
}

std::vector<double> AxisSpec::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    if (scale == AxisScale::logarithmic)
      v[i] = i == 0 ? min : i == count - 1 ? max : std::exp(lerp_grid(std::log(min), std::log(max), i, count));
    else
      v[i] = lerp_grid(min, max, i, count);
  }
  return v;
}

void SurfaceSpec::validate() const {
  auto check = [](const AxisSpec& axis, const char* name) {
    if (axis.count < 2) throw InvalidArgument(std::string("surface: ") + name + " count must be at least 2");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max))
      throw InvalidArgument(std::string("surface: ") + name + " range must satisfy min < max");
    if (axis.scale == AxisScale::logarithmic && !(axis.min > 0.0))
      throw InvalidArgument(std::string("surface: ") + name + " logarithmic axis needs positive bounds");
  };
  check(n1, "n1");
  check(n2, "n2");
  if (!(n1.min > 0.0)) throw InvalidArgument("surface: n1 must be positive");
  if (n2.min < 0.0) throw InvalidArgument("surface: n2 must be non-negative");
}

std::vector<SurfaceSample> sample_surface(const SurfaceSpec& spec) {
  spec.validate();
  const auto n1s = spec.n1.values();
  const auto n2s = spec.n2.values();
  std::vector<SurfaceSample> out;
  out.reserve(n1s.size() * n2s.size());
  for (double n1 : n1s)
    for (double n2 : n2s) out.push_back({n1, n2, mep(DimensionlessPair(n1, n2))});
  return out;
}

void write_surface_csv(std::ostream& out, const std::vector<SurfaceSample>& samples) {
  out << "n1,n2,mep\n";
  for (const auto& s : samples)
    out << format_number(s.n1) << ',' << format_number(s.n2) << ',' << format_number(s.mep) << '\n';
}

void print_mep(std::ostream& out, const DimensionlessPair& numbers, const std::optional<std::string>& material,
               const std::optional<std::string>& normalization) {
  const auto c = concurrence_closed_form(numbers);
  const double m = mep(numbers);
  if (material) out << "material = " << *material << '\n';
  if (normalization) out << "normalization = " << *normalization << '\n';
  out << "n1 = " << format_number(numbers.n1()) << '\n'
      << "n2 = " << format_number(numbers.n2()) << '\n'
      << "concurrence = " << format_number(c.value) << '\n'
      << "log_concurrence = " << format_number(c.log_value) << '\n'
      << "mep = " << format_number(m) << '\n'
      << "neg_log10_mep = " << format_number(m > 0.0 ? -std::log10(m) : INFINITY) << '\n';
}

void print_gap(std::ostream& out, double coupling, double debye_energy, const GapSolution& solution) {
  out << "lambda = " << format_number(coupling) << '\n'
      << "debye_energy = " << format_number(debye_energy) << '\n'
      << "gap = " << format_number(solution.gap) << '\n'
      << "iterations = " << solution.iterations << '\n'
      << "residual = " << format_number(solution.residual) << '\n'
      << "underflow = " << (solution.underflow ? "true" : "false") << '\n';
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verification(std::uint64_t seed, std::size_t count) {
  VerifyReport report;
  report.seed = seed;
  if (count == 0) report.warnings.push_back("instance count is 0; no checks were exercised");

  auto record = [](VerifyCheck& check, double error) {
    if (!(error <= check.max_error)) check.max_error = error;  // NaN sticks
    if (!(error <= check.tolerance)) check.passed = false;
    ++check.instances;
  };

  {
    UnitStream rng(seed);
    VerifyCheck check{"quadrature-vs-closed-form", 0, 0.0, 1e-10, true, "|ln C_quad - ln C_closed|, (n1, n2) log-uniform in [1e-3, 1e2]^2"};
    for (std::size_t i = 0; i < count; ++i) {
      const DimensionlessPair p(rng.log_uniform(1e-3, 1e2), rng.log_uniform(1e-3, 1e2));
      try {
        record(check, std::abs(log_concurrence_quadrature(p) - concurrence_closed_form(p).log_value));
      } catch (const ConvergenceError& e) {
        record(check, std::abs(e.best_estimate() - concurrence_closed_form(p).log_value));
      }
    }
    report.checks.push_back(check);
  }
  {
    UnitStream rng(seed ^ 0x9e3779b97f4a7c15ULL);
    VerifyCheck check{"fock-overlap-vs-product", 0, 0.0, 1e-10, true, "||<BCS|BCS~>| - prod|u^2 - v^2||, M in [1, 12]"};
    for (std::size_t i = 0; i < count; ++i) {
      const int modes = rng.integer(1, 12);
      const double gap = rng.uniform(0.0, 1.0);
      std::vector<double> eps(static_cast<std::size_t>(modes));
      for (auto& e : eps) e = rng.uniform(-1.0, 1.0);
      const auto amps = bcs_amplitudes(eps, gap);
      std::vector<double> u, v;
      for (std::size_t k = 0; k < amps.size(); ++k) {
        u.push_back(std::sqrt(amps.u2()[k]));
        v.push_back(std::sqrt(amps.v2()[k]));
      }
      const double ov = overlap(build_bcs_state(u, v), time_reverse(u, v));
      record(check, std::abs(std::abs(ov) - concurrence_discrete(amps).value));
    }
    report.checks.push_back(check);
  }
  {
    UnitStream rng(seed ^ 0xd1b54a32d192ed03ULL);
    VerifyCheck residual{"gap-residual", 0, 0.0, 1e-10, true, "|lambda asinh(w/gap) - 1|, lambda in [0.05, 2]"};
    VerifyCheck closed{"gap-vs-closed-form", 0, 0.0, 1e-8, true, "relative deviation from w / sinh(1/lambda)"};
    for (std::size_t i = 0; i < count; ++i) {
      const double lambda = rng.uniform(0.05, 2.0);
      const double debye = rng.log_uniform(1e-3, 1.0);
      try {
        const auto sol = solve_gap(lambda, debye);
        record(residual, sol.residual);
        const double expected = debye / std::sinh(1.0 / lambda);
        record(closed, std::abs(sol.gap - expected) / expected);
      } catch (const ConvergenceError& e) {
        record(residual, gap_residual(lambda, debye, e.best_estimate()));
        record(closed, INFINITY);
      }
    }
    report.checks.push_back(residual);
    report.checks.push_back(closed);
  }
  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  out << "seed = " << report.seed << '\n';
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  instances=" << c.instances
        << "  max_error=" << format_number(c.max_error, 3) << "  tolerance=" << format_number(c.tolerance, 1)
        << "  (" << c.detail << ")\n";
  }
  out << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
}

}  // namespace bcsent::cli
