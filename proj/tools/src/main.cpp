// bcsent: concurrence and entanglement of pairing of the BCS ground state.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bcsent/errors.hpp"
#include "bcsent/gap_solver.hpp"
#include "bcsent/materials.hpp"
#include "bcsent_cli/commands.hpp"

namespace {

using namespace bcsent;
using namespace bcsent::cli;

// Runs `write` against --output if given, else stdout.
template <typename Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + path + "'");
  write(out);
  if (!out) throw Error("failed writing output file '" + path + "'");
}

const std::map<std::string, AxisScale> kScales{{"log", AxisScale::logarithmic}, {"linear", AxisScale::linear}};

void add_axis(CLI::App& cmd, AxisSpec& axis, const std::string& prefix) {
  cmd.add_option("--" + prefix + "-min", axis.min, prefix + " lower bound")->capture_default_str();
  cmd.add_option("--" + prefix + "-max", axis.max, prefix + " upper bound")->capture_default_str();
  cmd.add_option("--" + prefix + "-count", axis.count, prefix + " grid points")->capture_default_str();
  cmd.add_option("--" + prefix + "-scale", axis.scale, prefix + " axis scale")
      ->transform(CLI::CheckedTransformer(kScales, CLI::ignore_case))
      ->default_str("log");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence and macrocanonical entanglement of pairing (MEP) of the BCS state"};
  app.require_subcommand(1);

  std::string output;

  CurveSpec curve;
  auto* curve_cmd = app.add_subcommand("curve", "Partial concurrence C_k versus energy for several gaps (CSV)");
  curve_cmd->add_option("--gaps", curve.gaps, "Gap values")->delimiter(',')->capture_default_str();
  curve_cmd->add_option("--eps-min", curve.eps_min, "Lowest energy relative to mu")->capture_default_str();
  curve_cmd->add_option("--eps-max", curve.eps_max, "Highest energy relative to mu")->capture_default_str();
  curve_cmd->add_option("--points", curve.points, "Samples per curve")->capture_default_str();
  curve_cmd->add_option("--output", output, "Output CSV path (default stdout)");

  SurfaceSpec surface;
  auto* surface_cmd = app.add_subcommand("surface", "MEP over an (n1, n2) grid (CSV)");
  add_axis(*surface_cmd, surface.n1, "n1");
  add_axis(*surface_cmd, surface.n2, "n2");
  surface_cmd->add_option("--output", output, "Output CSV path (default stdout)");

  std::optional<double> n1, n2;
  std::string materials_path, material_name;
  auto* mep_cmd = app.add_subcommand("mep", "MEP from (n1, n2) or from a material entry");
  mep_cmd->add_option("--n1", n1, "Cut-off number N(eF)*hbar*omega_D");
  mep_cmd->add_option("--n2", n2, "Gap number N(eF)*Delta");
  mep_cmd->add_option("--materials", materials_path, "Materials file");
  mep_cmd->add_option("--name", material_name, "Material name in the materials file");

  double coupling = 0.0, debye = 1.0;
  GapSolverOptions gap_opts;
  auto* gap_cmd = app.add_subcommand("gap", "Solve the BCS gap equation for a constant kernel");
  gap_cmd->add_option("--lambda", coupling, "Coupling N(eF)*V0")->required();
  gap_cmd->add_option("--debye-energy", debye, "Debye energy hbar*omega_D")->capture_default_str();
  gap_cmd->add_option("--tol", gap_opts.tol, "Residual tolerance")->capture_default_str();
  gap_cmd->add_option("--max-iter", gap_opts.max_iter, "Iteration budget")->capture_default_str();

  std::string format = "text", reference_path;
  auto* table_cmd = app.add_subcommand("table", "MEP report for every material in a file");
  table_cmd->add_option("materials", materials_path, "Materials file")->required();
  table_cmd->add_option("--format", format, "Standard output format")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();
  table_cmd->add_option("--output", output, "Also write the CSV report to this path");
  table_cmd->add_option("--reference", reference_path, "name,neg_log10_mep reference values to show alongside");

  std::uint64_t seed = 20011;
  std::size_t count = 200;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle cross-checks");
  verify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--count", count, "Instances per check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*curve_cmd) {
      const auto samples = sample_curve(curve);
      emit(output, [&](std::ostream& out) { write_curve_csv(out, samples); });
    } else if (*surface_cmd) {
      const auto samples = sample_surface(surface);
      emit(output, [&](std::ostream& out) { write_surface_csv(out, samples); });
    } else if (*mep_cmd) {
      const bool by_numbers = n1 || n2;
      const bool by_material = !materials_path.empty() || !material_name.empty();
      if (by_numbers == by_material || (by_numbers && !(n1 && n2)) ||
          (by_material && (materials_path.empty() || material_name.empty()))) {
        std::cerr << "mep: give either --n1 and --n2, or --materials and --name\n";
        return exit_usage;
      }
      if (by_numbers) {
        print_mep(std::cout, DimensionlessPair(*n1, *n2));
      } else {
        const auto table = load_materials_file(materials_path);
        const auto it = std::find_if(table.entries.begin(), table.entries.end(),
                                     [&](const MaterialParams& p) { return p.name == material_name; });
        if (it == table.entries.end()) throw MissingDataError("material '" + material_name + "' not found");
        std::optional<DimensionlessPair> numbers;
        try {
          numbers = dimensionless_numbers(*it);
        } catch (const InvalidArgument& e) {
          throw Error(e.what());  // bad data, not bad usage
        }
        print_mep(std::cout, *numbers, it->name, table.normalization);
      }
    } else if (*gap_cmd) {
      print_gap(std::cout, coupling, debye, solve_gap(coupling, debye, gap_opts));
    } else if (*table_cmd) {
      const auto report = mep_report(load_materials_file(materials_path));
      std::map<std::string, double> reference;
      if (!reference_path.empty()) {
        std::ifstream in(reference_path);
        if (!in) throw Error("cannot open reference file '" + reference_path + "'");
        reference = read_reference_values(in);
      }
      if (format == "csv")
        write_report_csv(std::cout, report);
      else
        write_report_text(std::cout, report, reference);
      if (!output.empty()) emit(output, [&](std::ostream& out) { write_report_csv(out, report); });
      for (const auto& e : report.errors) std::cerr << "error: " << e.name << ": " << e.message << '\n';
      return report.errors.empty() ? exit_ok : exit_data;
    } else if (*verify_cmd) {
      const auto report = run_verification(seed, count);
      print_verify_report(std::cout, report);
      return report.passed() ? exit_ok : exit_verification;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
    return exit_convergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  }
  return exit_ok;
}
