#pragma once

// Material parameter files and MEP reports.
//
// File grammar (one `key = value` per line, '#' starts a comment):
//
//   normalization = <free text>      required, before the first material
//   name = <identifier>              starts a material block
//   dos_fermi_per_ev | dos_fermi_per_ry = <number>
//   debye_energy_ev | debye_energy_mev | debye_temperature_k = <number>
//   gap_ev | gap_mev = <number>      optional
//   tc_k = <number>                  optional
//   lambda = <number>                optional
//
// See docs/materials-format.md for the full description.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcsent/model.hpp"

namespace bcsent {

struct MaterialsTable {
  /// Declared N(εF) normalization, recorded verbatim in reports.
  std::string normalization;
  std::vector<MaterialParams> entries;

  /// Throws InvalidArgument on duplicate names or an invalid entry.
  void validate() const;

  friend bool operator==(const MaterialsTable&, const MaterialsTable&) = default;
};

/// Parses and validates a materials document. Throws ParseError with the
/// offending line for syntax errors, unknown or repeated keys, duplicate
/// names and invalid entries.
MaterialsTable load_materials(std::istream& in);
MaterialsTable load_materials_file(const std::filesystem::path& path);

/// Writes the canonical form (eV units, shortest round-trip numbers).
void write_materials(std::ostream& out, const MaterialsTable& table);

struct MepReportRow {
  std::string name;
  double n1 = 0.0;
  double n2 = 0.0;
  double mep = 0.0;
  /// −log10(mep); +infinity when mep = 0.
  double neg_log10_mep = 0.0;
  std::optional<double> lambda_ep;
  std::optional<double> tc;
};

struct MepRowError {
  std::string name;
  std::string message;
};

struct MepReport {
  std::string normalization;
  /// Sorted by mep descending, then name ascending.
  std::vector<MepReportRow> rows;
  std::vector<MepRowError> errors;
};

/// Computes (n1, n2) and MEP per entry. Entries whose gap cannot be resolved
/// are reported in `errors`; the remaining rows are still produced.
MepReport mep_report(const MaterialsTable& table);

/// name,n1,n2,mep,neg_log10_mep,lambda,tc with a header line.
void write_report_csv(std::ostream& out, const MepReport& report);

/// Aligned plain-text table. `reference` maps names to reference
/// −log10(MEP) values shown in an extra column when non-empty.
void write_report_text(std::ostream& out, const MepReport& report,
                       const std::map<std::string, double>& reference = {});

/// Reads `name,neg_log10_mep` rows (header line and '#' comments allowed).
std::map<std::string, double> read_reference_values(std::istream& in);

}  // namespace bcsent
