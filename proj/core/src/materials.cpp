#include "bcsent/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <locale>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "bcsent/concurrence.hpp"
#include "bcsent/constants.hpp"
#include "bcsent/errors.hpp"
#include "bcsent/format.hpp"

namespace bcsent {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Which physical quantity a key sets, and the factor converting to eV-based storage.
enum class Quantity { dos, debye, gap, tc, lambda };

struct KeyInfo {
  Quantity quantity;
  double scale;
};

const std::map<std::string_view, KeyInfo>& material_keys() {
  static const std::map<std::string_view, KeyInfo> keys{
      {"dos_fermi_per_ev", {Quantity::dos, 1.0}},
      {"dos_fermi_per_ry", {Quantity::dos, 1.0 / constants::rydberg_ev}},
      {"debye_energy_ev", {Quantity::debye, 1.0}},
      {"debye_energy_mev", {Quantity::debye, 1e-3}},
      {"debye_temperature_k", {Quantity::debye, constants::boltzmann_ev_per_k}},
      {"gap_ev", {Quantity::gap, 1.0}},
      {"gap_mev", {Quantity::gap, 1e-3}},
      {"tc_k", {Quantity::tc, 1.0}},
      {"lambda", {Quantity::lambda, 1.0}},
  };
  return keys;
}

struct Block {
  MaterialParams params;
  std::size_t line = 0;
  std::set<Quantity> seen;
  bool has_dos = false;
  bool has_debye = false;
};

void finish_block(Block& block, MaterialsTable& table, std::set<std::string>& names) {
  const auto& p = block.params;
  if (!block.has_dos) throw ParseError("material '" + p.name + "': missing dos_fermi", block.line);
  if (!block.has_debye) throw ParseError("material '" + p.name + "': missing Debye scale", block.line);
  if (!names.insert(p.name).second) throw ParseError("duplicate material name '" + p.name + "'", block.line);
  try {
    p.validate();
  } catch (const Error& e) {
    throw ParseError(e.what(), block.line);
  }
  table.entries.push_back(p);
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

void MaterialsTable::validate() const {
  std::set<std::string> names;
  for (const auto& e : entries) {
    e.validate();
    if (!names.insert(e.name).second) throw InvalidArgument("duplicate material name '" + e.name + "'");
  }
}

MaterialsTable load_materials(std::istream& in) {
  MaterialsTable table;
  bool have_normalization = false;
  std::optional<Block> block;
  std::set<std::string> names;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line_no);

    if (key == "normalization") {
      if (block) throw ParseError("normalization must precede the first material", line_no);
      if (have_normalization) throw ParseError("normalization declared twice", line_no);
      table.normalization = std::string(value);
      have_normalization = true;
      continue;
    }
    if (key == "name") {
      if (block) finish_block(*block, table, names);
      block.emplace();
      block->params.name = std::string(value);
      block->line = line_no;
      continue;
    }
    const auto it = material_keys().find(key);
    if (it == material_keys().end()) throw ParseError("unknown key '" + key + "'", line_no);
    if (!block) throw ParseError("'" + key + "' appears before any 'name'", line_no);
    const auto number = parse_number(value);
    if (!number || !std::isfinite(*number))
      throw ParseError("'" + key + "' needs a finite number, got '" + std::string(value) + "'", line_no);
    const KeyInfo& info = it->second;
    if (!block->seen.insert(info.quantity).second)
      throw ParseError("material '" + block->params.name + "': '" + key + "' repeats an earlier quantity",
                       line_no);
    const double v = *number * info.scale;
    switch (info.quantity) {
      case Quantity::dos:
        block->params.dos_fermi = v;
        block->has_dos = true;
        break;
      case Quantity::debye:
        block->params.debye_energy = v;
        block->has_debye = true;
        break;
      case Quantity::gap: block->params.gap = v; break;
      case Quantity::tc: block->params.tc = v; break;
      case Quantity::lambda: block->params.lambda_ep = v; break;
    }
  }
  if (block) finish_block(*block, table, names);
  if (!have_normalization) throw ParseError("missing 'normalization' declaration", 0);
  return table;
}

MaterialsTable load_materials_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open materials file '" + path.string() + "'");
  try {
    return load_materials(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

void write_materials(std::ostream& out, const MaterialsTable& table) {
  if (table.normalization.find_first_of("#\n") != std::string::npos)
    throw InvalidArgument("normalization text must not contain '#' or a newline");
  out << "normalization = " << table.normalization << '\n';
  for (const auto& e : table.entries) {
    out << '\n' << "name = " << e.name << '\n';
    out << "dos_fermi_per_ev = " << format_number(e.dos_fermi) << '\n';
    out << "debye_energy_ev = " << format_number(e.debye_energy) << '\n';
    if (e.gap) out << "gap_ev = " << format_number(*e.gap) << '\n';
    if (e.tc) out << "tc_k = " << format_number(*e.tc) << '\n';
    if (e.lambda_ep) out << "lambda = " << format_number(*e.lambda_ep) << '\n';
  }
}

MepReport mep_report(const MaterialsTable& table) {
  MepReport report;
  report.normalization = table.normalization;
  for (const auto& entry : table.entries) {
    try {
      const auto numbers = dimensionless_numbers(entry);
      MepReportRow row;
      row.name = entry.name;
      row.n1 = numbers.n1();
      row.n2 = numbers.n2();
      row.mep = mep(numbers);
      row.neg_log10_mep = row.mep > 0.0 ? -std::log10(row.mep) : std::numeric_limits<double>::infinity();
      row.lambda_ep = entry.lambda_ep;
      row.tc = entry.tc;
      report.rows.push_back(std::move(row));
    } catch (const Error& e) {
      report.errors.push_back({entry.name, e.what()});
    }
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const MepReportRow& a, const MepReportRow& b) {
    if (a.mep != b.mep) return a.mep > b.mep;
    return a.name < b.name;
  });
  return report;
}

void write_report_csv(std::ostream& out, const MepReport& report) {
  out << "name,n1,n2,mep,neg_log10_mep,lambda,tc\n";
  for (const auto& r : report.rows) {
    out << r.name << ',' << format_number(r.n1) << ',' << format_number(r.n2) << ','
        << format_number(r.mep) << ',' << format_number(r.neg_log10_mep) << ','
        << optional_cell(r.lambda_ep) << ',' << optional_cell(r.tc) << '\n';
  }
}

void write_report_text(std::ostream& out, const MepReport& report,
                       const std::map<std::string, double>& reference) {
  const bool with_ref = !reference.empty();
  std::size_t name_width = 8;
  for (const auto& r : report.rows) name_width = std::max(name_width, r.name.size() + 2);

  std::ostringstream line;
  auto cell = [&line](const std::string& text, std::size_t width) {
    line << std::setw(static_cast<int>(width)) << std::left << text;
  };
  auto end_line = [&] {
    const std::string text = line.str();
    out << text.substr(0, text.find_last_not_of(' ') + 1) << '\n';
    line.str({});
  };
  out << "# N(eF) normalization: " << report.normalization << '\n';
  cell("name", name_width);
  cell("n1", 15);
  cell("n2", 15);
  cell("MEP", 15);
  cell("-log10(MEP)", 13);
  cell("lambda", 8);
  cell("Tc(K)", 8);
  if (with_ref) cell("ref -log10(MEP)", 16);
  end_line();
  for (const auto& r : report.rows) {
    cell(r.name, name_width);
    cell(format_number(r.n1, 6), 15);
    cell(format_number(r.n2, 6), 15);
    cell(format_number(r.mep, 6), 15);
    std::ostringstream neg;
    neg.imbue(std::locale::classic());
    neg << std::fixed << std::setprecision(3) << r.neg_log10_mep;
    cell(neg.str(), 13);
    cell(optional_cell(r.lambda_ep), 8);
    cell(optional_cell(r.tc), 8);
    if (with_ref) {
      const auto it = reference.find(r.name);
      std::ostringstream ref;
      ref.imbue(std::locale::classic());
      if (it != reference.end()) ref << std::fixed << std::setprecision(3) << it->second;
      cell(ref.str(), 16);
    }
    end_line();
  }
  for (const auto& e : report.errors) out << "# error: " << e.name << ": " << e.message << '\n';
}

std::map<std::string, double> read_reference_values(std::istream& in) {
  std::map<std::string, double> values;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 'name,value'", line_no);
    const std::string name(trim(line.substr(0, comma)));
    const auto value = parse_number(trim(line.substr(comma + 1)));
    if (!value) {
      if (values.empty() && name == "name") continue;  // header
      throw ParseError("expected a number after the comma", line_no);
    }
    values[name] = *value;
  }
  return values;
}

}  // namespace bcsent
