#pragma once

// Renderings of the library types (JSON, CSV, plain text) and the inverse
// parsers used by the command-line tool.  JSON objects are key-sorted by the
// underlying library, so rendering is deterministic byte for byte; the text
// layout round-trips through parse_matrix_text.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cicy/census.hpp"
#include "cicy/configuration.hpp"
#include "cicy/finiteness.hpp"
#include "cicy/ground_truth.hpp"
#include "cicy/verification.hpp"

namespace cicy {

enum class OutputFormat { Json, Csv, Text };

inline std::optional<OutputFormat> parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  return std::nullopt;
}

// --- JSON ------------------------------------------------------------------

inline nlohmann::json bidegree_to_json(Bidegree d) { return nlohmann::json::array({d.d1, d.d2}); }

inline Bidegree bidegree_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("bidegree must be a two-element integer array");
  return {j[0].get<int>(), j[1].get<int>()};
}

inline nlohmann::json bidegree_list_to_json(const std::vector<Bidegree>& z) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : z) out.push_back(bidegree_to_json(d));
  return out;
}

inline std::vector<Bidegree> bidegree_list_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("bidegree list must be an array");
  std::vector<Bidegree> out;
  for (const auto& item : j) out.push_back(bidegree_from_json(item));
  return out;
}

inline nlohmann::json matrix_to_json(const ConfigurationMatrix& A) {
  return {{"dims", {A.dims().a1, A.dims().a2}}, {"matrix", {A.row(0), A.row(1)}}};
}

inline ConfigurationMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
    throw std::invalid_argument("matrix object needs \"dims\" and \"matrix\" fields");
  const auto& dims = j["dims"];
  const auto& rows = j["matrix"];
  if (!dims.is_array() || dims.size() != 2 || !rows.is_array() || rows.size() != 2)
    throw std::invalid_argument("\"dims\" must hold two integers and \"matrix\" two rows");
  try {
    return ConfigurationMatrix({dims[0].get<int>(), dims[1].get<int>()},
                               rows[0].get<std::vector<int>>(), rows[1].get<std::vector<int>>());
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("matrix rows must be integer arrays");
  }
}

inline nlohmann::json census_entry_to_json(const CensusEntry& e) {
  nlohmann::json j = matrix_to_json(e.matrix);
  j["codim"] = e.codim;
  j["has_p1_factor"] = e.has_p1_factor;
  j["duplicate_class"] = e.duplicate_class ? nlohmann::json(*e.duplicate_class) : nlohmann::json();
  j["z_set"] = e.z_set ? bidegree_list_to_json(*e.z_set) : nlohmann::json();
  return j;
}

inline CensusEntry census_entry_from_json(const nlohmann::json& j) {
  CensusEntry e{matrix_from_json(j), j.at("codim").get<int>(), j.at("has_p1_factor").get<bool>(),
                std::nullopt, std::nullopt};
  if (j.contains("duplicate_class") && !j["duplicate_class"].is_null())
    e.duplicate_class = j["duplicate_class"].get<std::string>();
  if (j.contains("z_set") && !j["z_set"].is_null()) e.z_set = bidegree_list_from_json(j["z_set"]);
  return e;
}

inline nlohmann::json census_to_json(const Census& census) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& entry : census.entries) out.push_back(census_entry_to_json(entry));
  return out;
}

inline Census census_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("census must be an array of entries");
  Census census;
  for (const auto& item : j) census.entries.push_back(census_entry_from_json(item));
  for (const auto& entry : census.entries) ++census.counts_by_codim[entry.codim];
  return census;
}

inline nlohmann::json certificate_to_json(const FinitenessCertificate& cert) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& split : cert.witness) witness.push_back({split.u, split.v});
  return {{"bidegree", bidegree_to_json(cert.bidegree)},
          {"verdict", to_string(cert.verdict)},
          {"witness", witness},
          {"notes", cert.notes}};
}

inline nlohmann::json dimension_report_to_json(const DimensionReport& r) {
  return {{"dim_moduli", r.dim_moduli},
          {"dim_family", r.dim_family},
          {"fiber_dim", r.fiber_dim},
          {"dim_incidence", r.dim_incidence},
          {"h1_sum", r.h1_sum}};
}

inline nlohmann::json ground_truth_to_json(const PaperGroundTruth& gt) {
  nlohmann::json census_table = nlohmann::json::array();
  for (const auto& row : gt.census_table) {
    nlohmann::json j = matrix_to_json(row.matrix);
    j["duplicate_class"] = row.duplicate_class ? nlohmann::json(*row.duplicate_class) : nlohmann::json();
    census_table.push_back(std::move(j));
  }
  const auto z_row_json = [](const ReferenceZRow& row) {
    nlohmann::json j = matrix_to_json(row.matrix);
    j["z_set"] = bidegree_list_to_json(row.z);
    return j;
  };
  nlohmann::json z_table = nlohmann::json::array();
  for (const auto& row : gt.finite_bidegree_table) z_table.push_back(z_row_json(row));
  nlohmann::json by_codim = nlohmann::json::object();
  for (const auto& [m, n] : gt.counts.by_codim) by_codim[std::to_string(m)] = n;
  return {{"census_table", census_table},
          {"finite_bidegree_table", z_table},
          {"hypersurface_rule", z_row_json(gt.hypersurface_rule)},
          {"counts",
           {{"total", gt.counts.total},
            {"by_codim", by_codim},
            {"with_p1_factor", gt.counts.with_p1_factor},
            {"with_both_factors_ge2", gt.counts.with_both_factors_ge2},
            {"multi_z_rows", gt.counts.multi_z_rows},
            {"singleton_z", gt.counts.singleton_z},
            {"duplicate_pairs", gt.counts.duplicate_pairs}}}};
}

/// Inverse of ground_truth_to_json.  Loaded tables are compared literally —
/// no canonicalization or sorting — so perturbed fixtures stay perturbed.
inline PaperGroundTruth ground_truth_from_json(const nlohmann::json& j) {
  std::vector<ReferenceConfig> census_table;
  for (const auto& item : j.at("census_table")) {
    ReferenceConfig row{matrix_from_json(item), std::nullopt};
    if (item.contains("duplicate_class") && !item["duplicate_class"].is_null())
      row.duplicate_class = item["duplicate_class"].get<std::string>();
    census_table.push_back(std::move(row));
  }
  const auto z_row_from = [](const nlohmann::json& item) {
    return ReferenceZRow{matrix_from_json(item), bidegree_list_from_json(item.at("z_set"))};
  };
  std::vector<ReferenceZRow> z_table;
  for (const auto& item : j.at("finite_bidegree_table")) z_table.push_back(z_row_from(item));
  const auto& counts = j.at("counts");
  ReferenceCounts parsed_counts;
  parsed_counts.total = counts.at("total").get<int>();
  for (const auto& [key, value] : counts.at("by_codim").items())
    parsed_counts.by_codim[std::stoi(key)] = value.get<int>();
  parsed_counts.with_p1_factor = counts.at("with_p1_factor").get<int>();
  parsed_counts.with_both_factors_ge2 = counts.at("with_both_factors_ge2").get<int>();
  parsed_counts.multi_z_rows = counts.at("multi_z_rows").get<int>();
  parsed_counts.singleton_z = counts.at("singleton_z").get<int>();
  parsed_counts.duplicate_pairs = counts.at("duplicate_pairs").get<int>();
  return PaperGroundTruth{std::move(census_table), std::move(z_table),
                          z_row_from(j.at("hypersurface_rule")), std::move(parsed_counts)};
}

inline nlohmann::json verification_report_to_json(const VerificationReport& r) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& mm : r.zset_mismatches) {
    nlohmann::json j = matrix_to_json(mm.matrix);
    j["expected"] = bidegree_list_to_json(mm.expected);
    j["computed"] = bidegree_list_to_json(mm.computed);
    mismatches.push_back(std::move(j));
  }
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& check : r.summary_counts)
    counts.push_back(
        {{"name", check.name}, {"expected", check.expected}, {"computed", check.computed}});
  nlohmann::json j{{"census_match", r.census_match},
                   {"per_codim_diffs", r.per_codim_diffs},
                   {"zset_mismatches", mismatches},
                   {"duplicate_pair_diffs", r.duplicate_pair_diffs},
                   {"summary_counts", counts}};
  if (r.fingerprint_checked) {
    j["fingerprint"] = r.fingerprint;
    j["fingerprint_ok"] = r.fingerprint_ok;
  }
  return j;
}

// --- text ------------------------------------------------------------------

inline std::string bidegree_list_text(const std::vector<Bidegree>& z) {
  std::string out;
  for (const auto& d : z) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(d.d1) + "," + std::to_string(d.d2) + ")";
  }
  return out;
}

/// Two-line bracket layout:
///   * ( P^1 | 2 0 )  (II)
///     ( P^4 | 1 4 )
/// The star flags a P^1 factor, the parenthesized numeral is the duplicate
/// class; both are optional and both survive parse_matrix_text.
inline std::string render_matrix_text(const ConfigurationMatrix& A, bool star = false,
                                      const std::optional<std::string>& label = std::nullopt) {
  std::ostringstream out;
  for (int i = 0; i < 2; ++i) {
    out << (i == 0 && star ? "* " : "  ");
    out << "( P^" << (i == 0 ? A.dims().a1 : A.dims().a2) << " |";
    for (int j = 0; j < A.cols(); ++j) out << " " << A.entry(i, j);
    out << " )";
    if (i == 0 && label) out << "  (" << *label << ")";
    out << "\n";
  }
  return out.str();
}

inline ConfigurationMatrix parse_matrix_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.find("P^") != std::string::npos) lines.push_back(line);
  if (lines.size() != 2)
    throw std::invalid_argument("matrix text must contain exactly two P^ rows");

  int dims[2];
  std::vector<int> rows[2];
  for (int i = 0; i < 2; ++i) {
    const std::string& line = lines[static_cast<std::size_t>(i)];
    const auto caret = line.find("P^");
    const auto bar = line.find('|', caret);
    const auto close = line.find(')', bar);
    if (bar == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("matrix row must look like \"( P^n | b1 .. bm )\"");
    dims[i] = std::stoi(line.substr(caret + 2));
    std::istringstream entries(line.substr(bar + 1, close - bar - 1));
    for (int value; entries >> value;) rows[i].push_back(value);
  }
  return ConfigurationMatrix({dims[0], dims[1]}, std::move(rows[0]), std::move(rows[1]));
}

/// Matrix argument accepted by the command-line tool: inline JSON, the
/// two-line text layout, or @path to a file holding either.
inline ConfigurationMatrix parse_matrix_spec(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty matrix argument");
  if (spec[first] == '@') {
    const std::string path = spec.substr(first + 1);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read matrix file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_spec(buffer.str());
  }
  if (spec[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  if (spec.find("P^") != std::string::npos) return parse_matrix_text(spec);
  throw std::invalid_argument("matrix argument must be JSON, a P^ text block, or @file");
}

inline std::string census_to_text(const Census& census) {
  std::ostringstream out;
  int current_codim = 0;
  for (const auto& entry : census.entries) {
    if (entry.codim != current_codim) {
      current_codim = entry.codim;
      const auto it = census.counts_by_codim.find(current_codim);
      out << "Codimension " << current_codim << " (" << (it != census.counts_by_codim.end() ? it->second : 0)
          << " configurations)\n\n";
    }
    out << render_matrix_text(entry.matrix, entry.has_p1_factor, entry.duplicate_class);
    if (entry.z_set) out << "    Z = { " << bidegree_list_text(*entry.z_set) << " }\n";
    out << "\n";
  }
  out << "total: " << census.size() << "\n";
  return out.str();
}

inline std::string matrix_csv_field(const ConfigurationMatrix& A) {
  std::string field;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < A.cols(); ++j) {
      field += std::to_string(A.entry(i, j));
      if (j + 1 < A.cols()) field += " ";
    }
    if (i == 0) field += ";";
  }
  return field;
}

inline std::string census_to_csv(const Census& census) {
  std::string out = "a1,a2,matrix,codim,has_p1_factor,duplicate_class\n";
  for (const auto& entry : census.entries) {
    out += std::to_string(entry.matrix.dims().a1) + "," + std::to_string(entry.matrix.dims().a2) +
           "," + matrix_csv_field(entry.matrix) + "," + std::to_string(entry.codim) + "," +
           (entry.has_p1_factor ? "true" : "false") + "," + entry.duplicate_class.value_or("") + "\n";
  }
  return out;
}

/// One CSV row per configuration with a certified bidegree set.
inline std::string z_table_csv(const Census& census) {
  std::string out = "m,a1,a2,matrix,z_set\n";
  for (const auto& entry : census.entries) {
    if (!entry.z_set) continue;
    out += std::to_string(entry.codim) + "," + std::to_string(entry.matrix.dims().a1) + "," +
           std::to_string(entry.matrix.dims().a2) + "," + matrix_csv_field(entry.matrix) + ",\"" +
           bidegree_list_text(*entry.z_set) + "\"\n";
  }
  return out;
}

inline std::string dimension_report_text(const DimensionReport& r) {
  std::ostringstream out;
  out << "curve moduli dimension:     " << r.dim_moduli << "\n"
      << "intersection family:        " << r.dim_family << "\n"
      << "fiber over a fixed curve:   " << r.fiber_dim << "  (h1 correction " << r.h1_sum << ")\n"
      << "incidence variety:          " << r.dim_incidence << "\n";
  return out.str();
}

inline std::string verification_report_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& line : r.per_codim_diffs) out << "census mismatch: " << line << "\n";
  for (const auto& line : r.duplicate_pair_diffs) out << "duplicate-class mismatch: " << line << "\n";
  for (const auto& mm : r.zset_mismatches)
    out << "z-set mismatch at " << detail::entry_brief(mm.matrix) << ": listed {"
        << bidegree_list_text(mm.expected) << "}, computed {" << bidegree_list_text(mm.computed)
        << "}\n";
  for (const auto& check : r.summary_counts)
    out << "count " << check.name << ": listed " << check.expected << ", computed " << check.computed
        << (check.ok() ? "" : "  << MISMATCH") << "\n";
  if (r.fingerprint_checked)
    out << "table fingerprint: " << (r.fingerprint_ok ? "ok" : "MISMATCH") << "\n";
  out << "verification: " << (r.census_match ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace cicy
