// Command-line front end: census enumeration, certified bidegree sets,
// dimension bookkeeping, single certificates, and the reference-table
// verification gate.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 hypothesis violation (a certificate query on an ambient with a P^1
// factor, where the regularity bound does not apply).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cicy/serialization.hpp"

namespace {

using namespace cicy;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::string render_certificate_row(const FinitenessCertificate& cert) {
  std::ostringstream out;
  std::ostringstream d;
  d << "(" << cert.bidegree.d1 << "," << cert.bidegree.d2 << ")";
  out << "  " << d.str() << std::string(d.str().size() < 10 ? 10 - d.str().size() : 1, ' ')
      << to_string(cert.verdict);
  if (!cert.witness.empty()) {
    out << "  splits";
    for (const auto& s : cert.witness) out << " (" << s.u << "," << s.v << ")";
  }
  out << "\n";
  for (const auto& note : cert.notes) out << "            note: " << note << "\n";
  return out.str();
}

int run_enumerate(int max_codim, OutputFormat format, const std::string& output) {
  const Census census = enumerate_census(max_codim);
  switch (format) {
    case OutputFormat::Json: write_output(census_to_json(census).dump(2) + "\n", output); break;
    case OutputFormat::Csv: write_output(census_to_csv(census), output); break;
    case OutputFormat::Text: write_output(census_to_text(census), output); break;
  }
  return 0;
}

int run_zset(const std::string& spec, OutputFormat format, const std::string& output) {
  const ConfigurationMatrix A = parse_matrix_spec(spec);
  std::vector<Bidegree> z;
  try {
    z = z_set(A);
  } catch (const AmbientTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (const auto partner = p1_doubling_partner(A))
      std::cerr << "hint: the same threefolds arise from the doubled configuration "
                << detail::matrix_brief(*partner) << " on P^" << partner->dims().a1 << " x P^"
                << partner->dims().a2 << "; query that configuration instead\n";
    return 3;
  }

  const std::vector<Bidegree> low = {{0, 1}, {1, 0}, {1, 1}};
  std::vector<FinitenessCertificate> certs;
  for (const auto& d : low) certs.push_back(finiteness_certificate(A, d));
  for (const auto& d : z) certs.push_back(finiteness_certificate(A, d));

  if (format == OutputFormat::Json) {
    nlohmann::json j = matrix_to_json(A);
    j["w_min"] = bidegree_to_json({A.dims().a1, A.dims().a2});
    j["z_set"] = bidegree_list_to_json(z);
    nlohmann::json cert_rows = nlohmann::json::array();
    for (const auto& cert : certs) cert_rows.push_back(certificate_to_json(cert));
    j["certificates"] = cert_rows;
    write_output(j.dump(2) + "\n", output);
  } else if (format == OutputFormat::Csv) {
    std::string out = "d1,d2,verdict\n";
    for (const auto& cert : certs)
      out += std::to_string(cert.bidegree.d1) + "," + std::to_string(cert.bidegree.d2) + "," +
             to_string(cert.verdict) + "\n";
    write_output(out, output);
  } else {
    std::ostringstream out;
    out << render_matrix_text(A);
    out << "nondegenerate curves require d1 >= " << A.dims().a1 << ", d2 >= " << A.dims().a2
        << "\n";
    out << "certified finite set Z = { " << bidegree_list_text(z) << " }  [" << z.size()
        << (z.size() == 1 ? " bidegree" : " bidegrees") << "]\n\n";
    for (const auto& cert : certs) out << render_certificate_row(cert);
    write_output(out.str(), output);
  }
  return 0;
}

int run_dims(const std::string& spec, int d1, int d2, std::int64_t h1_sum, OutputFormat format,
             const std::string& output) {
  const ConfigurationMatrix A = parse_matrix_spec(spec);
  const DimensionReport report = fiber_dimension(A, {d1, d2}, h1_sum);
  if (format == OutputFormat::Json) {
    nlohmann::json j = matrix_to_json(A);
    j["bidegree"] = bidegree_to_json({d1, d2});
    j["dimensions"] = dimension_report_to_json(report);
    write_output(j.dump(2) + "\n", output);
  } else {
    write_output(render_matrix_text(A) + dimension_report_text(report), output);
  }
  return 0;
}

int run_certificate(const std::string& spec, int d1, int d2, OutputFormat format,
                    const std::string& output) {
  const ConfigurationMatrix A = parse_matrix_spec(spec);
  if (d1 < 0 || d2 < 0 || (d1 == 0 && d2 == 0))
    throw std::invalid_argument("curve bidegree must be nonnegative and not (0,0)");
  const FinitenessCertificate cert = finiteness_certificate(A, {d1, d2});
  if (format == OutputFormat::Json) {
    nlohmann::json j = matrix_to_json(A);
    j["certificate"] = certificate_to_json(cert);
    write_output(j.dump(2) + "\n", output);
  } else {
    write_output(render_matrix_text(A) + render_certificate_row(cert), output);
  }
  return 0;
}

int run_verify(const std::string& ground_truth_path, OutputFormat format,
               const std::string& output) {
  VerificationReport report = [&] {
    if (ground_truth_path.empty()) return verify_embedded();
    std::ifstream in(ground_truth_path);
    if (!in) throw std::invalid_argument("cannot read ground truth file: " + ground_truth_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed ground truth JSON: ") + e.what());
    }
    return verify_against(ground_truth_from_json(j), false);
  }();
  if (format == OutputFormat::Json)
    write_output(verification_report_to_json(report).dump(2) + "\n", output);
  else
    write_output(verification_report_text(report), output);
  return report.census_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "census and rational-curve finiteness certificates for complete-intersection\n"
      "threefolds in a product of two projective spaces (exact integer arithmetic)"};
  app.require_subcommand(1);

  int max_codim = 5;
  std::string format_name = "text";
  std::string output;
  std::string matrix_spec;
  std::string ground_truth_path;
  int d1 = 0, d2 = 0;
  std::int64_t h1_sum = 0;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--output", output, "write to a file instead of standard output");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the configuration census");
  enumerate->add_option("--max-codim", max_codim, "largest codimension to include")
      ->check(CLI::Range(1, 5))
      ->capture_default_str();
  add_format(enumerate);

  CLI::App* zset = app.add_subcommand(
      "zset", "certified finite bidegree set and certificate table for one configuration");
  zset->add_option("matrix", matrix_spec, "configuration (inline JSON, P^ text, or @file)")
      ->required();
  add_format(zset);

  CLI::App* dims = app.add_subcommand("dims", "dimension bookkeeping for one bidegree");
  dims->add_option("matrix", matrix_spec, "configuration (inline JSON, P^ text, or @file)")
      ->required();
  dims->add_option("d1", d1, "first projection degree")->required();
  dims->add_option("d2", d2, "second projection degree")->required();
  dims->add_option("--h1-sum", h1_sum, "correction term when restrictions have h^1 > 0")
      ->check(CLI::NonNegativeNumber);
  add_format(dims);

  CLI::App* certificate = app.add_subcommand("certificate", "finiteness verdict for one bidegree");
  certificate->add_option("matrix", matrix_spec, "configuration (inline JSON, P^ text, or @file)")
      ->required();
  certificate->add_option("d1", d1, "first projection degree")->required();
  certificate->add_option("d2", d2, "second projection degree")->required();
  add_format(certificate);

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "recompute the census and certified sets, diff against the reference tables");
  verify->add_option("--ground-truth", ground_truth_path,
                     "JSON reference tables (default: the embedded, fingerprinted copy)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat format = *parse_output_format(format_name);
    if (enumerate->parsed()) return run_enumerate(max_codim, format, output);
    if (zset->parsed()) return run_zset(matrix_spec, format, output);
    if (dims->parsed()) return run_dims(matrix_spec, d1, d2, h1_sum, format, output);
    if (certificate->parsed()) return run_certificate(matrix_spec, d1, d2, format, output);
    if (verify->parsed()) return run_verify(ground_truth_path, format, output);
  } catch (const AmbientTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {  // parse failures, precondition violations
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
