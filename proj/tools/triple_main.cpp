#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "triple/factor.hpp"
#include "triple/numberfield.hpp"
#include "triple/textio.hpp"

namespace {

using namespace triple;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Err::ResourceGuard:
      return 3;
    case Err::InternalError:
      return 2;
    default:
      return 1;
  }
}

void write_report(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Err::ParseError, "cannot write report to '" + path + "'");
  out << text;
}

std::array<std::string, 3> split3(const std::string& text, char sep, const std::string& what) {
  std::array<std::string, 3> out;
  size_t p = 0;
  for (int j = 0; j < 3; ++j) {
    size_t q = j < 2 ? text.find(sep, p) : text.size();
    if (q == std::string::npos) fail(Err::ParseError, what + " needs three '" + sep + "'-separated parts");
    out[static_cast<size_t>(j)] = text.substr(p, q - p);
    p = q + 1;
  }
  return out;
}

int run_analyze(const std::string& module_file, const std::string& report_path, long max_dim,
                bool check, const std::string& classes_view) {
  BmodFile file = load_bmod(module_file);
  BlanchfieldModule m = BlanchfieldModule::validate(file.blocks);
  RingCache rings(m, max_dim);
  AnalysisReport report = analyze(rings, file.name, check);
  print_report_table(std::cout, report, classes_view == "sorted");
  if (!report_path.empty()) write_report(report_path, report_json_text(report));
  for (const auto& [name, ok] : report.checks)
    if (!ok) return 2;
  return 0;
}

int run_variation(const std::string& module_file, const std::string& surgery_file,
                  const std::string& report_path, long max_dim) {
  BmodFile file = load_bmod(module_file);
  BlanchfieldModule m = BlanchfieldModule::validate(file.blocks);
  SurgFile surg = load_surg(surgery_file);
  SurgeryDatum datum = assemble_surgery(m, surg);
  RingCache rings(m, max_dim);
  PhiFamily phi = variation(rings, datum);
  HVector h = h_of_phi(rings, phi);
  print_variation(std::cout, rings, phi, h);
  if (!report_path.empty()) write_report(report_path, variation_json_text(rings, phi, h));
  return 0;
}

int run_selftest(const std::string& module_file, long max_dim) {
  BmodFile file = load_bmod(module_file);
  BlanchfieldModule m = BlanchfieldModule::validate(file.blocks);
  RingCache rings(m, max_dim);
  SelftestResult result = run_selftest_checks(rings);
  for (const auto& [name, ok] : result.checks)
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  std::cout << (result.ok ? "all checks passed" : "selftest FAILED") << "\n";
  return result.ok ? 0 : 2;
}

int run_component(const std::string& field_name, const std::string& primes_text,
                  const std::string& roots_text, const std::string& mults_text, long max_dim) {
  NumberField field = preset_field(field_name);
  auto prime_parts = split3(primes_text, ';', "--primes");
  auto root_parts = split3(roots_text, ';', "--roots");
  auto mult_parts = split3(mults_text, ',', "--mults");
  std::array<Poly, 3> primes;
  std::array<KElem, 3> roots;
  std::array<int, 3> mults{};
  for (int j = 0; j < 3; ++j) {
    primes[static_cast<size_t>(j)] = Poly(parse_coeff_list(prime_parts[static_cast<size_t>(j)]));
    std::vector<Rat> coords = parse_coeff_list(root_parts[static_cast<size_t>(j)]);
    coords.resize(static_cast<size_t>(field.degree()), Rat(0));
    roots[static_cast<size_t>(j)] = KElem{coords};
    try {
      mults[static_cast<size_t>(j)] = std::stoi(mult_parts[static_cast<size_t>(j)]);
    } catch (const std::exception&) {
      fail(Err::ParseError, "bad multiplicity '" + mult_parts[static_cast<size_t>(j)] + "'");
    }
  }
  ComponentSpec spec = make_component(field, primes, roots, mults);
  ComponentPattern pattern;
  if (spec.same[0][1] && spec.same[1][2])
    pattern = ComponentPattern::AllEqual;
  else if (spec.same[0][1])
    pattern = ComponentPattern::FirstPair;
  else if (spec.same[1][2])
    pattern = ComponentPattern::LastPair;
  else if (spec.same[0][2])
    fail(Err::ParseError, "equal (prime, root) slots must be adjacent");
  else
    pattern = ComponentPattern::AllDistinct;
  long dim_a = component_dim_A(spec, max_dim);
  long dim_h = component_dim_H(spec, pattern, max_dim);
  std::cout << "pattern: " << pattern_name(pattern) << "\n";
  std::cout << "dim_A(component) = " << dim_a << "\n";
  std::cout << "dim_H(component) = " << dim_h << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact holonomy-quotient and triple-intersection calculator for Blanchfield modules"};
  app.require_subcommand(1);

  std::string module_file, surgery_file, report_path;
  long max_dim = 5000;
  bool check = false;
  std::string classes_view = "sorted";

  auto* analyze_cmd = app.add_subcommand("analyze", "dimensions, criteria and bounds of a module");
  analyze_cmd->add_option("module", module_file, "module spec (.bmod)")->required();
  analyze_cmd->add_option("--report", report_path, "write a JSON report");
  analyze_cmd->add_option("--max-dim", max_dim, "resource guard on ambient dimensions");
  analyze_cmd->add_flag("--check", check, "run the selftest inline");
  analyze_cmd->add_option("--classes", classes_view, "table view: sorted|all")
      ->check(CLI::IsMember({"sorted", "all"}));

  auto* variation_cmd = app.add_subcommand("variation", "variation of phi under a surgery");
  variation_cmd->add_option("module", module_file, "module spec (.bmod)")->required();
  variation_cmd->add_option("surgery", surgery_file, "surgery spec (.surg)")->required();
  variation_cmd->add_option("--report", report_path, "write a JSON report");
  variation_cmd->add_option("--max-dim", max_dim, "resource guard on ambient dimensions");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the cross-theorem checks");
  selftest_cmd->add_option("module", module_file, "module spec (.bmod)")->required();
  selftest_cmd->add_option("--max-dim", max_dim, "resource guard on ambient dimensions");

  std::string field_name = "gauss", primes_text, roots_text, mults_text;
  auto* component_cmd = app.add_subcommand("component", "complex component dimensions over a preset field");
  component_cmd->add_option("--field", field_name, "gauss|eisenstein|zeta8")->required();
  component_cmd->add_option("--primes", primes_text, "three ';'-separated coefficient lists")->required();
  component_cmd->add_option("--roots", roots_text, "three ';'-separated field elements")->required();
  component_cmd->add_option("--mults", mults_text, "three ','-separated multiplicities")->required();
  component_cmd->add_option("--max-dim", max_dim, "resource guard");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze_cmd))
      return run_analyze(module_file, report_path, max_dim, check, classes_view);
    if (app.got_subcommand(variation_cmd))
      return run_variation(module_file, surgery_file, report_path, max_dim);
    if (app.got_subcommand(selftest_cmd)) return run_selftest(module_file, max_dim);
    if (app.got_subcommand(component_cmd))
      return run_component(field_name, primes_text, roots_text, mults_text, max_dim);
  } catch (const triple::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
