#ifndef TRIPLE_TEXTIO_HPP
#define TRIPLE_TEXTIO_HPP

#include <iosfwd>
#include <string>

#include "triple/surgery.hpp"

namespace triple {

// Rationals as "p/q" or plain integers.
Rat parse_rational(const std::string& text);
// Ascending space-separated rational coefficients.
std::vector<Rat> parse_coeff_list(const std::string& text);
LPoly make_lpoly(const std::vector<Rat>& coeffs, long offset);
std::string poly_text(const Poly& p);

struct BmodFile {
  std::string name;
  std::vector<BlockSpec> blocks;
};
BmodFile parse_bmod(std::istream& in);
BmodFile load_bmod(const std::string& path);

struct SurgFile {
  std::array<std::vector<std::pair<int, LPoly>>, 3> leaf_terms;  // generator index (0-based), term
  int lines = 0;
};
SurgFile parse_surg(std::istream& in);
SurgFile load_surg(const std::string& path);
SurgeryDatum assemble_surgery(const BlanchfieldModule& m, const SurgFile& f);

struct SelftestFault {
  bool corrupt_dimension = false;  // test fixture: simulate a broken engine
};

struct SelftestResult {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok = true;
};
SelftestResult run_selftest_checks(RingCache& rings, const SelftestFault* fault = nullptr);

struct ClassRecord {
  ClassIndex index{};
  long dim_a = 0;
  long dim_h = 0;
  bool criterion_a = false;
  bool criterion_h = false;
  std::vector<std::pair<ComponentPattern, DimBounds>> bounds;
};

struct AnalysisReport {
  std::string module_name;
  Poly delta;
  std::vector<ClassRecord> classes;  // sorted classes
  long dim_a_total = 0;              // all ordered triples
  long dim_a_sorted = 0;
  long dim_h_total = 0;
  std::vector<std::pair<std::string, bool>> checks;  // populated with --check
};

AnalysisReport analyze(RingCache& rings, const std::string& name, bool with_checks);
std::string report_json_text(const AnalysisReport& r);
void print_report_table(std::ostream& out, const AnalysisReport& r, bool sorted_view);

std::string variation_json_text(RingCache& rings, const PhiFamily& phi, const HVector& h);
void print_variation(std::ostream& out, RingCache& rings, const PhiFamily& phi, const HVector& h);

}  // namespace triple

#endif
