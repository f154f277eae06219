#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "triple/textio.hpp"

#include <json.hpp>

using namespace triple;

TEST_CASE("rational and coefficient parsing") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-7/2") == rat(-7, 2));
  CHECK(parse_rational("4/8") == rat(1, 2));
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  auto coeffs = parse_coeff_list("1 0 -1/3");
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[2] == rat(-1, 3));
  CHECK_THROWS_AS(parse_coeff_list("  "), Error);
}

TEST_CASE("bmod parsing") {
  std::istringstream in(
      "# a comment\n"
      "module \"example\"\n"
      "block kind=symmetric prime=\"1 0 0 0 1\" mult=1\n"
      "block kind=symmetric prime=\"1 0 1\" mult=1  # trailing comment\n");
  BmodFile f = parse_bmod(in);
  CHECK(f.name == "example");
  REQUIRE(f.blocks.size() == 2);
  CHECK(f.blocks[0].prime.degree() == 4);
  CHECK(f.blocks[0].mult == 1);
  CHECK_FALSE(f.blocks[0].pairing.has_value());
  BlanchfieldModule m = BlanchfieldModule::validate(f.blocks);
  CHECK(m.count() == 2);
}

TEST_CASE("bmod parse errors carry line numbers") {
  std::istringstream bad1("module \"x\"\nblock kind=symmetric mult=2\n");
  CHECK_THROWS_WITH_AS(parse_bmod(bad1), doctest::Contains("line 2"), Error);
  std::istringstream bad2("module \"x\"\nblock kind=weird prime=\"1 1\" mult=2\n");
  CHECK_THROWS_WITH_AS(parse_bmod(bad2), doctest::Contains("line 2"), Error);
  std::istringstream bad3("block kind=symmetric prime=\"1 0 1\" mult=1\n");
  CHECK_THROWS_WITH_AS(parse_bmod(bad3), doctest::Contains("module"), Error);
  std::istringstream bad4("module \"x\"\nblock kind=symmetric prime=\"1 u\" mult=1\n");
  CHECK_THROWS_AS(parse_bmod(bad4), Error);
}

TEST_CASE("bmod pairing field with offset") {
  std::istringstream in(
      "module \"f8\"\n"
      "block kind=symmetric prime=\"1 -3 1\" mult=1 pairing=\"1\" offset=1\n");
  BmodFile f = parse_bmod(in);
  REQUIRE(f.blocks.size() == 1);
  REQUIRE(f.blocks[0].pairing.has_value());
  CHECK(f.blocks[0].pairing->lowest() == 1);
  CHECK(BlanchfieldModule::validate(f.blocks).count() == 1);
}

TEST_CASE("surg parsing and assembly") {
  std::istringstream in(
      "leaf 1: gen=1 poly=\"0 1\"\n"
      "leaf 1: gen=1 poly=\"1\"   # sums with the previous line\n"
      "leaf 2: gen=2 poly=\"1\" offset=-1\n"
      "leaf 3: gen=1 poly=\"1/2\"\n");
  SurgFile f = parse_surg(in);
  CHECK(f.lines == 4);
  BlanchfieldModule m = corpus::example_a();
  SurgeryDatum s = assemble_surgery(m, f);
  CHECK(s.leaves[0].comp[0] == corpus::P({1, 1}));
  // t^{-1} reduced mod t^2+1 is -t
  CHECK(s.leaves[1].comp[1] == corpus::P({0, -1}));
  CHECK(s.leaves[2].comp[0] == Rat(1, 2) * Poly::one());

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_surg(empty), Error);
  std::istringstream badgen("leaf 1: gen=9 poly=\"1\"\n");
  CHECK_THROWS_WITH_AS(assemble_surgery(m, parse_surg(badgen)), doctest::Contains("ModuleMismatch"),
                       Error);
}

TEST_CASE("analysis report and JSON determinism") {
  BlanchfieldModule m = corpus::example_a();
  RingCache rings(m);
  AnalysisReport r = analyze(rings, "example-A", false);
  CHECK(r.dim_a_total == 24);
  CHECK(r.dim_h_total == 2);
  CHECK(r.dim_a_sorted == 8);
  std::string j1 = report_json_text(r);
  RingCache rings2(m);
  std::string j2 = report_json_text(analyze(rings2, "example-A", false));
  CHECK(j1 == j2);
  CHECK(j1.find("\"dim_A_total\": 24") != std::string::npos);
  CHECK(j1.find("\"dim_H_total\": 2") != std::string::npos);
  CHECK(j1.find("\"criterion_H\": true") != std::string::npos);
  // numeric fields round-trip through the printed rationals
  CHECK(j1.find("\"1/4\"") != std::string::npos);
  std::ostringstream table;
  print_report_table(table, r, true);
  CHECK(table.str().find("dim_H = 2") != std::string::npos);
}

TEST_CASE("selftest passes on sound modules and fails on an injected fault") {
  BlanchfieldModule m = corpus::example_a();
  RingCache rings(m);
  SelftestResult ok = run_selftest_checks(rings);
  CHECK(ok.ok);
  for (const auto& [name, pass] : ok.checks) CHECK(pass);
  SelftestFault fault{true};
  RingCache rings2(m);
  SelftestResult broken = run_selftest_checks(rings2, &fault);
  CHECK_FALSE(broken.ok);
}

TEST_CASE("variation JSON") {
  BlanchfieldModule m = corpus::example_a();
  RingCache rings(m);
  PhiFamily phi = variation(rings, elementary_leaves(m, {0, 0, 1}, {0, 1, 0}, Rat(1)));
  HVector h = h_of_phi(rings, phi);
  std::string j = variation_json_text(rings, phi, h);
  CHECK(j.find("\"h_vector\"") != std::string::npos);
  CHECK(j.find("\"delta_phi\"") != std::string::npos);
  std::ostringstream out;
  print_variation(out, rings, phi, h);
  CHECK(out.str().find("class (1,1,2)") != std::string::npos);
}

TEST_CASE("JSON report round-trips all numeric fields") {
  BlanchfieldModule m = corpus::example_b();
  RingCache rings(m);
  AnalysisReport r = analyze(rings, "example-B", false);
  std::string text = report_json_text(r);
  auto j = nlohmann::ordered_json::parse(text);
  CHECK(j["module"] == "example-B");
  CHECK(j["dim_A_total"].get<long>() == r.dim_a_total);
  CHECK(j["dim_A_sorted_classes"].get<long>() == r.dim_a_sorted);
  CHECK(j["dim_H_total"].get<long>() == r.dim_h_total);
  REQUIRE(j["classes"].size() == r.classes.size());
  for (size_t c = 0; c < r.classes.size(); ++c) {
    const auto& jc = j["classes"][c];
    CHECK(jc["dim_A"].get<long>() == r.classes[c].dim_a);
    CHECK(jc["dim_H"].get<long>() == r.classes[c].dim_h);
    CHECK(jc["criterion_A"].get<bool>() == r.classes[c].criterion_a);
    CHECK(jc["criterion_H"].get<bool>() == r.classes[c].criterion_h);
    for (int k = 0; k < 3; ++k)
      CHECK(jc["index"][static_cast<size_t>(k)].get<int>() == r.classes[c].index[static_cast<size_t>(k)] + 1);
  }
  // delta coefficients parse back to the exact rationals
  const Poly& delta = m.global_delta();
  REQUIRE(j["delta"].size() == static_cast<size_t>(delta.degree() + 1));
  for (int k = 0; k <= delta.degree(); ++k)
    CHECK(parse_rational(j["delta"][static_cast<size_t>(k)].get<std::string>()) == delta.coeff(k));
  CHECK(j.contains("degree_one"));
  CHECK(j["degree_one"]["dim_H"].get<long>() == r.dim_h_total);
}

TEST_CASE("trivial module analyzes to zero everywhere") {
  BlanchfieldModule m = BlanchfieldModule::validate({});
  RingCache rings(m);
  AnalysisReport r = analyze(rings, "empty", true);
  CHECK(r.classes.empty());
  CHECK(r.dim_a_total == 0);
  CHECK(r.dim_h_total == 0);
  for (const auto& [name, ok] : r.checks) CHECK(ok);
}
