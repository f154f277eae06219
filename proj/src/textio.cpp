#include "triple/textio.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace triple {

Rat parse_rational(const std::string& text) {
  if (text.empty()) fail(Err::ParseError, "empty rational");
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return rat_of(num, den);
  } catch (const std::invalid_argument&) {
    fail(Err::ParseError, "bad rational '" + text + "'");
  }
}

std::vector<Rat> parse_coeff_list(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_rational(tok));
  if (out.empty()) fail(Err::ParseError, "empty coefficient list");
  return out;
}

LPoly make_lpoly(const std::vector<Rat>& coeffs, long offset) { return LPoly(offset, coeffs); }

std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = 0; j <= p.degree(); ++j) {
    if (j > 0) out += ' ';
    out += rat_str(p.coeff(j));
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Err::ParseError, "line " + std::to_string(line) + ": " + what);
}

// key=value and key="quoted value" fields
std::vector<std::pair<std::string, std::string>> split_fields(const std::string& text, int line) {
  std::vector<std::pair<std::string, std::string>> out;
  size_t p = 0;
  while (p < text.size()) {
    while (p < text.size() && isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (p >= text.size()) break;
    size_t eq = text.find('=', p);
    if (eq == std::string::npos) parse_fail(line, "expected key=value near '" + text.substr(p) + "'");
    std::string key = text.substr(p, eq - p);
    p = eq + 1;
    std::string value;
    if (p < text.size() && text[p] == '"') {
      size_t close = text.find('"', p + 1);
      if (close == std::string::npos) parse_fail(line, "unterminated quote");
      value = text.substr(p + 1, close - p - 1);
      p = close + 1;
    } else {
      size_t end = p;
      while (end < text.size() && !isspace(static_cast<unsigned char>(text[end]))) ++end;
      value = text.substr(p, end - p);
      p = end;
    }
    out.push_back({key, value});
  }
  return out;
}

std::string strip_comment(const std::string& raw) {
  size_t hash = raw.find('#');
  std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
  while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

}  // namespace

BmodFile parse_bmod(std::istream& in) {
  BmodFile out;
  std::string raw;
  int lineno = 0;
  bool seen_module = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    size_t start = 0;
    while (start < line.size() && isspace(static_cast<unsigned char>(line[start]))) ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    if (line.rfind("module", 0) == 0) {
      size_t open = line.find('"');
      size_t close = line.rfind('"');
      if (open == std::string::npos || close <= open) parse_fail(lineno, "module line needs a quoted name");
      out.name = line.substr(open + 1, close - open - 1);
      seen_module = true;
      continue;
    }
    if (line.rfind("block", 0) == 0) {
      BlockSpec b;
      bool have_prime = false, have_pairing = false;
      long pairing_offset = 0;
      std::vector<Rat> pairing_coeffs;
      for (const auto& [key, value] : split_fields(line.substr(5), lineno)) {
        if (key == "kind") {
          if (value == "symmetric")
            b.kind = BlockKind::Symmetric;
          else if (value == "hyperbolic")
            b.kind = BlockKind::Hyperbolic;
          else
            parse_fail(lineno, "kind must be symmetric or hyperbolic");
        } else if (key == "prime") {
          try {
            b.prime = Poly(parse_coeff_list(value));
          } catch (const Error& e) {
            parse_fail(lineno, e.what());
          }
          have_prime = true;
        } else if (key == "mult") {
          try {
            b.mult = std::stoi(value);
          } catch (const std::exception&) {
            parse_fail(lineno, "bad mult '" + value + "'");
          }
        } else if (key == "pairing") {
          try {
            pairing_coeffs = parse_coeff_list(value);
          } catch (const Error& e) {
            parse_fail(lineno, e.what());
          }
          have_pairing = true;
        } else if (key == "offset") {
          try {
            pairing_offset = std::stol(value);
          } catch (const std::exception&) {
            parse_fail(lineno, "bad offset '" + value + "'");
          }
        } else {
          parse_fail(lineno, "unknown field '" + key + "'");
        }
      }
      if (!have_prime) parse_fail(lineno, "block line needs prime=\"...\"");
      if (have_pairing) b.pairing = LPoly(pairing_offset, pairing_coeffs);
      out.blocks.push_back(std::move(b));
      continue;
    }
    parse_fail(lineno, "unrecognized line '" + line + "'");
  }
  if (!seen_module) fail(Err::ParseError, "missing module \"<name>\" header");
  return out;
}

BmodFile load_bmod(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
  return parse_bmod(in);
}

SurgFile parse_surg(std::istream& in) {
  SurgFile out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    size_t start = 0;
    while (start < line.size() && isspace(static_cast<unsigned char>(line[start]))) ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    if (line.rfind("leaf", 0) != 0) parse_fail(lineno, "expected 'leaf <1|2|3>: ...'");
    size_t colon = line.find(':');
    if (colon == std::string::npos) parse_fail(lineno, "missing ':' in leaf line");
    int leaf = 0;
    try {
      leaf = std::stoi(line.substr(4, colon - 4));
    } catch (const std::exception&) {
      parse_fail(lineno, "bad leaf number");
    }
    if (leaf < 1 || leaf > 3) parse_fail(lineno, "leaf number must be 1, 2 or 3");
    int gen = -1;
    long offset = 0;
    std::vector<Rat> coeffs;
    for (const auto& [key, value] : split_fields(line.substr(colon + 1), lineno)) {
      if (key == "gen") {
        try {
          gen = std::stoi(value);
        } catch (const std::exception&) {
          parse_fail(lineno, "bad gen index");
        }
      } else if (key == "poly") {
        try {
          coeffs = parse_coeff_list(value);
        } catch (const Error& e) {
          parse_fail(lineno, e.what());
        }
      } else if (key == "offset") {
        try {
          offset = std::stol(value);
        } catch (const std::exception&) {
          parse_fail(lineno, "bad offset");
        }
      } else {
        parse_fail(lineno, "unknown field '" + key + "'");
      }
    }
    if (gen < 1) parse_fail(lineno, "leaf line needs gen=<index> (1-based)");
    if (coeffs.empty()) parse_fail(lineno, "leaf line needs poly=\"...\"");
    out.leaf_terms[static_cast<size_t>(leaf - 1)].push_back({gen - 1, LPoly(offset, coeffs)});
    ++out.lines;
  }
  if (out.lines == 0) fail(Err::ParseError, "surgery file has no leaf lines");
  return out;
}

SurgFile load_surg(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
  return parse_surg(in);
}

SurgeryDatum assemble_surgery(const BlanchfieldModule& m, const SurgFile& f) {
  SurgeryDatum s{{zero_element(m), zero_element(m), zero_element(m)}};
  for (int leaf = 0; leaf < 3; ++leaf) {
    for (const auto& [gen, term] : f.leaf_terms[static_cast<size_t>(leaf)]) {
      if (gen < 0 || gen >= m.count())
        fail(Err::ModuleMismatch, "leaf generator index " + std::to_string(gen + 1) + " out of range");
      ModuleElement add = zero_element(m);
      add.comp[static_cast<size_t>(gen)] = m.reduce_mod_gen(gen, term);
      s.leaves[static_cast<size_t>(leaf)] = element_add(m, s.leaves[static_cast<size_t>(leaf)], add);
    }
  }
  return s;
}

SelftestResult run_selftest_checks(RingCache& rings, const SelftestFault* fault) {
  SelftestResult out;
  const BlanchfieldModule& m = rings.module();
  SpaceCache& spaces = rings.spaces();
  auto push = [&](const std::string& name, bool ok) {
    out.checks.push_back({name, ok});
    out.ok = out.ok && ok;
  };

  bool crit_a = true;
  bool corrupt = fault != nullptr && fault->corrupt_dimension;
  for (const auto& i : spaces.ordered_classes()) {
    long dim = spaces.a_class(i)->dim;
    if (corrupt) dim += 1;  // simulated engine fault
    if (a_nontrivial_criterion(m, i) != (dim > 0)) crit_a = false;
  }
  push("criterion_A_matches_dimension", crit_a);

  bool crit_h = true;
  for (const auto& i : spaces.sorted_classes())
    if (h_nontrivial_criterion(m, i) != (spaces.h_class(i)->dim > 0)) crit_h = false;
  push("criterion_H_matches_dimension", crit_h);

  bool ring_dims = true;
  bool antisym_dims = true;
  bool pmap_rank = true;
  bool spans = true;
  for (const auto& i : spaces.sorted_classes()) {
    long dim_a = spaces.a_class(i)->dim;
    long dim_h = spaces.h_class(i)->dim;
    const TripleRing& ring = rings.ring(i);  // construction cross-checks dim R(i) = dim A(i)
    if (ring.dim() != dim_a) ring_dims = false;
    auto [sym, antisym] = ring.split_sym_antisym();
    if (antisym.dim() != dim_h) antisym_dims = false;
    QMat rows(antisym.dim(), static_cast<int>(dim_h));
    for (int r = 0; r < antisym.dim(); ++r) {
      RingElem v{&ring, QVec(static_cast<size_t>(ring.dim()), Rat(0))};
      for (int c = 0; c < ring.dim(); ++c) v.c[static_cast<size_t>(c)] = antisym.basis.at(r, c);
      QVec coords = ring.p_map(v);
      for (size_t c = 0; c < coords.size(); ++c) rows.at(r, static_cast<int>(c)) = coords[c];
    }
    if (rank(rows) != std::min<long>(antisym.dim(), dim_h) || antisym.dim() != dim_h)
      pmap_rank = false;
    if (!span_Ra_check(rings, i).ok) spans = false;
  }
  push("ring_dimension_matches_A", ring_dims);
  push("antisymmetric_part_matches_H", antisym_dims);
  push("p_map_bijective", pmap_rank);
  push("elementary_variations_span", spans);

  bool quotient = true;
  for (const auto& i : spaces.sorted_classes()) {
    long dim_a = spaces.a_class(i)->dim;
    long dim_h = spaces.h_class(i)->dim;
    if (dim_h > dim_a) quotient = false;
    if (i[0] != i[1] && i[1] != i[2] && dim_h != dim_a) quotient = false;
  }
  push("H_quotient_of_A", quotient);

  bool perm_inv = true;
  for (const auto& i : spaces.sorted_classes()) {
    long ref = spaces.a_class(i)->dim;
    ClassIndex p1{i[1], i[2], i[0]};
    ClassIndex p2{i[2], i[0], i[1]};
    ClassIndex p3{i[1], i[0], i[2]};
    if (spaces.a_class(p1)->dim != ref || spaces.a_class(p2)->dim != ref ||
        spaces.a_class(p3)->dim != ref)
      perm_inv = false;
  }
  push("dim_A_permutation_invariant", perm_inv);

  return out;
}

AnalysisReport analyze(RingCache& rings, const std::string& name, bool with_checks) {
  AnalysisReport r;
  r.module_name = name;
  const BlanchfieldModule& m = rings.module();
  r.delta = m.global_delta();
  SpaceCache& spaces = rings.spaces();
  for (const auto& i : spaces.sorted_classes()) {
    ClassRecord rec;
    rec.index = i;
    rec.dim_a = spaces.a_class(i)->dim;
    rec.dim_h = spaces.h_class(i)->dim;
    rec.criterion_a = a_nontrivial_criterion(m, i);
    rec.criterion_h = h_nontrivial_criterion(m, i);
    for (ComponentPattern p : consistent_patterns(i)) {
      DimBounds b = h_dim_bounds(m, i, p);
      if (b.upper >= 1) rec.bounds.push_back({p, b});  // patterns that can contribute
    }
    r.classes.push_back(std::move(rec));
  }
  r.dim_a_total = spaces.dim_A_total();
  r.dim_a_sorted = spaces.dim_A_sorted_total();
  r.dim_h_total = spaces.dim_H_total();
  if (with_checks) {
    SelftestResult st = run_selftest_checks(rings);
    r.checks = st.checks;
  }
  return r;
}

namespace {

nlohmann::ordered_json index_json(const ClassIndex& i) {
  return nlohmann::ordered_json::array({i[0] + 1, i[1] + 1, i[2] + 1});
}

nlohmann::ordered_json poly_json(const Poly& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (int j = 0; j <= p.degree(); ++j) coeffs.push_back(rat_str(p.coeff(j)));
  return coeffs;
}

}  // namespace

std::string report_json_text(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["module"] = r.module_name;
  j["delta"] = poly_json(r.delta);
  j["dim_A_total"] = r.dim_a_total;
  j["dim_A_sorted_classes"] = r.dim_a_sorted;
  j["dim_H_total"] = r.dim_h_total;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& rec : r.classes) {
    nlohmann::ordered_json c;
    c["index"] = index_json(rec.index);
    c["dim_A"] = rec.dim_a;
    c["dim_H"] = rec.dim_h;
    c["criterion_A"] = rec.criterion_a;
    c["criterion_H"] = rec.criterion_h;
    nlohmann::ordered_json bounds;
    for (const auto& [pattern, b] : rec.bounds)
      bounds[pattern_name(pattern)] = nlohmann::ordered_json::array({b.lower, b.upper});
    c["bounds"] = bounds;
    classes.push_back(c);
  }
  j["classes"] = classes;
  nlohmann::ordered_json degree_one;
  degree_one["dim_H"] = r.dim_h_total;
  degree_one["nu_p_part"] =
      "plus one Q summand per prime integer p, detected by nu_p = v_p(|H_1(M;Z)|), "
      "for rational-homology pairs; for integral-homology pairs the graded space is H alone";
  j["degree_one"] = degree_one;
  if (!r.checks.empty()) {
    nlohmann::ordered_json checks;
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
  }
  return j.dump(2) + "\n";
}

void print_report_table(std::ostream& out, const AnalysisReport& r, bool sorted_view) {
  out << "module " << r.module_name << "\n";
  out << "delta: " << poly_text(r.delta) << "\n";
  out << "class     dim_A  dim_H  crit_A  crit_H  bounds\n";
  for (const auto& rec : r.classes) {
    std::string cls = "(" + std::to_string(rec.index[0] + 1) + "," + std::to_string(rec.index[1] + 1) +
                      "," + std::to_string(rec.index[2] + 1) + ")";
    out << std::left << std::setw(10) << cls << std::setw(7) << rec.dim_a << std::setw(7)
        << rec.dim_h << std::setw(8) << (rec.criterion_a ? "yes" : "no") << std::setw(8)
        << (rec.criterion_h ? "yes" : "no");
    for (const auto& [pattern, b] : rec.bounds)
      out << pattern_name(pattern) << "=[" << b.lower << "," << b.upper << "] ";
    out << "\n";
  }
  if (sorted_view)
    out << "dim_A (sorted classes) = " << r.dim_a_sorted << "  [all ordered: " << r.dim_a_total << "]\n";
  else
    out << "dim_A (all ordered classes) = " << r.dim_a_total << "  [sorted only: " << r.dim_a_sorted
        << "]\n";
  out << "dim_H = " << r.dim_h_total << "\n";
  out << "degree-one space: H of dimension " << r.dim_h_total
      << ", plus one Q summand per prime integer (nu_p) for rational-homology pairs\n";
  for (const auto& [name, ok] : r.checks) out << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
}

namespace {

nlohmann::ordered_json ring_elem_json(const TripleRing& ring, const RingElem& v) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (size_t k = 0; k < v.c.size(); ++k) {
    if (v.c[k] == 0) continue;
    nlohmann::ordered_json term;
    term["coef"] = rat_str(v.c[k]);
    term["t1"] = ring.basis_monomials()[k].first;
    term["t2"] = ring.basis_monomials()[k].second;
    terms.push_back(term);
  }
  return terms;
}

}  // namespace

std::string variation_json_text(RingCache& rings, const PhiFamily& phi, const HVector& h) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& i : rings.spaces().sorted_classes()) {
    const TripleRing& ring = rings.ring(i);
    nlohmann::ordered_json c;
    c["index"] = index_json(i);
    auto it = phi.values.find(i);
    if (it != phi.values.end() && !rings.ring(i).is_zero(it->second))
      c["delta_phi"] = ring_elem_json(ring, it->second);
    else
      c["delta_phi"] = nlohmann::ordered_json::array();
    classes.push_back(c);
  }
  j["classes"] = classes;
  nlohmann::ordered_json hv = nlohmann::ordered_json::array();
  for (const auto& x : h) hv.push_back(rat_str(x));
  j["h_vector"] = hv;
  return j.dump(2) + "\n";
}

void print_variation(std::ostream& out, RingCache& rings, const PhiFamily& phi, const HVector& h) {
  for (const auto& i : rings.spaces().sorted_classes()) {
    auto it = phi.values.find(i);
    if (it == phi.values.end() || rings.ring(i).is_zero(it->second)) continue;
    const TripleRing& ring = rings.ring(i);
    out << "class (" << i[0] + 1 << "," << i[1] + 1 << "," << i[2] + 1 << "): ";
    bool first = true;
    for (size_t k = 0; k < it->second.c.size(); ++k) {
      if (it->second.c[k] == 0) continue;
      if (!first) out << " + ";
      first = false;
      auto [a, b] = ring.basis_monomials()[k];
      out << rat_str(it->second.c[k]) << "*t1^" << a << "*t2^" << b;
    }
    out << "\n";
  }
  out << "h vector: [";
  for (size_t k = 0; k < h.size(); ++k) {
    if (k) out << ", ";
    out << rat_str(h[k]);
  }
  out << "]\n";
}

}  // namespace triple
