#include "knotforms/report.hpp"

#include <algorithm>

#include "knotforms/quadratic.hpp"

namespace knotforms {

Report integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Report(z.get_si());
  return Report(z.get_str());
}

Report matrix_json(const IntMatrix& m) {
  Report rows = Report::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Report row = Report::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Report matrix_json(const RatMatrix& m) {
  Report rows = Report::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Report row = Report::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(is_integral(m(i, j)) ? integer_json(m(i, j).get_num()) : Report(m(i, j).get_str()));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// ---- text rendering ------------------------------------------------------

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_matrix(const Report& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Report& r) { return r.is_array(); });
}

bool is_table(const Report& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Report& r) { return r.is_object(); });
}

std::vector<std::string> matrix_lines(const Report& m) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& x : row) width = std::max(width, scalar_text(x).size());
  std::vector<std::string> lines;
  for (const auto& row : m) {
    std::string line = "[";
    bool first = true;
    for (const auto& x : row) {
      std::string s = scalar_text(x);
      line += (first ? "" : " ") + std::string(width - s.size(), ' ') + s;
      first = false;
    }
    lines.push_back(line + "]");
  }
  return lines;
}

std::vector<std::string> table_lines(const Report& t) {
  std::vector<std::string> columns;
  for (const auto& [k, v] : t.front().items()) columns.push_back(k);
  std::vector<std::vector<std::string>> cells{columns};
  for (const auto& row : t) {
    std::vector<std::string> r;
    for (const auto& c : columns) r.push_back(row.contains(c) ? scalar_text(row[c]) : "-");
    cells.push_back(std::move(r));
  }
  std::vector<std::size_t> width(columns.size(), 0);
  for (const auto& r : cells)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::vector<std::string> lines;
  for (const auto& r : cells) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    lines.push_back(line);
  }
  return lines;
}

void render_object(const Report& obj, std::size_t indent, std::string& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : obj.items()) {
    const std::string label = pad + std::string(width - k.size(), ' ') + k + ":";
    if (v.is_object()) {
      out += label + "\n";
      render_object(v, indent + 2, out);
    } else if (is_table(v)) {
      out += label + "\n";
      for (const auto& line : table_lines(v)) out += pad + "  " + line + "\n";
    } else if (is_matrix(v)) {
      auto lines = matrix_lines(v);
      const std::string hang(label.size() + 1, ' ');
      for (std::size_t i = 0; i < lines.size(); ++i) out += (i == 0 ? label + " " : hang) + lines[i] + "\n";
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& x : v) joined += (joined.empty() ? "" : ", ") + scalar_text(x);
      out += label + " " + (v.empty() ? "(none)" : joined) + "\n";
    } else {
      out += label + " " + scalar_text(v) + "\n";
    }
  }
}

std::string poly_text(const LaurentPolynomial& p) { return to_string(p); }

Report bp_json(const BpClass& bp) {
  Report r = Report::object();
  r["sphere_dimension"] = bp.sphere_dimension;
  r["group"] = to_string(bp.group);
  if (bp.signature) r["signature"] = *bp.signature;
  if (bp.class_value) r["class"] = integer_json(*bp.class_value);
  if (bp.residue) r["residue"] = integer_json(*bp.residue);
  if (bp.stabilized) r["stabilized"] = true;
  r["exotic"] = bp.exotic;
  r["verdict"] = bp.verdict;
  if (bp.caution) r["caution"] = *bp.caution;
  return r;
}

Report divisors_json(const std::vector<RatLaurent>& ds) {
  Report r = Report::array();
  for (const auto& d : ds) r.push_back(d.is_zero() ? std::string("0") : to_string(d));
  return r;
}

}  // namespace

std::string render(const Report& r, Format f) {
  if (f == Format::machine) return r.dump(2) + "\n";
  std::string out;
  if (r.is_object()) {
    render_object(r, 0, out);
  } else if (is_table(r)) {
    for (const auto& line : table_lines(r)) out += line + "\n";
  } else {
    out = scalar_text(r) + "\n";
  }
  return out;
}

Report invariants_report(const MatrixFile& f) {
  Report r = Report::object();
  r["q"] = f.q;
  r["rank"] = f.matrix.rows();
  if (f.matrix.rows() == 0) {
    r["unknot"] = "all invariants trivial";
    return r;
  }
  SeifertMatrix s(f.matrix, f.q);
  r["seifert_matrix"] = matrix_json(s.matrix());
  IntMatrix form = intersection_form(s);
  Integer det_i = det(form);
  const bool unimodular = det_i == 1 || det_i == -1;
  r["intersection_form"] = matrix_json(form);
  r["intersection_det"] = integer_json(det_i);
  r["unimodular"] = unimodular;
  r["type_k"] = is_type_K(s);
  const bool fibered = is_fibered_form(s);
  r["fibered"] = fibered;
  if (fibered) {
    RatMatrix h = monodromy(s);
    r["monodromy"] = matrix_json(h);
    QuasiUnipotence qu = quasi_unipotence(h);
    r["characteristic_polynomial"] = to_string(qu.characteristic_polynomial);
    r["quasi_unipotent"] = qu.holds;
  } else {
    r["monodromy"] = "undefined: Seifert matrix is singular";
  }
  LaurentPolynomial raw = alexander_polynomial(s, Normalization::raw);
  r["alexander_raw"] = poly_text(raw);
  try {
    r["alexander_conway"] = poly_text(conway_normalize(raw));
  } catch (const NormalizationError& e) {
    r["alexander_conway"] = std::string("undefined: ") + e.what();
  }
  KnotModulePresentation km = knot_module(s);
  r["elementary_divisors"] = divisors_json(km.divisors);
  if (s.q() % 2 == 0) {
    r["signature"] = signature(form);
    r["even"] = is_even(form);
  } else {
    try {
      r["karl"] = karl(s);
    } catch (const DegenerateFormError& e) {
      r["karl"] = std::string("undefined: ") + e.what();
    }
    if (unimodular) {
      LevineCheck lc = levine_congruence_check(s);
      Report l = Report::object();
      l["holds"] = lc.holds;
      l["delta_at_minus_one"] = integer_json(lc.delta_at_minus_one);
      l["expected_mod_8"] = 1 + 4 * lc.karl;
      r["levine_congruence"] = l;
    }
  }
  if (unimodular) {
    r["bp_class"] = bp_json(bp_class(s));
  } else {
    r["bp_class"] = "undefined: boundary is not a homotopy sphere";
  }
  return r;
}

Report germ_document(const GermReport& g) {
  Report r = Report::object();
  r["germ"] = to_string(g.germ);
  r["q"] = g.seifert.q();
  r["milnor_number"] = integer_json(g.germ.milnor_number());
  r["seifert_matrix"] = matrix_json(g.seifert.matrix());
  r["fibered"] = g.fibered;
  if (g.fibered) {
    r["monodromy"] = matrix_json(g.monodromy);
    r["characteristic_polynomial"] = to_string(g.quasi_unipotence.characteristic_polynomial);
    r["quasi_unipotent"] = g.quasi_unipotence.holds;
    Report orders = Report::array();
    for (long n : g.quasi_unipotence.cyclotomic_orders) orders.push_back(n);
    r["cyclotomic_orders"] = orders;
  }
  r["intersection_form"] = matrix_json(g.intersection_form);
  r["intersection_det"] = integer_json(g.intersection_det);
  r["unimodular"] = g.unimodular;
  r["alexander_raw"] = poly_text(g.alexander_raw);
  if (g.alexander_conway) r["alexander_conway"] = poly_text(*g.alexander_conway);
  if (g.signature) r["signature"] = *g.signature;
  if (g.karl) r["karl"] = *g.karl;
  if (g.bp) r["bp_class"] = bp_json(*g.bp);
  Report anomalies = Report::array();
  for (const auto& a : g.anomalies) anomalies.push_back(a);
  r["anomalies"] = anomalies;
  return r;
}

Report cobordance_document(const CobordanceVerdict& v, int bound) {
  Report r = Report::object();
  r["verdict"] = to_string(v.kind);
  Report checks = Report::object();
  for (const auto& c : v.obstructions.checks)
    checks[c.name] = std::string(!c.applicable ? "n/a" : c.passed ? "pass" : "fail") + " (" + c.certificate + ")";
  r["obstructions"] = checks;
  if (const ObstructionCheck* failure = v.obstructions.first_failure())
    r["obstruction"] = failure->name + " fails: " + failure->certificate;
  if (v.kind != Cobordance::not_cobordant) {
    Report search = Report::object();
    search["bound"] = bound;
    search["candidates_examined"] = v.search.candidates;
    r["search"] = search;
  }
  if (v.witness) {
    Report w = Report::array();
    for (const auto& vec : v.witness->basis) {
      Report row = Report::array();
      for (const auto& x : vec) row.push_back(integer_json(x));
      w.push_back(std::move(row));
    }
    r["witness"] = w;
  }
  return r;
}

Report groups_document(int from, int to, const std::vector<ExceptionalDimension>& table) {
  Report rows = Report::array();
  for (int n = from; n <= to; ++n) {
    Report row = Report::object();
    row["n"] = n;
    GroupVerdict g = embeddable_spheres_group(n, table);
    std::string group = to_string(g);
    std::string provenance;
    if (n % 2 == 0) {
      group += " (even n)";
      provenance = "even dimension";
    } else if (n <= 4) {
      group += " (n <= 4)";
      provenance = "low dimension";
    } else if (n % 4 == 3) {
      provenance = "2^(2k-2) (2^(2k-1) - 1) num(4 B_k / k), k = " + std::to_string((n + 1) / 4);
    } else {
      if (g.kind == GroupVerdict::Kind::trivial) group += " (exceptional)";
      provenance = g.description;
    }
    row["G^n"] = group;
    row["|bP^(n+1)|"] = (n % 4 == 3 && n >= 7) ? integer_json(bp4k_order((n + 1) / 4)) : Report("-");
    row["|Im J|"] = (n % 4 == 3) ? integer_json(im_j_order((n + 1) / 4)) : Report("-");
    row["source"] = provenance;
    rows.push_back(std::move(row));
  }
  return rows;
}

Report handles_document(const MatrixFile& f) {
  SeifertMatrix s(f.matrix, f.q);
  HandlePresentation h = handle_data(s);
  Report r = Report::object();
  r["q"] = h.q;
  r["rank"] = h.rank;
  Report links = Report::array();
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = i + 1; j < h.rank; ++j)
      links.push_back("L(K" + std::to_string(i + 1) + ",K" + std::to_string(j + 1) + ") = " + to_string(h.linking(i, j)));
  r["linking_numbers"] = links;
  r["framing_group"] = to_string(h.framing_domain);
  Report fr = Report::array();
  for (const auto& q : h.framings) fr.push_back(integer_json(q));
  r["framings"] = fr;
  return r;
}

}  // namespace knotforms
