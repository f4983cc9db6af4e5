#include "superfft/reports.hpp"

namespace superfft {

Json to_json(const FftReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["group"] = report.group == Group::OSp ? "osp" : "pe";
  j["m"] = report.m;
  j["n"] = report.n;
  j["N"] = report.arity;
  j["n_matchings"] = report.n_matchings;
  j["rank"] = report.rank;
  j["invariant_dim"] = report.invariant_dim;
  j["pass"] = report.pass;
  if (report.basis) {
    Json basis = Json::array();
    for (const TensorForm& t : report.basis->basis) {
      Json entries = Json::array();
      for (const auto& [tuple, c] : t.coeffs()) {
        Json e;
        Json idx = Json::array();
        for (uint32_t i : tuple) idx.push_back(i + 1);
        e["tuple"] = idx;
        e["coeff"] = to_string(c);
        entries.push_back(std::move(e));
      }
      basis.push_back(std::move(entries));
    }
    j["basis"] = std::move(basis);
  }
  return j;
}

Json to_json(const PfaffianCertificate& cert, bool include_delta,
             std::optional<bool> factorization_ok) {
  Json j;
  j["schema"] = kReportSchema;
  j["m"] = cert.m;
  j["n"] = cert.n;
  j["is_polynomial"] = cert.is_polynomial;
  j["square_ok"] = cert.square_ok;
  j["lie_invariant"] = cert.lie_invariant;
  j["reflection_sign"] = to_string(cert.reflection_sign);
  if (cert.m1_closed_form_ok) j["m1_closed_form_ok"] = *cert.m1_closed_form_ok;
  if (factorization_ok) j["factorization_ok"] = *factorization_ok;
  j["delta_terms"] = cert.delta_pow.term_count();
  if (include_delta) j["delta"] = to_string(cert.delta_pow);
  return j;
}

Json form_to_json(const FormSpec& f) {
  Json j;
  j["m"] = f.dim.even;
  j["n"] = f.form_parity == Parity::Even ? f.dim.odd / 2 : f.dim.odd;
  j["parity"] = f.form_parity == Parity::Even ? "even" : "odd";
  Json gram = Json::array();
  for (size_t i = 0; i < f.gram.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < f.gram.cols(); ++k) row.push_back(to_string(f.gram.at(i, k)));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  return j;
}

std::vector<std::string> matrix_rows_text(const SuperMatrix& m) {
  std::vector<std::string> rows;
  for (uint32_t i = 0; i < m.dim_out().total(); ++i) {
    std::string row;
    for (uint32_t j = 0; j < m.dim_in().total(); ++j) {
      if (j == m.dim_in().even && m.dim_in().even > 0)
        row += " | ";
      else if (j > 0)
        row += ", ";
      row += to_string(m.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace superfft
