#include "regext/report.hpp"

#include "regext/literals.hpp"

#include <sstream>

namespace regext {

namespace {

Json weight_list(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(format_weight(w));
  return out;
}

Json path_json(const SimpleRootPath& p) {
  Json out = Json::array();
  for (int v : p.vertices) out.push_back(v + 1);
  return out;
}

Json matrix_json(const SparseMatrix& a) {
  Json out = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) {
      out.push_back(Json::array({r, e.col, e.value.get_num().get_str(), e.value.get_den().get_str()}));
    }
  }
  return out;
}

}  // namespace

Json to_json(const Caps& caps) {
  return Json{{"oracle_dim", caps.oracle_dim},
              {"character_dim", caps.character_dim},
              {"enumeration_roots", caps.enumeration_roots},
              {"orbit_budget", caps.orbit_budget}};
}

Json to_json(const WitnessCertificate& cert) {
  Json out{{"kind", to_string(cert.kind)}};
  if (cert.lambda) out["lambda"] = format_weight(*cert.lambda);
  out["symmetrized"] = format_subset(cert.symmetrized);
  out["symmetrized_size"] = cert.symmetrized.size();
  if (cert.chosen_simple) out["l"] = *cert.chosen_simple + 1;
  if (cert.path) out["path"] = path_json(*cert.path);
  if (cert.witness_weight) out["witness_weight"] = format_weight(*cert.witness_weight);
  return out;
}

Json to_json(const WitnessCertificate& cert, const CertificateValidation& validation) {
  Json out = to_json(cert);
  out["validation"] = Json{{"valid", validation.valid()},
                           {"method", cert.kind == CertificateKind::wide ? "closure" : to_string(validation.method)},
                           {"structure_ok", validation.structure_ok},
                           {"witness_is_weight", validation.witness_is_weight},
                           {"witness_outside_span", validation.witness_outside_span},
                           {"detail", validation.detail}};
  return out;
}

Json to_json(const CommutantData& data) {
  return Json{{"commutant_dim", data.commutant_dim},
              {"radical_dim", data.radical_dim},
              {"indecomposable", data.indecomposable()}};
}

Json to_json(const OracleCheck& check) {
  return Json{{"lambda", format_weight(check.lambda)},
              {"module_dim", check.module_dim},
              {"span_dim", check.span_dim},
              {"lambda_wide", check.lambda_wide},
              {"commutant", to_json(check.commutant)},
              {"agree", check.agree()}};
}

Json subset_json(const SubsetVerdict& v) {
  Json certs = Json::array();
  for (std::size_t i = 0; i < v.certificates.size(); ++i) certs.push_back(to_json(v.certificates[i], v.validations[i]));
  Json checks = Json::array();
  for (const auto& c : v.oracle_checks) checks.push_back(to_json(c));
  return Json{{"subset", format_subset(v.subset)},
              {"size", v.subset.size()},
              {"kind", to_string(v.kind)},
              {"verdict", to_string(v.verdict)},
              {"certificates", std::move(certs)},
              {"oracle_checks", std::move(checks)},
              {"problems", v.problems}};
}

Json classification_json(const std::string& system, const SubsetVerdict& v, const std::vector<Weight>& grid,
                         const Caps& caps, bool incomplete) {
  Json s = subset_json(v);
  return Json{{"system", system},
              {"subset", s["subset"]},
              {"verdict", s["verdict"]},
              {"kind", s["kind"]},
              {"certificates", s["certificates"]},
              {"oracle_checks", s["oracle_checks"]},
              {"problems", s["problems"]},
              {"grid", weight_list(grid)},
              {"caps", to_json(caps)},
              {"incomplete_flag", incomplete}};
}

Json to_json(const ClassificationReport& report) {
  int module_validated = 0;
  int criterion_validated = 0;
  for (const auto& v : report.verdicts) {
    for (std::size_t i = 0; i < v.certificates.size(); ++i) {
      if (v.certificates[i].kind == CertificateKind::wide) continue;
      (v.validations[i].method == ValidationMethod::module ? module_validated : criterion_validated)++;
    }
  }
  Json results = Json::array();
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    Json s = subset_json(report.verdicts[i]);
    if (!report.orbit_sizes.empty()) s["orbit_size"] = report.orbit_sizes[i];
    results.push_back(std::move(s));
  }
  return Json{{"system", report.system},
              {"coeff_bound", report.coeff_bound},
              {"grid", weight_list(report.grid)},
              {"caps", to_json(report.caps)},
              {"mode", to_string(report.mode)},
              {"incomplete_flag", report.incomplete},
              {"incomplete_reason", report.incomplete_reason},
              {"dichotomy_holds", report.dichotomy_holds()},
              {"counts",
               Json{{"closed_subsets", report.verdicts.size()},
                    {"wide", report.count(Verdict::wide)},
                    {"narrow", report.count(Verdict::narrow)},
                    {"violation", report.count(Verdict::violation)},
                    {"module_validated_certificates", module_validated},
                    {"criterion_validated_certificates", criterion_validated},
                    {"oracle_checks", report.oracle_checks()},
                    {"oracle_disagreements", report.oracle_disagreements()}}},
              {"results", std::move(results)}};
}

std::string to_csv(const ClassificationReport& report) {
  std::ostringstream out;
  out << "subset,size,kind,verdict,certificates,valid_certificates,oracle_checks,oracle_agreements\n";
  for (const auto& v : report.verdicts) {
    int valid = 0;
    for (const auto& c : v.validations) valid += c.valid() ? 1 : 0;
    int agree = 0;
    for (const auto& c : v.oracle_checks) agree += c.agree() ? 1 : 0;
    out << '"' << format_subset(v.subset) << "\"," << v.subset.size() << ',' << to_string(v.kind) << ','
        << to_string(v.verdict) << ',' << v.certificates.size() << ',' << valid << ',' << v.oracle_checks.size()
        << ',' << agree << '\n';
  }
  return out.str();
}

Json to_json(const NonsimpleReport& report) {
  Json types = Json::array();
  for (const auto& t : report.types) types.push_back(t.name());
  return Json{{"types", std::move(types)},
              {"lambda", format_weight(report.lambda)},
              {"eta", format_weight(report.eta)},
              {"dim_v", report.dim_v},
              {"dim_w", report.dim_w},
              {"factors_commute", report.factors_commute},
              {"v_restriction", to_json(report.v_commutant)},
              {"w_restriction", to_json(report.w_commutant)},
              {"w_first_factor_acts_trivially", report.w_first_factor_acts_trivially},
              {"w_trivial_summands", report.w_trivial_summands},
              {"not_narrow", report.not_narrow()},
              {"not_wide", report.not_wide()},
              {"neither_narrow_nor_wide", report.neither_narrow_nor_wide()}};
}

Json to_json(const ModuleRealization& m) {
  const RootSystem& sys = m.system();
  Json e = Json::object();
  for (int b = 0; b < sys.size(); ++b) e[format_root(sys.root(b))] = matrix_json(m.e(b));
  Json h = Json::array();
  for (int i = 0; i < sys.rank(); ++i) h.push_back(matrix_json(m.h(i)));
  return Json{{"system", sys.type().name()},
              {"highest_weight", format_weight(m.highest_weight())},
              {"dimension", m.dimension()},
              {"basis_weights", weight_list(m.basis_weights())},
              {"e", std::move(e)},
              {"h", std::move(h)}};
}

}  // namespace regext
