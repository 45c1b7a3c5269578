#include "morse/json_io.hpp"

namespace morse {

Json to_json(const RatMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const HeckeElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.coeffs())
    terms.push_back(Json::array({w.to_string(), rat_str(c)}));
  return terms;
}

Json complex_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

Json rep_json(const ModuleRep& rep) {
  Json j;
  j["case"] = case_str(rep.case_tag);
  j["partition"] = rep.partition.parts();
  j["dim"] = rep.dim;
  Json labels = Json::array();
  if (rep.case_tag == CaseTag::II) {
    j["basis"] = "coset";
    for (const auto& w : rep.coset_basis) labels.push_back(w.to_string());
  } else {
    j["basis"] = "beta";
    for (const auto& b : rep.beta_basis) {
      Json t = Json::array();
      for (int v : b.assign) t.push_back(v + 1);
      labels.push_back(std::move(t));
    }
  }
  j["basis_labels"] = std::move(labels);
  Json family = Json::array();
  for (const auto& m : rep.family) family.push_back(to_json(m));
  j["family"] = std::move(family);
  if (!rep.microlocal_cache.empty()) {
    Json micro;
    for (const auto& [key, m] : rep.microlocal_cache) micro[key] = to_json(m);
    j["microlocal"] = std::move(micro);
  }
  return j;
}

Json verify_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  Json j;
  j["all_passed"] = report.all_passed();
  j["checks"] = std::move(checks);
  return j;
}

Json normal_form_json(const NormalFormReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["residual"] = c.residual;
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  Json j;
  j["ok"] = report.ok;
  j["max_residual"] = report.max_residual();
  j["poly_degrees"] = report.poly_degree;
  j["checks"] = std::move(checks);
  return j;
}

Json track_json(const TrackResult& result) {
  Json j;
  Json perm = Json::array();
  for (int v : result.permutation) perm.push_back(v);
  j["permutation"] = std::move(perm);
  switch (result.verdict) {
    case TrackVerdict::Match: j["verdict"] = "match"; break;
    case TrackVerdict::Mismatch: j["verdict"] = "mismatch"; break;
    case TrackVerdict::SkippedSignStructure: j["verdict"] = "skipped"; break;
  }
  j["min_gap_observed"] = result.min_gap_observed;
  j["steps_used"] = result.steps_used;
  if (!result.diagnostic.empty()) j["diagnostic"] = result.diagnostic;
  return j;
}

Json critical_points_json(const std::vector<CriticalPoint>& points) {
  Json arr = Json::array();
  for (const auto& pt : points) {
    Json e;
    Json t = Json::array();
    for (int v : pt.beta.assign) t.push_back(v + 1);
    e["beta"] = std::move(t);
    Json rows = Json::array();
    for (int i = 0; i < pt.C.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < pt.C.cols(); ++j) row.push_back(complex_json(pt.C(i, j)));
      rows.push_back(std::move(row));
    }
    e["C"] = std::move(rows);
    e["newton_residual"] = pt.newton_residual;
    e["xi"] = complex_json(pt.xi);
    e["hessian_dim"] = pt.hessian_dim;
    e["hessian_sigma_min"] =
        std::isinf(pt.hessian_sigma_min) ? Json("inf") : Json(pt.hessian_sigma_min);
    e["hessian_sigma_max"] = pt.hessian_sigma_max;
    e["criticality_residual"] = pt.criticality_residual;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace morse
