#include "nutforge/serialize.hpp"

namespace nutforge {

using nlohmann::json;

json certificate_json(const NutCertificate& cert) {
  json j;
  j["is_nut"] = cert.is_nut;
  j["order"] = cert.order;
  if (cert.degree)
    j["degree"] = *cert.degree;
  else
    j["degree"] = "irregular";
  j["nullity"] = cert.nullity;
  if (cert.kernel_vector) {
    json entries = json::array();
    for (const auto& e : *cert.kernel_vector) entries.push_back(e.get_str());
    j["kernel_vector"] = std::move(entries);
  } else {
    j["kernel_vector"] = nullptr;
  }
  j["route"] = to_string(cert.route);
  if (cert.failure_reason) {
    json reason;
    reason["kind"] = to_string(cert.failure_reason->kind);
    reason["witness_orders"] = cert.failure_reason->witness_orders;
    if (cert.failure_reason->witness_factor)
      reason["witness_factor"] = cert.failure_reason->witness_factor->to_string();
    else
      reason["witness_factor"] = nullptr;
    j["failure_reason"] = std::move(reason);
  } else {
    j["failure_reason"] = nullptr;
  }
  return j;
}

json ell_report_json(const EllReport& report) {
  json j;
  j["alpha"] = report.alpha;
  j["beta"] = report.beta;
  j["ell"] = report.ell;
  j["factor_orders"] = report.factor_orders.orders;
  j["r_degree"] = report.r_degree;
  return j;
}

json caux_report_json(const CauxReport& report) {
  json j;
  j["t"] = report.t;
  j["p1_stripped_exponent"] = report.p1.stripped_exponent;
  j["p1_orders"] = report.p1.orders.orders;
  j["p2_stripped_exponent"] = report.p2.stripped_exponent;
  j["p2_orders"] = report.p2.orders.orders;
  j["violations"] = report.violations;
  return j;
}

}  // namespace nutforge
