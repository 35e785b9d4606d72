#pragma once

#include "nutforge/families.hpp"
#include "nutforge/nutcert.hpp"

#include <json.hpp>

namespace nutforge {

/// Flat certificate object with a stable key set:
/// {is_nut, order, degree, nullity, kernel_vector, route, failure_reason}.
/// Kernel entries are decimal strings so arbitrary precision survives
/// JSON round trips; degree is "irregular" for non-regular graphs.
nlohmann::json certificate_json(const NutCertificate& cert);

nlohmann::json ell_report_json(const EllReport& report);

nlohmann::json caux_report_json(const CauxReport& report);

}  // namespace nutforge
