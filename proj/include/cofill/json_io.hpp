#pragma once

#include <string>

#include <json.hpp>

#include "cofill/cochain.hpp"
#include "cofill/geometry.hpp"
#include "cofill/graph_inequalities.hpp"
#include "cofill/minimality.hpp"
#include "cofill/pagoda.hpp"

namespace cofill {

using nlohmann::json;

/// {"n":…, "arity":…, "sets":[[…],…]} (sets sorted ascending, list colex)
/// or the compact {"n":…, "arity":…, "bits_hex":"…"} (little-endian over
/// colex ranks). Writers default to "sets" while |E| <= 10^4.
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j);

json verdict_to_json(const MinimalityVerdict& v);

json necessary_report_to_json(const NecessaryReport& r);

json pagoda_to_json(const Pagoda& p);
Pagoda pagoda_from_json(const json& j);
json pagoda_report_to_json(const PagodaReport& r);

json lobo2_report_to_json(const Lobo2Report& r);
json highdeg_certificate_to_json(const HighDegCertificate& c);
json low3_certificate_to_json(const Low3Certificate& c);

/// {"points": [[xnum,xden,ynum,yden], …]}
json pointconfig_to_json(const PointConfig& p);
PointConfig pointconfig_from_json(const json& j);
json depth_result_to_json(const DepthResult& r);

}  // namespace cofill
