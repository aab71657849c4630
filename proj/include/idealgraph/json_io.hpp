#pragma once

#include <json.hpp>

#include "idealgraph/hole_search.hpp"
#include "idealgraph/invariants.hpp"
#include "idealgraph/perfectness.hpp"

namespace idealgraph {

nlohmann::ordered_json certificate_json(const HoleCertificate& c);
nlohmann::ordered_json report_json(const PerfectnessReport& r);
nlohmann::ordered_json report_json(const InvariantReport& r);

}  // namespace idealgraph
