#pragma once

#include <json.hpp>

#include "rpgauss/epps.hpp"
#include "rpgauss/lobato_velasco.hpp"
#include "rpgauss/projection.hpp"
#include "rpgauss/rp_test.hpp"

namespace rpgauss {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const ProjectionVector& h);
nlohmann::json to_json(const EppsResult& r);
nlohmann::json to_json(const LvResult& r);
// {"projections":[{alpha1, alpha2, test, stream_id, stat, p, h, detail}], "combined_p", "seed", ...}
nlohmann::json to_json(const RpReport& r);

}  // namespace rpgauss
