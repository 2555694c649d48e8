// serialize.hpp — JSON and CSV forms of configs, derived constants, root sets and samples

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "edgedecay/dynamics.hpp"
#include "edgedecay/rational.hpp"
#include "edgedecay/reservoir.hpp"
#include "edgedecay/sample.hpp"

namespace edgedecay {

nlohmann::json complex_json(Complex z);  // {"re": .., "im": ..}

nlohmann::json to_json(const ReservoirConfig& cfg);
nlohmann::json to_json(const ReservoirParams& params);
nlohmann::json to_json(const RootSet& rs);
nlohmann::json to_json(const GSample& s);

// Header "t,re_G,im_G,abs_G,error", one row per sample.
std::string samples_csv(const std::vector<GSample>& samples);

// Header "t,rho11,Re(rho10),Im(rho10),abs_rho10,method,err_bound".
inline constexpr const char* kTrajectoryHeader = "t,rho11,Re(rho10),Im(rho10),abs_rho10,method,err_bound";
std::string trajectory_csv(const std::vector<TrajectoryPoint>& points);

// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace edgedecay
