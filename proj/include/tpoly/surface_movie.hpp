#pragma once

#include <string>

#include <json.hpp>

#include "tpoly/pretzel.hpp"

namespace tpoly {

/// Handle counts of a movie presentation of a spanning surface.
struct MoveSchedule {
    std::string surface;  // "F_U" or "F_K"
    int braid_power = 0;  // even power of the central winding applied first
    int s1 = 0;
    int s2 = 0;
    int s3 = 0;
    int deaths = 0;
    int punctures = 0;
    int chi = 0;

    int saddles() const { return s1 + s2 + s3; }
    int frame_count() const { return s1 + s2 + s3 + deaths + 2; }
    /// deaths - saddles - punctures
    int euler_characteristic() const { return deaths - saddles() - punctures; }
};

MoveSchedule schedule_FU(const PretzelParams& p);
MoveSchedule schedule_FK(const PretzelParams& p);

/// Schematic strip of frames, one per handle plus the opening and closing frames.
std::string render_schedule(const MoveSchedule& s);

nlohmann::json to_json(const MoveSchedule& s);

}  // namespace tpoly
