#include "gwgames/maps.hpp"

#include <stdexcept>

namespace gwg {

std::string map_name(MapId id) {
    switch (id) {
        case MapId::F2: return "F2";
        case MapId::H2: return "H2";
        case MapId::FH: return "FH";
        case MapId::HF: return "HF";
        case MapId::F: return "F";
        case MapId::H: return "H";
    }
    return {};
}

MapId parse_map(std::string_view name) {
    if (name == "F2") return MapId::F2;
    if (name == "H2") return MapId::H2;
    if (name == "FH") return MapId::FH;
    if (name == "HF") return MapId::HF;
    if (name == "F") return MapId::F;
    if (name == "H") return MapId::H;
    throw std::invalid_argument("unknown map '" + std::string(name) +
                                "' (expected F2, H2, FH, HF, F or H)");
}

} // namespace gwg
