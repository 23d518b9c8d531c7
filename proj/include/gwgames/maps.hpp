#pragma once

#include <string>
#include <string_view>

#include "gwgames/offspring.hpp"

namespace gwg {

/// The composed one-step maps whose fixed points carry the game values.
/// F2/H2/FH/HF are increasing on [0,1]; F and H are decreasing with a unique
/// fixed point each.
enum class MapId { F2, H2, FH, HF, F, H };

std::string map_name(MapId id);
MapId parse_map(std::string_view name);

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

/// Evaluation handle for one composed map of one distribution. Intermediate
/// values are clamped to [0,1]: mathematically the maps send [0,1] into
/// itself, and 1-ulp overshoots must not poison a composition.
class ComposedMap {
public:
    ComposedMap(const OffspringDistribution& dist, MapId id) : dist_(&dist), id_(id) {}

    MapId id() const { return id_; }
    const OffspringDistribution& dist() const { return *dist_; }
    bool increasing() const { return id_ != MapId::F && id_ != MapId::H; }

    double operator()(double x) const {
        const OffspringDistribution& d = *dist_;
        switch (id_) {
            case MapId::F: return clamp01(d.f(x));
            case MapId::H: return clamp01(d.h(x));
            case MapId::F2: return clamp01(d.f(clamp01(d.f(x))));
            case MapId::H2: return clamp01(d.h(clamp01(d.h(x))));
            case MapId::FH: return clamp01(d.f(clamp01(d.h(x))));
            case MapId::HF: return clamp01(d.h(clamp01(d.f(x))));
        }
        return 0.0; // unreachable
    }

    // F' = H' = -G', so every composed derivative is a product of -G' factors.
    double derivative(double x) const {
        const OffspringDistribution& d = *dist_;
        switch (id_) {
            case MapId::F:
            case MapId::H:
                return -d.g_prime(x);
            case MapId::F2: {
                const double inner = clamp01(d.f(x));
                return d.g_prime(inner) * d.g_prime(x);
            }
            case MapId::H2: {
                const double inner = clamp01(d.h(x));
                return d.g_prime(inner) * d.g_prime(x);
            }
            case MapId::FH: {
                const double inner = clamp01(d.h(x));
                return d.g_prime(inner) * d.g_prime(x);
            }
            case MapId::HF: {
                const double inner = clamp01(d.f(x));
                return d.g_prime(inner) * d.g_prime(x);
            }
        }
        return 0.0; // unreachable
    }

private:
    const OffspringDistribution* dist_;
    MapId id_;
};

} // namespace gwg
