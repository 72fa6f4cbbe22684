#pragma once

#include <cmath>
#include <stdexcept>

namespace bmgq {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Rectangular zoned service area. Zone coordinates run over
/// [0, width-1] x [0, height-1]; continuous positions use the same units.
struct GridCity {
    int width = 1;
    int height = 1;
    double zone_edge_km = 0.8;
    double speed_kmph = 16.8;

    GridCity() = default;
    GridCity(int w, int h, double edge_km, double speed)
        : width(w), height(h), zone_edge_km(edge_km), speed_kmph(speed) {
        if (width < 1 || height < 1) throw std::invalid_argument("GridCity: empty grid");
        if (!(zone_edge_km > 0.0)) throw std::invalid_argument("GridCity: zone_edge_km must be > 0");
        if (!(speed_kmph > 0.0)) throw std::invalid_argument("GridCity: speed_kmph must be > 0");
    }

    bool contains(const Vec2& p) const {
        return p.x >= 0.0 && p.x <= static_cast<double>(width - 1) &&
               p.y >= 0.0 && p.y <= static_cast<double>(height - 1);
    }

    double manhattan_km(const Vec2& a, const Vec2& b) const {
        return (std::abs(a.x - b.x) + std::abs(a.y - b.y)) * zone_edge_km;
    }

    double km_per_min() const { return speed_kmph / 60.0; }
};

}  // namespace bmgq
