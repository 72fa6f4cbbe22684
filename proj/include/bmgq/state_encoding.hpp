#pragma once

#include <array>

#include "bmgq/types.hpp"

namespace bmgq {

inline constexpr int kStateDim = 14;

/// Normalisation cap (minutes) for wait / remaining / detour entries.
inline constexpr double kTimeCapMin = 30.0;

/// Sentinel for the five candidate entries when no order is under evaluation.
inline constexpr double kNullCandidate = -1.0;

/// Fixed layout of the per-vehicle input vector.
enum StateIndex : int {
    kVehX = 0,
    kVehY = 1,
    kVacantFrac = 2,
    kTimeNorm = 3,
    kCandOriginX = 4,
    kCandOriginY = 5,
    kCandDestX = 6,
    kCandDestY = 7,
    kCandWait = 8,
    kOccMinRemaining = 9,
    kOccMaxRemaining = 10,
    kOccSumAdditional = 11,
    kOccupancyFrac = 12,
    kPickupPendingFlag = 13,
};

using StateVector = std::array<double, kStateDim>;

/// Deterministic 14-entry encoding of a vehicle and the order it is
/// currently evaluating (nullptr for none). Coordinates are divided by the
/// grid dimensions, times by the horizon or the fixed 30-minute cap.
StateVector encode_state(const VehicleState& vehicle, const Order* candidate,
                         double now_min, const GridCity& grid, double horizon_min);

}  // namespace bmgq
