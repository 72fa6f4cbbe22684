#include "bmgq/state_encoding.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bmgq {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

StateVector encode_state(const VehicleState& vehicle, const Order* candidate,
                         double now_min, const GridCity& grid, double horizon_min) {
    if (!(horizon_min > 0.0)) throw std::invalid_argument("encode_state: horizon must be > 0");
    if (vehicle.capacity < 1) throw std::invalid_argument("encode_state: capacity must be >= 1");

    StateVector s{};
    const double cap = static_cast<double>(vehicle.capacity);

    s[kVehX] = vehicle.position.x / static_cast<double>(grid.width);
    s[kVehY] = vehicle.position.y / static_cast<double>(grid.height);
    s[kVacantFrac] = static_cast<double>(vehicle.vacant_seats()) / cap;
    s[kTimeNorm] = clamp01(now_min / horizon_min);

    if (candidate != nullptr) {
        s[kCandOriginX] = candidate->origin.x / static_cast<double>(grid.width);
        s[kCandOriginY] = candidate->origin.y / static_cast<double>(grid.height);
        s[kCandDestX] = candidate->destination.x / static_cast<double>(grid.width);
        s[kCandDestY] = candidate->destination.y / static_cast<double>(grid.height);
        s[kCandWait] = clamp01((now_min - candidate->request_time) / kTimeCapMin);
    } else {
        s[kCandOriginX] = kNullCandidate;
        s[kCandOriginY] = kNullCandidate;
        s[kCandDestX] = kNullCandidate;
        s[kCandDestY] = kNullCandidate;
        s[kCandWait] = kNullCandidate;
    }

    if (!vehicle.onboard.empty()) {
        double min_rem = std::numeric_limits<double>::infinity();
        double max_rem = 0.0;
        double sum_add = 0.0;
        for (const auto& p : vehicle.onboard) {
            min_rem = std::min(min_rem, p.remaining_time);
            max_rem = std::max(max_rem, p.remaining_time);
            sum_add += p.additional_time;
        }
        s[kOccMinRemaining] = clamp01(min_rem / kTimeCapMin);
        s[kOccMaxRemaining] = clamp01(max_rem / kTimeCapMin);
        s[kOccSumAdditional] = clamp01(sum_add / kTimeCapMin);
    }

    s[kOccupancyFrac] = static_cast<double>(vehicle.onboard.size()) / cap;
    s[kPickupPendingFlag] = vehicle.pickup_pending ? 1.0 : 0.0;
    return s;
}

}  // namespace bmgq
