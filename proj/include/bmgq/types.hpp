#pragma once

#include <cstdint>
#include <vector>

#include "bmgq/geometry.hpp"

namespace bmgq {

enum class OrderStatus { open, assigned, onboard, completed, expired };

struct Order {
    std::int64_t id = 0;
    Vec2 origin;
    Vec2 destination;
    double request_time = 0.0;  // minutes since episode start
    double direct_time = 0.0;   // nonstop origin->destination, minutes
    OrderStatus status = OrderStatus::open;
};

struct PassengerOnBoard {
    std::int64_t order_id = 0;
    Vec2 dropoff;
    double remaining_time = 0.0;   // minutes to dropoff under the current plan
    double additional_time = 0.0;  // accumulated delay vs the direct trip, non-decreasing
};

enum class StopKind { pickup, dropoff };

struct Stop {
    StopKind kind = StopKind::pickup;
    std::int64_t order_id = 0;
    Vec2 location;
    double direct_time = 0.0;  // pickup stops carry the order's nonstop trip time
};

struct VehicleState {
    std::int64_t id = 0;
    Vec2 position;
    int capacity = 3;
    std::vector<PassengerOnBoard> onboard;
    std::vector<Stop> stop_plan;
    bool pickup_pending = false;

    // vacant seats are derived so the seat-accounting invariant holds by construction
    int vacant_seats() const {
        return capacity - static_cast<int>(onboard.size()) - (pickup_pending ? 1 : 0);
    }
    bool can_take_order() const { return vacant_seats() >= 1 && !pickup_pending; }
};

struct RewardParams {
    double beta0 = 100.0;  // flat pickup revenue
    double beta1 = 40.0;   // per-km trip revenue
    double beta2 = 5.0;    // per-minute pickup wait cost
    double beta3 = 2.0;    // per-minute detour cost below the threshold
    double beta4 = 20.0;   // per-minute detour cost above the threshold
    double thre_min = 15.0;
    double c0 = 1.0;       // per-decision-step operating cost
};

}  // namespace bmgq
