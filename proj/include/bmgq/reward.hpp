#pragma once

#include <vector>

#include "bmgq/types.hpp"

namespace bmgq {

enum class Decision { reject, accept };

/// Per-agent reward for one decision step. A rejection (or an unavailable
/// vehicle) costs the flat operating cost c0; an acceptance earns the base
/// plus distance revenue minus pickup-wait and two-tier detour penalties.
double reward(Decision decision, double dis_km, double pickup_min, double add_min,
              const RewardParams& params);

/// Platform-level reward: exact sum over agents.
double platform_reward(const std::vector<double>& per_agent_rewards);

}  // namespace bmgq
