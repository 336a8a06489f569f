#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delivchain/contract.hpp"
#include "delivchain/registry.hpp"
#include "delivchain/settlement.hpp"
#include "delivchain/types.hpp"

namespace delivchain {

// Timing/claiming strategy for a simulated population. Policies never bypass
// contract preconditions; misbehavior shows up only as lateness.
struct BehaviorPolicy {
    enum class Kind {
        Honest,      // earliest legal tick, meets promises
        TardyCook,   // restaurant hands over extra_ticks past the promise
        TardyRider,  // arrives extra_ticks past the promise
        Greedy,      // claims up to batch_size packages before delivering any
    };

    Kind kind = Kind::Honest;
    Tick extra_ticks = 0;          // TardyCook / TardyRider
    std::uint64_t batch_size = 1;  // Greedy
    Tick travel_ticks = 1;         // honest/greedy travel duration per delivery

    static BehaviorPolicy honest() { return {}; }
    static BehaviorPolicy tardy_cook(Tick extra) { return {Kind::TardyCook, extra, 1, 1}; }
    static BehaviorPolicy tardy_rider(Tick extra) { return {Kind::TardyRider, extra, 1, 1}; }
    static BehaviorPolicy greedy(std::uint64_t batch) { return {Kind::Greedy, 0, batch, 1}; }
};

struct PopulationSpec {
    std::uint64_t count = 0;
    Money initial_balance = 0;
    BehaviorPolicy policy;
};

struct PlannedOrder {
    Tick tick = 0;
    std::uint64_t customer_id = 0;    // 1-based
    std::uint64_t restaurant_id = 0;  // 1-based
    std::vector<std::uint64_t> items;
    Money delivery_fee = 0;
    Tick promised_delivery_time = 1;
    std::uint64_t loc_x = 0;
    std::uint64_t loc_y = 0;
};

// Optional plan generator; expands into PlannedOrders using the config seed.
struct RandomOrderSpec {
    std::uint64_t count = 0;
    Tick first_tick = 0;
    Tick last_tick = 0;
    Money max_delivery_fee = 100;
    Tick min_promised_delivery = 1;
    Tick max_promised_delivery = 5;
};

// Fully determines a run: identical configs produce identical ledgers.
struct ScenarioConfig {
    std::string name = "scenario";
    std::uint64_t seed = 0;
    RegistryCaps caps;
    PenaltyParams penalties;
    ReputationParams reputation;
    std::vector<std::pair<std::string, Gas>> gas_overrides;
    PopulationSpec customers;
    PopulationSpec restaurants;
    PopulationSpec deliverymen;
    std::vector<std::vector<MenuItem>> menus;  // one per restaurant
    std::vector<PlannedOrder> orders;
    std::optional<RandomOrderSpec> random_orders;
    Tick max_ticks = 10'000;

    // Throws ContractError(InvalidConfig) describing the first problem.
    void validate() const;

    // Caps/penalties/gas/funding for the engine; funding covers all actors.
    EngineParams engine_params() const;

    // The explicit plan plus any generated orders, sorted by (tick, position).
    std::vector<PlannedOrder> full_plan() const;
};

// Deterministic address for a simulated actor: first 20 bytes of
// sha256("<kind>-<id>").
Address actor_address(ActorKind kind, std::uint64_t id);

ScenarioConfig scenario_from_json_text(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);
std::string scenario_to_json_text(const ScenarioConfig& config);

}  // namespace delivchain
