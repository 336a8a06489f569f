#include "delivchain/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "delivchain/errors.hpp"
#include "delivchain/rng.hpp"
#include "delivchain/sha256.hpp"

namespace delivchain {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw ContractError(ErrorCode::InvalidConfig, what);
}

std::uint64_t get_u64(const json& j, const char* key, std::uint64_t fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_unsigned()) invalid(std::string(key) + " must be a non-negative integer");
    return j[key].get<std::uint64_t>();
}

const char* policy_kind_str(BehaviorPolicy::Kind kind) {
    switch (kind) {
        case BehaviorPolicy::Kind::Honest: return "honest";
        case BehaviorPolicy::Kind::TardyCook: return "tardy_cook";
        case BehaviorPolicy::Kind::TardyRider: return "tardy_rider";
        case BehaviorPolicy::Kind::Greedy: return "greedy";
    }
    return "honest";
}

BehaviorPolicy parse_policy(const json& j, const std::string& where) {
    BehaviorPolicy policy;
    if (j.is_null()) return policy;
    if (!j.is_object()) invalid(where + ".policy must be an object");
    std::string type = j.value("type", std::string("honest"));
    if (type == "honest") {
        policy.kind = BehaviorPolicy::Kind::Honest;
    } else if (type == "tardy_cook") {
        policy.kind = BehaviorPolicy::Kind::TardyCook;
    } else if (type == "tardy_rider") {
        policy.kind = BehaviorPolicy::Kind::TardyRider;
    } else if (type == "greedy") {
        policy.kind = BehaviorPolicy::Kind::Greedy;
    } else {
        invalid(where + ": unknown policy type '" + type + "'");
    }
    policy.extra_ticks = get_u64(j, "extra_ticks", 0);
    policy.batch_size = get_u64(j, "batch_size", 1);
    policy.travel_ticks = get_u64(j, "travel_ticks", 1);
    return policy;
}

PopulationSpec parse_population(const json& j, const std::string& where) {
    if (!j.is_object()) invalid(where + " must be an object");
    PopulationSpec spec;
    spec.count = get_u64(j, "count", 0);
    spec.initial_balance = get_u64(j, "initial_balance", 0);
    if (j.contains("policy")) spec.policy = parse_policy(j["policy"], where);
    return spec;
}

json policy_to_json(const BehaviorPolicy& p) {
    json j;
    j["type"] = policy_kind_str(p.kind);
    if (p.kind == BehaviorPolicy::Kind::TardyCook || p.kind == BehaviorPolicy::Kind::TardyRider) {
        j["extra_ticks"] = p.extra_ticks;
    }
    if (p.kind == BehaviorPolicy::Kind::Greedy) j["batch_size"] = p.batch_size;
    if (p.kind == BehaviorPolicy::Kind::Honest || p.kind == BehaviorPolicy::Kind::Greedy) {
        j["travel_ticks"] = p.travel_ticks;
    }
    return j;
}

}  // namespace

Address actor_address(ActorKind kind, std::uint64_t id) {
    Digest digest = sha256(std::string(actor_kind_str(kind)) + "-" + std::to_string(id));
    Address address{};
    std::copy_n(digest.begin(), address.size(), address.begin());
    return address;
}

void ScenarioConfig::validate() const {
    if (customers.policy.kind != BehaviorPolicy::Kind::Honest) {
        invalid("customers only support the honest policy");
    }
    if (restaurants.policy.kind != BehaviorPolicy::Kind::Honest &&
        restaurants.policy.kind != BehaviorPolicy::Kind::TardyCook) {
        invalid("restaurant policy must be honest or tardy_cook");
    }
    if (deliverymen.policy.kind == BehaviorPolicy::Kind::TardyCook) {
        invalid("deliveryman policy must be honest, tardy_rider or greedy");
    }
    if (deliverymen.policy.travel_ticks < 1) invalid("travel_ticks must be at least 1");
    if (deliverymen.policy.kind == BehaviorPolicy::Kind::Greedy &&
        deliverymen.policy.batch_size < 1) {
        invalid("greedy batch_size must be at least 1");
    }
    if (menus.size() != restaurants.count) {
        invalid("menus must list exactly one menu per restaurant");
    }
    for (std::size_t i = 0; i < menus.size(); ++i) {
        const auto& menu = menus[i];
        if (menu.empty()) invalid("menu " + std::to_string(i + 1) + " is empty");
        std::set<std::uint64_t> ids;
        for (const MenuItem& item : menu) {
            if (!ids.insert(item.food_id).second) {
                invalid("menu " + std::to_string(i + 1) + " duplicates food_id " +
                        std::to_string(item.food_id));
            }
            if (item.prep_time < 1) {
                invalid("menu " + std::to_string(i + 1) + " has prep_time 0");
            }
        }
    }
    Tick prev_tick = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const PlannedOrder& o = orders[i];
        if (o.customer_id < 1 || o.customer_id > customers.count) {
            invalid("order " + std::to_string(i) + " references unknown customer");
        }
        if (o.restaurant_id < 1 || o.restaurant_id > restaurants.count) {
            invalid("order " + std::to_string(i) + " references unknown restaurant");
        }
        if (o.items.empty()) invalid("order " + std::to_string(i) + " has no items");
        if (i > 0 && o.tick < prev_tick) invalid("order plan ticks must be sorted");
        prev_tick = o.tick;
    }
    if (random_orders) {
        if (random_orders->count > 0 && (customers.count == 0 || restaurants.count == 0)) {
            invalid("random_orders need at least one customer and one restaurant");
        }
        if (random_orders->last_tick < random_orders->first_tick) {
            invalid("random_orders tick range is inverted");
        }
        if (random_orders->min_promised_delivery < 1 ||
            random_orders->max_promised_delivery < random_orders->min_promised_delivery) {
            invalid("random_orders promised delivery range is invalid");
        }
    }
    if (reputation.initial < 0 || reputation.decrement < 0) {
        invalid("reputation parameters must be non-negative");
    }
    GasSchedule defaults = GasSchedule::defaults();
    for (const auto& [op, _] : gas_overrides) {
        if (!defaults.contains(op)) invalid("gas override for unknown operation '" + op + "'");
    }
    if (max_ticks < 1) invalid("max_ticks must be at least 1");
}

EngineParams ScenarioConfig::engine_params() const {
    EngineParams params;
    params.caps = caps;
    params.penalties = penalties;
    params.reputation = reputation;
    params.gas_schedule = GasSchedule::defaults();
    for (const auto& [op, cost] : gas_overrides) params.gas_schedule.set(op, {cost, cost});
    for (std::uint64_t id = 1; id <= customers.count; ++id) {
        params.funding.emplace_back(actor_address(ActorKind::Customer, id),
                                    customers.initial_balance);
    }
    for (std::uint64_t id = 1; id <= restaurants.count; ++id) {
        params.funding.emplace_back(actor_address(ActorKind::Restaurant, id),
                                    restaurants.initial_balance);
    }
    for (std::uint64_t id = 1; id <= deliverymen.count; ++id) {
        params.funding.emplace_back(actor_address(ActorKind::Deliveryman, id),
                                    deliverymen.initial_balance);
    }
    return params;
}

std::vector<PlannedOrder> ScenarioConfig::full_plan() const {
    std::vector<PlannedOrder> plan = orders;
    if (random_orders && random_orders->count > 0) {
        Rng rng(seed);
        for (std::uint64_t i = 0; i < random_orders->count; ++i) {
            PlannedOrder o;
            o.tick = rng.range(random_orders->first_tick, random_orders->last_tick);
            o.customer_id = rng.range(1, customers.count);
            o.restaurant_id = rng.range(1, restaurants.count);
            const auto& menu = menus[o.restaurant_id - 1];
            std::uint64_t picks = rng.range(1, std::min<std::uint64_t>(3, menu.size()));
            std::set<std::uint64_t> chosen;
            while (chosen.size() < picks) {
                chosen.insert(menu[rng.below(menu.size())].food_id);
            }
            o.items.assign(chosen.begin(), chosen.end());
            o.delivery_fee = rng.below(random_orders->max_delivery_fee + 1);
            o.promised_delivery_time =
                rng.range(random_orders->min_promised_delivery, random_orders->max_promised_delivery);
            plan.push_back(std::move(o));
        }
    }
    std::stable_sort(plan.begin(), plan.end(),
                     [](const PlannedOrder& a, const PlannedOrder& b) { return a.tick < b.tick; });
    return plan;
}

ScenarioConfig scenario_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) invalid("config is not a JSON object");

    ScenarioConfig config;
    config.name = j.value("name", std::string("scenario"));
    config.seed = get_u64(j, "seed", 0);
    if (j.contains("caps")) {
        config.caps.restaurant_max_active = get_u64(j["caps"], "restaurant_max_active", 5);
        config.caps.deliveryman_max_active = get_u64(j["caps"], "deliveryman_max_active", 3);
    }
    if (j.contains("penalties")) {
        config.penalties.food_pct = get_u64(j["penalties"], "food_pct", 10);
        config.penalties.delivery_pct = get_u64(j["penalties"], "delivery_pct", 5);
    }
    if (j.contains("reputation")) {
        config.reputation.initial =
            static_cast<std::int64_t>(get_u64(j["reputation"], "initial", 100));
        config.reputation.decrement =
            static_cast<std::int64_t>(get_u64(j["reputation"], "decrement", 1));
    }
    if (j.contains("gas_overrides")) {
        if (!j["gas_overrides"].is_object()) invalid("gas_overrides must be an object");
        for (const auto& [op, v] : j["gas_overrides"].items()) {
            if (!v.is_number_unsigned()) invalid("gas override for '" + op + "' must be unsigned");
            config.gas_overrides.emplace_back(op, v.get<std::uint64_t>());
        }
    }
    for (const char* key : {"customers", "restaurants", "deliverymen"}) {
        if (!j.contains(key)) invalid(std::string("missing population '") + key + "'");
    }
    config.customers = parse_population(j["customers"], "customers");
    config.restaurants = parse_population(j["restaurants"], "restaurants");
    config.deliverymen = parse_population(j["deliverymen"], "deliverymen");

    if (j.contains("menus")) {
        if (!j["menus"].is_array()) invalid("menus must be an array");
        for (const auto& mj : j["menus"]) {
            if (!mj.is_array()) invalid("each menu must be an array");
            std::vector<MenuItem> menu;
            for (const auto& item : mj) {
                MenuItem m;
                m.food_id = get_u64(item, "food_id", 0);
                m.price = get_u64(item, "price", 0);
                m.prep_time = get_u64(item, "prep_time", 1);
                menu.push_back(m);
            }
            config.menus.push_back(std::move(menu));
        }
    }
    if (j.contains("orders")) {
        if (!j["orders"].is_array()) invalid("orders must be an array");
        for (const auto& oj : j["orders"]) {
            PlannedOrder o;
            o.tick = get_u64(oj, "tick", 0);
            o.customer_id = get_u64(oj, "customer", 0);
            o.restaurant_id = get_u64(oj, "restaurant", 0);
            if (!oj.contains("items") || !oj["items"].is_array()) invalid("order missing items");
            for (const auto& it : oj["items"]) {
                if (!it.is_number_unsigned()) invalid("order items must be unsigned integers");
                o.items.push_back(it.get<std::uint64_t>());
            }
            o.delivery_fee = get_u64(oj, "delivery_fee", 0);
            o.promised_delivery_time = get_u64(oj, "promised_delivery_time", 1);
            o.loc_x = get_u64(oj, "loc_x", 0);
            o.loc_y = get_u64(oj, "loc_y", 0);
            config.orders.push_back(std::move(o));
        }
    }
    if (j.contains("random_orders") && !j["random_orders"].is_null()) {
        const json& rj = j["random_orders"];
        RandomOrderSpec spec;
        spec.count = get_u64(rj, "count", 0);
        spec.first_tick = get_u64(rj, "first_tick", 0);
        spec.last_tick = get_u64(rj, "last_tick", 0);
        spec.max_delivery_fee = get_u64(rj, "max_delivery_fee", 100);
        spec.min_promised_delivery = get_u64(rj, "min_promised_delivery", 1);
        spec.max_promised_delivery = get_u64(rj, "max_promised_delivery", 5);
        config.random_orders = spec;
    }
    config.max_ticks = get_u64(j, "max_ticks", 10'000);

    config.validate();
    return config;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) invalid("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str());
}

std::string scenario_to_json_text(const ScenarioConfig& config) {
    json j;
    j["name"] = config.name;
    j["seed"] = config.seed;
    j["caps"] = {{"restaurant_max_active", config.caps.restaurant_max_active},
                 {"deliveryman_max_active", config.caps.deliveryman_max_active}};
    j["penalties"] = {{"food_pct", config.penalties.food_pct},
                      {"delivery_pct", config.penalties.delivery_pct}};
    j["reputation"] = {{"initial", static_cast<std::uint64_t>(config.reputation.initial)},
                       {"decrement", static_cast<std::uint64_t>(config.reputation.decrement)}};
    if (!config.gas_overrides.empty()) {
        json overrides = json::object();
        for (const auto& [op, cost] : config.gas_overrides) overrides[op] = cost;
        j["gas_overrides"] = std::move(overrides);
    }
    auto population_json = [](const PopulationSpec& spec) {
        json pj;
        pj["count"] = spec.count;
        pj["initial_balance"] = spec.initial_balance;
        pj["policy"] = policy_to_json(spec.policy);
        return pj;
    };
    j["customers"] = population_json(config.customers);
    j["restaurants"] = population_json(config.restaurants);
    j["deliverymen"] = population_json(config.deliverymen);
    json menus = json::array();
    for (const auto& menu : config.menus) {
        json mj = json::array();
        for (const MenuItem& m : menu) {
            mj.push_back({{"food_id", m.food_id}, {"price", m.price}, {"prep_time", m.prep_time}});
        }
        menus.push_back(std::move(mj));
    }
    j["menus"] = std::move(menus);
    json orders = json::array();
    for (const PlannedOrder& o : config.orders) {
        json oj;
        oj["tick"] = o.tick;
        oj["customer"] = o.customer_id;
        oj["restaurant"] = o.restaurant_id;
        oj["items"] = o.items;
        oj["delivery_fee"] = o.delivery_fee;
        oj["promised_delivery_time"] = o.promised_delivery_time;
        if (o.loc_x != 0) oj["loc_x"] = o.loc_x;
        if (o.loc_y != 0) oj["loc_y"] = o.loc_y;
        orders.push_back(std::move(oj));
    }
    j["orders"] = std::move(orders);
    if (config.random_orders) {
        const RandomOrderSpec& r = *config.random_orders;
        j["random_orders"] = {{"count", r.count},
                              {"first_tick", r.first_tick},
                              {"last_tick", r.last_tick},
                              {"max_delivery_fee", r.max_delivery_fee},
                              {"min_promised_delivery", r.min_promised_delivery},
                              {"max_promised_delivery", r.max_promised_delivery}};
    }
    j["max_ticks"] = config.max_ticks;
    return j.dump(2) + "\n";
}

}  // namespace delivchain
