#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "delivchain/types.hpp"

namespace delivchain {

enum class ActorKind { Customer, Restaurant, Deliveryman };

const char* actor_kind_str(ActorKind kind);

struct MenuItem {
    std::uint64_t food_id = 0;
    Money price = 0;
    Tick prep_time = 1;  // declared making time for this dish, in ticks

    bool operator==(const MenuItem&) const = default;
};

// Registered identity. Menus are immutable after registration; ids are dense
// per kind (1..N).
struct ActorRecord {
    Address address{};
    ActorKind kind = ActorKind::Customer;
    std::uint64_t id = 0;
    std::int64_t reputation = 0;
    std::vector<MenuItem> menu;  // restaurants only
    std::uint64_t active_order_count = 0;
};

struct RegistryCaps {
    std::uint64_t restaurant_max_active = 5;
    std::uint64_t deliveryman_max_active = 3;
};

class Registry {
public:
    Registry() = default;
    Registry(RegistryCaps caps, std::int64_t initial_reputation)
        : caps_(caps), initial_reputation_(initial_reputation) {}

    std::uint64_t register_customer(const Address& address);
    std::uint64_t register_restaurant(const Address& address, std::vector<MenuItem> menu);
    std::uint64_t register_deliveryman(const Address& address);

    // True iff every requested food id is on the restaurant's menu.
    // Throws UnknownRestaurant.
    bool food_available(std::uint64_t restaurant_id, const std::vector<std::uint64_t>& food_ids) const;

    bool is_registered(const Address& address) const { return actors_.count(address) > 0; }
    const ActorRecord* find(const Address& address) const;
    ActorRecord* find(const Address& address);
    const ActorRecord* find_by_id(ActorKind kind, std::uint64_t id) const;

    // Max prep_time over the listed items; the order's promised making time.
    Tick promised_making_time(std::uint64_t restaurant_id,
                              const std::vector<std::uint64_t>& food_ids) const;
    Money menu_cost(std::uint64_t restaurant_id, const std::vector<std::uint64_t>& food_ids) const;

    std::uint64_t count(ActorKind kind) const;
    const RegistryCaps& caps() const { return caps_; }
    std::int64_t initial_reputation() const { return initial_reputation_; }

    // Deterministic iteration: addresses are ordered byte-wise.
    const std::map<Address, ActorRecord>& actors() const { return actors_; }

private:
    const ActorRecord& restaurant_by_id(std::uint64_t id) const;
    std::uint64_t add(const Address& address, ActorKind kind, std::vector<MenuItem> menu);

    RegistryCaps caps_{};
    std::int64_t initial_reputation_ = 100;
    std::map<Address, ActorRecord> actors_;
    std::map<std::pair<int, std::uint64_t>, Address> by_id_;  // (kind, id) -> address
    std::uint64_t customer_count_ = 0;
    std::uint64_t restaurant_count_ = 0;
    std::uint64_t deliveryman_count_ = 0;
};

}  // namespace delivchain
