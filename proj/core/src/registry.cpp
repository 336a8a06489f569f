#include "delivchain/registry.hpp"

#include <algorithm>
#include <set>

#include "delivchain/errors.hpp"

namespace delivchain {

const char* actor_kind_str(ActorKind kind) {
    switch (kind) {
        case ActorKind::Customer: return "customer";
        case ActorKind::Restaurant: return "restaurant";
        case ActorKind::Deliveryman: return "deliveryman";
    }
    return "customer";
}

std::uint64_t Registry::add(const Address& address, ActorKind kind, std::vector<MenuItem> menu) {
    if (actors_.count(address)) {
        throw ContractError(ErrorCode::DuplicateAddress, to_hex(address));
    }
    std::uint64_t* counter = nullptr;
    switch (kind) {
        case ActorKind::Customer: counter = &customer_count_; break;
        case ActorKind::Restaurant: counter = &restaurant_count_; break;
        case ActorKind::Deliveryman: counter = &deliveryman_count_; break;
    }
    ActorRecord rec;
    rec.address = address;
    rec.kind = kind;
    rec.id = ++*counter;
    rec.reputation = initial_reputation_;
    rec.menu = std::move(menu);
    actors_.emplace(address, rec);
    by_id_.emplace(std::make_pair(static_cast<int>(kind), rec.id), address);
    return rec.id;
}

std::uint64_t Registry::register_customer(const Address& address) {
    return add(address, ActorKind::Customer, {});
}

std::uint64_t Registry::register_restaurant(const Address& address, std::vector<MenuItem> menu) {
    if (actors_.count(address)) {
        throw ContractError(ErrorCode::DuplicateAddress, to_hex(address));
    }
    if (menu.empty()) throw ContractError(ErrorCode::EmptyMenu);
    std::set<std::uint64_t> seen;
    for (const MenuItem& item : menu) {
        if (!seen.insert(item.food_id).second) {
            throw ContractError(ErrorCode::DuplicateFoodId, std::to_string(item.food_id));
        }
        if (item.prep_time < 1) {
            throw ContractError(ErrorCode::InvalidPrepTime, std::to_string(item.food_id));
        }
    }
    return add(address, ActorKind::Restaurant, std::move(menu));
}

std::uint64_t Registry::register_deliveryman(const Address& address) {
    return add(address, ActorKind::Deliveryman, {});
}

const ActorRecord& Registry::restaurant_by_id(std::uint64_t id) const {
    auto it = by_id_.find({static_cast<int>(ActorKind::Restaurant), id});
    if (it == by_id_.end()) {
        throw ContractError(ErrorCode::UnknownRestaurant, std::to_string(id));
    }
    return actors_.at(it->second);
}

bool Registry::food_available(std::uint64_t restaurant_id,
                              const std::vector<std::uint64_t>& food_ids) const {
    const ActorRecord& rec = restaurant_by_id(restaurant_id);
    return std::all_of(food_ids.begin(), food_ids.end(), [&](std::uint64_t id) {
        return std::any_of(rec.menu.begin(), rec.menu.end(),
                           [&](const MenuItem& m) { return m.food_id == id; });
    });
}

Tick Registry::promised_making_time(std::uint64_t restaurant_id,
                                    const std::vector<std::uint64_t>& food_ids) const {
    const ActorRecord& rec = restaurant_by_id(restaurant_id);
    Tick promise = 0;
    for (std::uint64_t id : food_ids) {
        for (const MenuItem& m : rec.menu) {
            if (m.food_id == id) promise = std::max(promise, m.prep_time);
        }
    }
    return promise;
}

Money Registry::menu_cost(std::uint64_t restaurant_id,
                          const std::vector<std::uint64_t>& food_ids) const {
    const ActorRecord& rec = restaurant_by_id(restaurant_id);
    Money total = 0;
    for (std::uint64_t id : food_ids) {
        for (const MenuItem& m : rec.menu) {
            if (m.food_id == id) total += m.price;
        }
    }
    return total;
}

const ActorRecord* Registry::find(const Address& address) const {
    auto it = actors_.find(address);
    return it == actors_.end() ? nullptr : &it->second;
}

ActorRecord* Registry::find(const Address& address) {
    auto it = actors_.find(address);
    return it == actors_.end() ? nullptr : &it->second;
}

const ActorRecord* Registry::find_by_id(ActorKind kind, std::uint64_t id) const {
    auto it = by_id_.find({static_cast<int>(kind), id});
    return it == by_id_.end() ? nullptr : &actors_.at(it->second);
}

std::uint64_t Registry::count(ActorKind kind) const {
    switch (kind) {
        case ActorKind::Customer: return customer_count_;
        case ActorKind::Restaurant: return restaurant_count_;
        case ActorKind::Deliveryman: return deliveryman_count_;
    }
    return 0;
}

}  // namespace delivchain
