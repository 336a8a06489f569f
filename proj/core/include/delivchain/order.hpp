#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delivchain/types.hpp"

namespace delivchain {

// Lifecycle codes advance one at a time, never skip, never regress.
enum class OrderStatus : std::uint8_t {
    Placed = 0,
    AcceptedByRestaurant = 1,
    DeliveryAssigned = 2,
    Prepared = 3,
    WithDeliveryman = 4,
    ReceivedByCustomer = 5,
};

const char* order_status_str(OrderStatus status);

struct Order {
    std::uint64_t order_id = 0;
    Digest order_hash{};
    Address customer{};
    std::uint64_t restaurant_id = 0;
    std::optional<Address> deliveryman;
    std::vector<std::uint64_t> food_items;
    Money food_cost = 0;
    Money delivery_fee = 0;
    Tick promised_making_time = 0;  // fixed at acceptance: max prep_time of the items
    Tick promised_delivery_time = 0;

    Tick order_placing_time = 0;
    std::optional<Tick> order_receive_time;   // making starts
    std::optional<Tick> order_delivery_time;  // handover to the deliveryman
    std::optional<Tick> delivery_start_time;  // same instant as the handover
    std::optional<Tick> arrival_time;         // customer confirms

    OrderStatus status = OrderStatus::Placed;
    Money escrow = 0;
    bool deliver_logged = false;  // parcel-info record written, at most once
    std::optional<Tick> deliver_logged_time;
    bool food_fee_paid = false;
    bool delivery_fee_paid = false;

    // Inert location metadata; stored and dumped, never interpreted.
    std::uint64_t loc_x = 0;
    std::uint64_t loc_y = 0;
};

}  // namespace delivchain
