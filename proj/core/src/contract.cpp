#include "delivchain/contract.hpp"

#include <algorithm>
#include <cstdlib>

#include "delivchain/errors.hpp"
#include "delivchain/sha256.hpp"
#include "delivchain/wire.hpp"

namespace delivchain {

namespace {

const char* const kRequiredOps[] = {
    "bootstrap",      "register_customer", "register_restaurant", "register_deliveryman",
    "place_order",    "accept_order",      "accept_package",      "food_making",
    "collect_food",   "food_fee_collecting", "deliver_food",      "food_arrival",
    "collect_delivery_fee",
};

std::vector<std::uint8_t> encode_ack() {
    wire::Encoder enc;
    enc.put_u64(1);
    return enc.take();
}

std::vector<std::uint8_t> encode_id(std::uint64_t id) {
    wire::Encoder enc;
    enc.put_u64(id);
    return enc.take();
}

std::vector<std::uint8_t> encode_receipt(const SettlementReceipt& r) {
    wire::Encoder enc;
    enc.put_u64(r.order_id);
    enc.put_address(r.payee);
    enc.put_string(payee_role_str(r.role));
    enc.put_u64(r.gross);
    enc.put_u64(r.penalty_pct);
    enc.put_u64(r.penalty_amount);
    enc.put_u64(r.net);
    enc.put_u64(r.refund_to_customer);
    enc.put_u64(r.violated ? 1 : 0);
    return enc.take();
}

EventRecord order_update(std::uint64_t order_id, OrderStatus status) {
    EventRecord ev;
    ev.name = EventName::OrderUpdate;
    ev.order_id = order_id;
    ev.status = static_cast<std::uint8_t>(status);
    return ev;
}

EventRecord message_event(std::uint64_t order_id, std::string msg) {
    EventRecord ev;
    ev.name = EventName::Message;
    ev.order_id = order_id;
    ev.msg = std::move(msg);
    return ev;
}

EventRecord warning_event(std::uint64_t order_id, std::string msg) {
    EventRecord ev;
    ev.name = EventName::Warning;
    ev.order_id = order_id;
    ev.msg = std::move(msg);
    return ev;
}

}  // namespace

void Contract::bootstrap(const EngineParams& params, Tick now) {
    if (bootstrapped_) throw std::logic_error("engine already bootstrapped");
    for (const char* op : kRequiredOps) {
        if (!params.gas_schedule.contains(op)) {
            throw ContractError(ErrorCode::InvalidConfig,
                                std::string("gas schedule missing ") + op);
        }
    }
    if (params.reputation.initial < 0 || params.reputation.decrement < 0) {
        throw ContractError(ErrorCode::InvalidConfig, "negative reputation parameter");
    }

    params_ = params;
    registry_ = Registry(params.caps, params.reputation.initial);
    balances_ = BalanceSheet();
    for (const auto& [address, amount] : params.funding) balances_.fund(address, amount);
    bootstrapped_ = true;

    wire::Encoder enc;
    enc.put_u64(params.caps.restaurant_max_active);
    enc.put_u64(params.caps.deliveryman_max_active);
    enc.put_u64(params.penalties.food_pct);
    enc.put_u64(params.penalties.delivery_pct);
    enc.put_u64(static_cast<std::uint64_t>(params.reputation.initial));
    enc.put_u64(static_cast<std::uint64_t>(params.reputation.decrement));
    enc.put_u64(params.gas_schedule.entries().size());
    for (const auto& [name, cost] : params.gas_schedule.entries()) {
        enc.put_string(name);
        enc.put_u64(cost.transaction_cost);
        enc.put_u64(cost.execution_cost);
    }
    enc.put_u64(params.funding.size());
    for (const auto& [address, amount] : params.funding) {
        enc.put_address(address);
        enc.put_u64(amount);
    }

    TxDraft draft;
    draft.caller = kZeroAddress;
    draft.operation = "bootstrap";
    draft.input = enc.take();
    commit(std::move(draft), now);
}

void Contract::commit(TxDraft draft, Tick now) {
    Transaction tx;
    tx.caller = draft.caller;
    tx.operation = std::move(draft.operation);
    tx.input = std::move(draft.input);
    tx.output = std::move(draft.output);
    tx.events = std::move(draft.events);
    tx.gas_charged = charge_gas(draft.caller, tx.operation);
    std::vector<Transaction> txs;
    txs.push_back(std::move(tx));
    ledger_.append_block(std::move(txs), now);
}

namespace {
void require_engine(bool bootstrapped) {
    if (!bootstrapped) throw std::logic_error("engine not bootstrapped");
}
}  // namespace

// Timestamp regressions are rejected before any state changes so that the
// ledger append inside commit() cannot fail halfway.
#define DELIVCHAIN_REQUIRE_TIME(now)                                              \
    do {                                                                          \
        require_engine(bootstrapped_);                                            \
        if (!ledger_.empty() && (now) < ledger_.head().timestamp) {               \
            throw ContractError(ErrorCode::TimestampRegression,                   \
                                "tick " + std::to_string(now) + " before head");  \
        }                                                                         \
    } while (0)

std::uint64_t Contract::register_customer(const Address& address, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    std::uint64_t id = registry_.register_customer(address);

    TxDraft draft;
    draft.caller = address;
    draft.operation = "register_customer";
    draft.output = encode_id(id);
    commit(std::move(draft), now);
    return id;
}

std::uint64_t Contract::register_restaurant(const Address& address, std::vector<MenuItem> menu,
                                            Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    wire::Encoder enc;
    enc.put_u64(menu.size());
    for (const MenuItem& item : menu) {
        enc.put_u64(item.food_id);
        enc.put_u64(item.price);
        enc.put_u64(item.prep_time);
    }
    std::uint64_t id = registry_.register_restaurant(address, std::move(menu));

    TxDraft draft;
    draft.caller = address;
    draft.operation = "register_restaurant";
    draft.input = enc.take();
    draft.output = encode_id(id);
    commit(std::move(draft), now);
    return id;
}

std::uint64_t Contract::register_deliveryman(const Address& address, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    std::uint64_t id = registry_.register_deliveryman(address);

    TxDraft draft;
    draft.caller = address;
    draft.operation = "register_deliveryman";
    draft.output = encode_id(id);
    commit(std::move(draft), now);
    return id;
}

bool Contract::food_available(std::uint64_t restaurant_id,
                              const std::vector<std::uint64_t>& food_ids) const {
    return registry_.food_available(restaurant_id, food_ids);
}

Order Contract::place_order(const Address& customer, std::uint64_t restaurant_id,
                            std::vector<std::uint64_t> food_items, Money delivery_fee,
                            Tick promised_delivery_time, Tick now, std::uint64_t loc_x,
                            std::uint64_t loc_y) {
    DELIVCHAIN_REQUIRE_TIME(now);
    const ActorRecord* cust = registry_.find(customer);
    if (!cust || cust->kind != ActorKind::Customer) {
        throw ContractError(ErrorCode::UnknownCustomer, to_hex(customer));
    }
    if (!registry_.food_available(restaurant_id, food_items)) {
        throw ContractError(ErrorCode::FoodUnavailable);
    }
    Money food_cost = registry_.menu_cost(restaurant_id, food_items);
    Money total = food_cost + delivery_fee;
    if (!balances_.can_debit(customer, total)) {
        throw ContractError(ErrorCode::InsufficientFunds,
                            "need " + std::to_string(total) + ", have " +
                                std::to_string(balances_.balance(customer)));
    }

    Order order;
    order.order_id = next_order_id_++;
    order.customer = customer;
    order.restaurant_id = restaurant_id;
    order.food_items = food_items;
    order.food_cost = food_cost;
    order.delivery_fee = delivery_fee;
    order.promised_delivery_time = promised_delivery_time;
    order.order_placing_time = now;
    order.status = OrderStatus::Placed;
    order.escrow = total;
    order.loc_x = loc_x;
    order.loc_y = loc_y;

    wire::Encoder hash_enc;
    hash_enc.put_address(customer);
    hash_enc.put_u64(restaurant_id);
    hash_enc.put_u64_list(food_items);
    hash_enc.put_u64(now);
    hash_enc.put_u64(order.order_id);
    order.order_hash = sha256(hash_enc.bytes());

    balances_.debit(customer, total);
    orders_.emplace(order.order_id, order);

    wire::Encoder input;
    input.put_u64(restaurant_id);
    input.put_u64_list(food_items);
    input.put_u64(delivery_fee);
    input.put_u64(promised_delivery_time);
    input.put_u64(loc_x);
    input.put_u64(loc_y);

    wire::Encoder output;
    output.put_u64(order.order_id);
    output.put_digest(order.order_hash);

    TxDraft draft;
    draft.caller = customer;
    draft.operation = "place_order";
    draft.input = input.take();
    draft.output = output.take();
    draft.events.push_back(order_update(order.order_id, OrderStatus::Placed));
    commit(std::move(draft), now);
    return order;
}

Order& Contract::order_mut(std::uint64_t order_id) {
    auto it = orders_.find(order_id);
    if (it == orders_.end()) throw ContractError(ErrorCode::UnknownOrder, std::to_string(order_id));
    return it->second;
}

const Order& Contract::order(std::uint64_t order_id) const {
    auto it = orders_.find(order_id);
    if (it == orders_.end()) throw ContractError(ErrorCode::UnknownOrder, std::to_string(order_id));
    return it->second;
}

const Order* Contract::find_order(std::uint64_t order_id) const {
    auto it = orders_.find(order_id);
    return it == orders_.end() ? nullptr : &it->second;
}

void Contract::accept_order(const Address& restaurant, std::uint64_t order_id, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status != OrderStatus::Placed) throw ContractError(ErrorCode::WrongStatus);
    ActorRecord* rec = registry_.find(restaurant);
    if (!rec || rec->kind != ActorKind::Restaurant || rec->id != order.restaurant_id) {
        throw ContractError(ErrorCode::NotOrderOwner);
    }
    if (rec->active_order_count >= registry_.caps().restaurant_max_active) {
        throw ContractError(ErrorCode::RestaurantAtCapacity);
    }

    order.status = OrderStatus::AcceptedByRestaurant;
    order.promised_making_time = registry_.promised_making_time(order.restaurant_id, order.food_items);
    rec->active_order_count++;

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = restaurant;
    draft.operation = "accept_order";
    draft.input = input.take();
    draft.output = encode_ack();
    draft.events.push_back(order_update(order_id, OrderStatus::AcceptedByRestaurant));
    draft.events.push_back(message_event(order_id, "Your order has been placed"));
    commit(std::move(draft), now);
}

void Contract::accept_package(const Address& deliveryman, std::uint64_t order_id, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status != OrderStatus::AcceptedByRestaurant) {
        throw ContractError(ErrorCode::WrongStatus);
    }
    ActorRecord* rec = registry_.find(deliveryman);
    if (!rec || rec->kind != ActorKind::Deliveryman) {
        throw ContractError(ErrorCode::UnknownDeliveryman, to_hex(deliveryman));
    }
    if (rec->active_order_count >= registry_.caps().deliveryman_max_active) {
        throw ContractError(ErrorCode::DeliverymanAtCapacity);
    }

    order.status = OrderStatus::DeliveryAssigned;
    order.deliveryman = deliveryman;
    rec->active_order_count++;

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = deliveryman;
    draft.operation = "accept_package";
    draft.input = input.take();
    draft.output = encode_ack();
    draft.events.push_back(order_update(order_id, OrderStatus::DeliveryAssigned));
    commit(std::move(draft), now);
}

void Contract::food_making(const Address& restaurant, std::uint64_t order_id, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status != OrderStatus::DeliveryAssigned) throw ContractError(ErrorCode::WrongStatus);
    const ActorRecord* rec = registry_.find(restaurant);
    if (!rec || rec->kind != ActorKind::Restaurant || rec->id != order.restaurant_id) {
        throw ContractError(ErrorCode::NotOrderOwner);
    }

    order.status = OrderStatus::Prepared;
    order.order_receive_time = now;

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = restaurant;
    draft.operation = "food_making";
    draft.input = input.take();
    draft.output = encode_ack();
    draft.events.push_back(order_update(order_id, OrderStatus::Prepared));
    commit(std::move(draft), now);
}

void Contract::collect_food(const Address& deliveryman, std::uint64_t order_id, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status != OrderStatus::Prepared) throw ContractError(ErrorCode::WrongStatus);
    if (!order.deliveryman || *order.deliveryman != deliveryman) {
        throw ContractError(ErrorCode::NotAssignedDeliveryman);
    }

    order.status = OrderStatus::WithDeliveryman;
    // The handover instant feeds both violation checks: it ends the making
    // window and starts the delivery window.
    order.order_delivery_time = now;
    order.delivery_start_time = now;

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = deliveryman;
    draft.operation = "collect_food";
    draft.input = input.take();
    draft.output = encode_ack();
    draft.events.push_back(order_update(order_id, OrderStatus::WithDeliveryman));
    draft.events.push_back(
        message_event(order_id, "Your package has been received by the deliveryman"));
    commit(std::move(draft), now);
}

void Contract::deliver_food(const Address& deliveryman, std::uint64_t order_id, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status != OrderStatus::WithDeliveryman || order.deliver_logged) {
        throw ContractError(ErrorCode::WrongStatus);
    }
    if (!order.deliveryman || *order.deliveryman != deliveryman) {
        throw ContractError(ErrorCode::NotAssignedDeliveryman);
    }

    // Parcel-info record only; the status moves when the customer confirms.
    order.deliver_logged = true;
    order.deliver_logged_time = now;

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = deliveryman;
    draft.operation = "deliver_food";
    draft.input = input.take();
    draft.output = encode_ack();
    commit(std::move(draft), now);
}

void Contract::food_arrival(const Address& customer, std::uint64_t order_id, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status != OrderStatus::WithDeliveryman) throw ContractError(ErrorCode::WrongStatus);
    if (order.customer != customer) throw ContractError(ErrorCode::NotOrderOwner);
    if (!order.deliver_logged) throw ContractError(ErrorCode::NotYetDelivered);

    order.status = OrderStatus::ReceivedByCustomer;
    order.arrival_time = now;
    if (ActorRecord* rest = registry_.find(
            registry_.find_by_id(ActorKind::Restaurant, order.restaurant_id)->address);
        rest != nullptr) {
        rest->active_order_count--;
    }
    if (ActorRecord* rider = registry_.find(*order.deliveryman); rider != nullptr) {
        rider->active_order_count--;
    }

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = customer;
    draft.operation = "food_arrival";
    draft.input = input.take();
    draft.output = encode_ack();
    draft.events.push_back(order_update(order_id, OrderStatus::ReceivedByCustomer));
    draft.events.push_back(message_event(order_id, "Order received by the customer"));
    commit(std::move(draft), now);
}

SettlementReceipt Contract::settle(Order& order, const Address& payee, PayeeRole role,
                                   bool violated, Money gross, std::uint64_t pct,
                                   std::vector<EventRecord>& events) {
    SettlementReceipt receipt;
    receipt.order_id = order.order_id;
    receipt.payee = payee;
    receipt.role = role;
    receipt.gross = gross;
    receipt.violated = violated;
    receipt.penalty_pct = violated ? pct : 0;
    receipt.penalty_amount = penalty_amount(gross, receipt.penalty_pct);
    receipt.net = gross - receipt.penalty_amount;
    receipt.refund_to_customer = receipt.penalty_amount;

    if (order.escrow < gross) std::abort();  // exactly-once flags guarantee coverage
    order.escrow -= gross;
    balances_.credit(payee, receipt.net);
    balances_.credit(order.customer, receipt.refund_to_customer);

    if (violated) {
        std::string msg = role == PayeeRole::Restaurant ? food_warning_message(pct)
                                                        : delivery_warning_message(pct);
        events.push_back(warning_event(order.order_id, std::move(msg)));
        apply_reputation_penalty_unlogged(payee);
    }
    receipts_.push_back(receipt);
    return receipt;
}

SettlementReceipt Contract::food_fee_collecting(const Address& restaurant, std::uint64_t order_id,
                                                Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status < OrderStatus::WithDeliveryman) throw ContractError(ErrorCode::WrongStatus);
    const ActorRecord* rec = registry_.find(restaurant);
    if (!rec || rec->kind != ActorKind::Restaurant || rec->id != order.restaurant_id) {
        throw ContractError(ErrorCode::NotOrderOwner);
    }
    if (order.food_fee_paid) throw ContractError(ErrorCode::AlreadyCollected);

    Tick elapsed = *order.order_delivery_time - order.order_placing_time;
    bool violated = time_violated(elapsed, order.promised_making_time);

    std::vector<EventRecord> events;
    SettlementReceipt receipt = settle(order, restaurant, PayeeRole::Restaurant, violated,
                                       order.food_cost, params_.penalties.food_pct, events);
    order.food_fee_paid = true;

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = restaurant;
    draft.operation = "food_fee_collecting";
    draft.input = input.take();
    draft.output = encode_receipt(receipt);
    draft.events = std::move(events);
    commit(std::move(draft), now);
    return receipt;
}

SettlementReceipt Contract::collect_delivery_fee(const Address& deliveryman,
                                                 std::uint64_t order_id, Tick now) {
    DELIVCHAIN_REQUIRE_TIME(now);
    Order& order = order_mut(order_id);
    if (order.status != OrderStatus::ReceivedByCustomer) {
        throw ContractError(ErrorCode::WrongStatus);
    }
    if (!order.deliveryman || *order.deliveryman != deliveryman) {
        throw ContractError(ErrorCode::NotAssignedDeliveryman);
    }
    if (order.delivery_fee_paid) throw ContractError(ErrorCode::AlreadyCollected);

    Tick elapsed = *order.arrival_time - *order.delivery_start_time;
    bool violated = time_violated(elapsed, order.promised_delivery_time);

    std::vector<EventRecord> events;
    SettlementReceipt receipt = settle(order, deliveryman, PayeeRole::Deliveryman, violated,
                                       order.delivery_fee, params_.penalties.delivery_pct, events);
    order.delivery_fee_paid = true;

    wire::Encoder input;
    input.put_u64(order_id);
    TxDraft draft;
    draft.caller = deliveryman;
    draft.operation = "collect_delivery_fee";
    draft.input = input.take();
    draft.output = encode_receipt(receipt);
    draft.events = std::move(events);
    commit(std::move(draft), now);
    return receipt;
}

Gas Contract::charge_gas(const Address& caller, const std::string& operation) {
    return gas_.charge(caller, operation, params_.gas_schedule);
}

std::int64_t Contract::apply_reputation_penalty(const Address& address) {
    if (!registry_.find(address)) throw ContractError(ErrorCode::UnknownActor, to_hex(address));
    return apply_reputation_penalty_unlogged(address);
}

std::int64_t Contract::apply_reputation_penalty_unlogged(const Address& address) {
    ActorRecord* rec = registry_.find(address);
    rec->reputation = std::max<std::int64_t>(0, rec->reputation - params_.reputation.decrement);
    return rec->reputation;
}

std::int64_t Contract::reputation(const Address& address) const {
    const ActorRecord* rec = registry_.find(address);
    if (!rec) throw ContractError(ErrorCode::UnknownActor, to_hex(address));
    return rec->reputation;
}

Money Contract::escrow_total() const {
    Money total = 0;
    for (const auto& [_, order] : orders_) total += order.escrow;
    return total;
}

}  // namespace delivchain
