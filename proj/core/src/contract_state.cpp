// Replay dispatch, state digest and invariant sweep for Contract.
#include <map>

#include "delivchain/contract.hpp"
#include "delivchain/errors.hpp"
#include "delivchain/sha256.hpp"
#include "delivchain/wire.hpp"

namespace delivchain {

namespace {

[[noreturn]] void corrupt(const std::string& what) {
    throw ContractError(ErrorCode::CorruptDump, what);
}

EngineParams decode_bootstrap(const std::vector<std::uint8_t>& input) {
    wire::Decoder dec(input);
    EngineParams params;
    params.caps.restaurant_max_active = dec.get_u64();
    params.caps.deliveryman_max_active = dec.get_u64();
    params.penalties.food_pct = dec.get_u64();
    params.penalties.delivery_pct = dec.get_u64();
    params.reputation.initial = static_cast<std::int64_t>(dec.get_u64());
    params.reputation.decrement = static_cast<std::int64_t>(dec.get_u64());

    params.gas_schedule = GasSchedule();
    std::uint64_t schedule_size = dec.get_u64();
    for (std::uint64_t i = 0; i < schedule_size && !dec.failed(); ++i) {
        std::string name = dec.get_string();
        GasCost cost;
        cost.transaction_cost = dec.get_u64();
        cost.execution_cost = dec.get_u64();
        params.gas_schedule.set(name, cost);
    }

    std::uint64_t funded = dec.get_u64();
    for (std::uint64_t i = 0; i < funded && !dec.failed(); ++i) {
        Address address = dec.get_address();
        Money amount = dec.get_u64();
        params.funding.emplace_back(address, amount);
    }
    if (!dec.ok()) corrupt("bad bootstrap payload");
    return params;
}

}  // namespace

void Contract::apply_transaction(const Transaction& tx, Tick block_timestamp) {
    const Tick now = block_timestamp;
    const std::string& op = tx.operation;

    if (op == "bootstrap") {
        if (bootstrapped_) corrupt("duplicate bootstrap transaction");
        bootstrap(decode_bootstrap(tx.input), now);
        return;
    }
    if (!bootstrapped_) corrupt("first transaction is not a bootstrap");

    wire::Decoder dec(tx.input);
    if (op == "register_customer") {
        if (!dec.ok()) corrupt("unexpected register_customer payload");
        register_customer(tx.caller, now);
    } else if (op == "register_restaurant") {
        std::uint64_t n = dec.get_u64();
        std::vector<MenuItem> menu;
        for (std::uint64_t i = 0; i < n && !dec.failed(); ++i) {
            MenuItem item;
            item.food_id = dec.get_u64();
            item.price = dec.get_u64();
            item.prep_time = dec.get_u64();
            menu.push_back(item);
        }
        if (!dec.ok()) corrupt("bad register_restaurant payload");
        register_restaurant(tx.caller, std::move(menu), now);
    } else if (op == "register_deliveryman") {
        if (!dec.ok()) corrupt("unexpected register_deliveryman payload");
        register_deliveryman(tx.caller, now);
    } else if (op == "place_order") {
        std::uint64_t restaurant_id = dec.get_u64();
        std::vector<std::uint64_t> items = dec.get_u64_list();
        Money delivery_fee = dec.get_u64();
        Tick promised = dec.get_u64();
        std::uint64_t loc_x = dec.get_u64();
        std::uint64_t loc_y = dec.get_u64();
        if (!dec.ok()) corrupt("bad place_order payload");
        place_order(tx.caller, restaurant_id, std::move(items), delivery_fee, promised, now, loc_x,
                    loc_y);
    } else {
        std::uint64_t order_id = dec.get_u64();
        if (!dec.ok()) corrupt("bad " + op + " payload");
        if (op == "accept_order") {
            accept_order(tx.caller, order_id, now);
        } else if (op == "accept_package") {
            accept_package(tx.caller, order_id, now);
        } else if (op == "food_making") {
            food_making(tx.caller, order_id, now);
        } else if (op == "collect_food") {
            collect_food(tx.caller, order_id, now);
        } else if (op == "deliver_food") {
            deliver_food(tx.caller, order_id, now);
        } else if (op == "food_arrival") {
            food_arrival(tx.caller, order_id, now);
        } else if (op == "food_fee_collecting") {
            food_fee_collecting(tx.caller, order_id, now);
        } else if (op == "collect_delivery_fee") {
            collect_delivery_fee(tx.caller, order_id, now);
        } else {
            corrupt("unknown operation " + op);
        }
    }
}

Digest Contract::state_digest() const {
    wire::Encoder enc;

    enc.put_u64(registry_.actors().size());
    for (const auto& [address, rec] : registry_.actors()) {
        enc.put_address(address);
        enc.put_u64(static_cast<std::uint64_t>(rec.kind));
        enc.put_u64(rec.id);
        enc.put_u64(static_cast<std::uint64_t>(rec.reputation));
        enc.put_u64(rec.menu.size());
        for (const MenuItem& m : rec.menu) {
            enc.put_u64(m.food_id);
            enc.put_u64(m.price);
            enc.put_u64(m.prep_time);
        }
        enc.put_u64(rec.active_order_count);
    }

    enc.put_u64(balances_.balances().size());
    for (const auto& [address, amount] : balances_.balances()) {
        enc.put_address(address);
        enc.put_u64(amount);
    }

    enc.put_u64(orders_.size());
    for (const auto& [id, order] : orders_) {
        enc.put_u64(id);
        enc.put_digest(order.order_hash);
        enc.put_address(order.customer);
        enc.put_u64(order.restaurant_id);
        enc.put_u64(order.deliveryman.has_value() ? 1 : 0);
        if (order.deliveryman) enc.put_address(*order.deliveryman);
        enc.put_u64_list(order.food_items);
        enc.put_u64(order.food_cost);
        enc.put_u64(order.delivery_fee);
        enc.put_u64(order.promised_making_time);
        enc.put_u64(order.promised_delivery_time);
        enc.put_u64(order.order_placing_time);
        enc.put_optional_u64(order.order_receive_time);
        enc.put_optional_u64(order.order_delivery_time);
        enc.put_optional_u64(order.delivery_start_time);
        enc.put_optional_u64(order.arrival_time);
        enc.put_u64(static_cast<std::uint64_t>(order.status));
        enc.put_u64(order.escrow);
        enc.put_u64(order.deliver_logged ? 1 : 0);
        enc.put_optional_u64(order.deliver_logged_time);
        enc.put_u64(order.food_fee_paid ? 1 : 0);
        enc.put_u64(order.delivery_fee_paid ? 1 : 0);
        enc.put_u64(order.loc_x);
        enc.put_u64(order.loc_y);
    }

    enc.put_u64(receipts_.size());
    for (const SettlementReceipt& r : receipts_) {
        enc.put_u64(r.order_id);
        enc.put_address(r.payee);
        enc.put_u64(static_cast<std::uint64_t>(r.role));
        enc.put_u64(r.gross);
        enc.put_u64(r.penalty_pct);
        enc.put_u64(r.penalty_amount);
        enc.put_u64(r.net);
        enc.put_u64(r.refund_to_customer);
        enc.put_u64(r.violated ? 1 : 0);
    }

    enc.put_u64(gas_.total());
    enc.put_u64(gas_.per_actor().size());
    for (const auto& [address, amount] : gas_.per_actor()) {
        enc.put_address(address);
        enc.put_u64(amount);
    }
    enc.put_u64(gas_.per_operation().size());
    for (const auto& [op, amount] : gas_.per_operation()) {
        enc.put_string(op);
        enc.put_u64(amount);
    }

    enc.put_u64(ledger_.size());
    enc.put_digest(ledger_.head_hash());
    enc.put_u64(next_order_id_);
    return sha256(enc.bytes());
}

std::optional<std::string> Contract::check_invariants() const {
    Money circulating = balances_.total_balances() + escrow_total();
    if (circulating != balances_.total_funded()) {
        return "currency not conserved: " + std::to_string(circulating) + " circulating vs " +
               std::to_string(balances_.total_funded()) + " funded";
    }

    for (const auto& [id, order] : orders_) {
        Money expected_escrow = (order.food_fee_paid ? 0 : order.food_cost) +
                                (order.delivery_fee_paid ? 0 : order.delivery_fee);
        if (order.escrow != expected_escrow) {
            return "order " + std::to_string(id) + " escrow drift";
        }
        if (order.food_fee_paid && order.status < OrderStatus::WithDeliveryman) {
            return "order " + std::to_string(id) + " food fee paid before handover";
        }
        if (order.delivery_fee_paid && order.status != OrderStatus::ReceivedByCustomer) {
            return "order " + std::to_string(id) + " delivery fee paid before arrival";
        }
    }

    // Reputation must equal the warning count recorded on the chain.
    std::map<Address, std::int64_t> warning_counts;
    for (const Block& b : ledger_.blocks()) {
        for (const Transaction& tx : b.transactions) {
            for (const EventRecord& ev : tx.events) {
                if (ev.name == EventName::Warning) warning_counts[tx.caller]++;
            }
        }
    }
    for (const auto& [address, rec] : registry_.actors()) {
        std::int64_t expected = std::max<std::int64_t>(
            0, params_.reputation.initial -
                   params_.reputation.decrement * warning_counts[address]);
        if (rec.reputation != expected) {
            return "reputation drift for " + to_hex(address) + ": " +
                   std::to_string(rec.reputation) + " vs expected " + std::to_string(expected);
        }
        if (rec.kind == ActorKind::Restaurant &&
            rec.active_order_count > params_.caps.restaurant_max_active) {
            return "restaurant over capacity";
        }
        if (rec.kind == ActorKind::Deliveryman &&
            rec.active_order_count > params_.caps.deliveryman_max_active) {
            return "deliveryman over capacity";
        }
    }

    VerifyReport report = ledger_.verify_chain();
    if (!report.ok) {
        return "chain verification failed at block " +
               std::to_string(report.first_bad_index.value_or(0)) + ": " + report.reason;
    }
    return std::nullopt;
}

}  // namespace delivchain
