#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delivchain/gas.hpp"
#include "delivchain/ledger.hpp"
#include "delivchain/order.hpp"
#include "delivchain/registry.hpp"
#include "delivchain/settlement.hpp"
#include "delivchain/types.hpp"

namespace delivchain {

// Everything a fresh engine needs. Recorded in the genesis transaction so a
// dump alone reconstructs the run.
struct EngineParams {
    RegistryCaps caps;
    PenaltyParams penalties;
    ReputationParams reputation;
    GasSchedule gas_schedule = GasSchedule::defaults();
    std::vector<std::pair<Address, Money>> funding;  // initial balances, in order
};

// The order-lifecycle state machine plus registration, escrowed settlement,
// gas metering and the event ledger. All operations execute strictly
// serially; an accepted operation appends exactly one block holding exactly
// one transaction, a rejected one throws ContractError and changes nothing.
//
// Value semantics: copying a Contract snapshots the whole engine.
class Contract {
public:
    Contract() = default;

    // Appends the genesis block (index 0, timestamp `now`) carrying the
    // parameters and initial funding. Must be the first operation.
    void bootstrap(const EngineParams& params, Tick now = 0);

    // -- registration ------------------------------------------------------
    std::uint64_t register_customer(const Address& address, Tick now);
    std::uint64_t register_restaurant(const Address& address, std::vector<MenuItem> menu, Tick now);
    std::uint64_t register_deliveryman(const Address& address, Tick now);

    // Read-only menu check; not a transaction.
    bool food_available(std::uint64_t restaurant_id, const std::vector<std::uint64_t>& food_ids) const;

    // -- order lifecycle ----------------------------------------------------
    Order place_order(const Address& customer, std::uint64_t restaurant_id,
                      std::vector<std::uint64_t> food_items, Money delivery_fee,
                      Tick promised_delivery_time, Tick now, std::uint64_t loc_x = 0,
                      std::uint64_t loc_y = 0);
    void accept_order(const Address& restaurant, std::uint64_t order_id, Tick now);
    void accept_package(const Address& deliveryman, std::uint64_t order_id, Tick now);
    void food_making(const Address& restaurant, std::uint64_t order_id, Tick now);
    void collect_food(const Address& deliveryman, std::uint64_t order_id, Tick now);
    void deliver_food(const Address& deliveryman, std::uint64_t order_id, Tick now);
    void food_arrival(const Address& customer, std::uint64_t order_id, Tick now);

    // -- settlement ----------------------------------------------------------
    SettlementReceipt food_fee_collecting(const Address& restaurant, std::uint64_t order_id, Tick now);
    SettlementReceipt collect_delivery_fee(const Address& deliveryman, std::uint64_t order_id, Tick now);

    Gas charge_gas(const Address& caller, const std::string& operation);
    std::int64_t apply_reputation_penalty(const Address& address);

    // -- replay ---------------------------------------------------------------
    // Decodes and re-executes one recorded call. The first call must be the
    // bootstrap transaction. Throws CorruptDump on undecodable input and the
    // underlying ContractError when the recorded call does not apply.
    void apply_transaction(const Transaction& tx, Tick block_timestamp);

    // -- state access ----------------------------------------------------------
    const Order& order(std::uint64_t order_id) const;  // throws UnknownOrder
    const Order* find_order(std::uint64_t order_id) const;
    const std::map<std::uint64_t, Order>& orders() const { return orders_; }
    const Registry& registry() const { return registry_; }
    const BalanceSheet& balances() const { return balances_; }
    const GasMeter& gas_meter() const { return gas_; }
    const Ledger& ledger() const { return ledger_; }
    const std::vector<SettlementReceipt>& receipts() const { return receipts_; }
    const EngineParams& params() const { return params_; }
    bool bootstrapped() const { return bootstrapped_; }

    std::int64_t reputation(const Address& address) const;  // throws UnknownActor
    Money escrow_total() const;

    // Digest of the complete engine state (registry, balances, orders,
    // receipts, gas, ledger head). Equal digests mean indistinguishable state.
    Digest state_digest() const;

    // Cross-checks the conservation, reputation and chain invariants.
    // Returns an explanation for the first violated one, or nullopt.
    std::optional<std::string> check_invariants() const;

private:
    struct TxDraft {
        Address caller{};
        std::string operation;
        std::vector<std::uint8_t> input;
        std::vector<std::uint8_t> output;
        std::vector<EventRecord> events;
    };

    void commit(TxDraft draft, Tick now);
    Order& order_mut(std::uint64_t order_id);
    SettlementReceipt settle(Order& order, const Address& payee, PayeeRole role, bool violated,
                             Money gross, std::uint64_t pct, std::vector<EventRecord>& events);
    std::int64_t apply_reputation_penalty_unlogged(const Address& address);

    EngineParams params_;
    bool bootstrapped_ = false;
    Registry registry_;
    BalanceSheet balances_;
    GasMeter gas_;
    std::map<std::uint64_t, Order> orders_;
    std::vector<SettlementReceipt> receipts_;
    Ledger ledger_;
    std::uint64_t next_order_id_ = 1;
};

}  // namespace delivchain
