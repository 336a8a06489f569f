#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "delivchain/types.hpp"

namespace delivchain {

struct PenaltyParams {
    std::uint64_t food_pct = 10;      // deducted from food fees on late making
    std::uint64_t delivery_pct = 5;   // deducted from delivery fees on late delivery
};

struct ReputationParams {
    std::int64_t initial = 100;
    std::int64_t decrement = 1;  // per warning, floored at 0
};

enum class PayeeRole { Restaurant, Deliveryman };

const char* payee_role_str(PayeeRole role);

// Payout breakdown for one fee collection. The deducted amount is refunded
// to the customer; net = gross - penalty_amount.
struct SettlementReceipt {
    std::uint64_t order_id = 0;
    Address payee{};
    PayeeRole role = PayeeRole::Restaurant;
    Money gross = 0;
    std::uint64_t penalty_pct = 0;
    Money penalty_amount = 0;
    Money net = 0;
    Money refund_to_customer = 0;
    bool violated = false;
};

// floor(gross * pct / 100), computed in 128-bit so no input can overflow.
Money penalty_amount(Money gross, std::uint64_t pct);

// Strict ">": elapsed exactly equal to the promise is not a violation.
bool time_violated(Tick elapsed, Tick promised);

std::string food_warning_message(std::uint64_t pct);
std::string delivery_warning_message(std::uint64_t pct);

// Per-address holdings in the smallest currency unit. Escrow lives on the
// orders; total currency (balances + escrows) is conserved by every
// operation except explicit funding.
class BalanceSheet {
public:
    void fund(const Address& address, Money amount);

    Money balance(const Address& address) const;
    bool can_debit(const Address& address, Money amount) const;

    // Aborts the process on overdraft; callers check can_debit first.
    void debit(const Address& address, Money amount);
    void credit(const Address& address, Money amount);

    Money total_balances() const;
    Money total_funded() const { return total_funded_; }

    const std::map<Address, Money>& balances() const { return balances_; }

private:
    std::map<Address, Money> balances_;
    Money total_funded_ = 0;
};

}  // namespace delivchain
