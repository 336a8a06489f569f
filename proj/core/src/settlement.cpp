#include "delivchain/settlement.hpp"

#include <cstdlib>

namespace delivchain {

const char* payee_role_str(PayeeRole role) {
    return role == PayeeRole::Restaurant ? "restaurant" : "deliveryman";
}

Money penalty_amount(Money gross, std::uint64_t pct) {
    unsigned __int128 product = static_cast<unsigned __int128>(gross) * pct;
    return static_cast<Money>(product / 100);
}

bool time_violated(Tick elapsed, Tick promised) { return elapsed > promised; }

std::string food_warning_message(std::uint64_t pct) {
    return "Late in food making, you will be deducted " + std::to_string(pct) +
           "% from food fees";
}

std::string delivery_warning_message(std::uint64_t pct) {
    return "Late in food delivery, you will be deducted " + std::to_string(pct) +
           "% from food delivery fees";
}

void BalanceSheet::fund(const Address& address, Money amount) {
    balances_[address] += amount;
    total_funded_ += amount;
}

Money BalanceSheet::balance(const Address& address) const {
    auto it = balances_.find(address);
    return it == balances_.end() ? 0 : it->second;
}

bool BalanceSheet::can_debit(const Address& address, Money amount) const {
    return balance(address) >= amount;
}

void BalanceSheet::debit(const Address& address, Money amount) {
    auto it = balances_.find(address);
    if (it == balances_.end() || it->second < amount) std::abort();  // caller must pre-check
    it->second -= amount;
}

void BalanceSheet::credit(const Address& address, Money amount) { balances_[address] += amount; }

Money BalanceSheet::total_balances() const {
    Money total = 0;
    for (const auto& [_, v] : balances_) total += v;
    return total;
}

}  // namespace delivchain
