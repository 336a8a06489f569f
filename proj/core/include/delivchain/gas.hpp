#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "delivchain/types.hpp"

namespace delivchain {

struct GasCost {
    Gas transaction_cost = 0;
    Gas execution_cost = 0;

    bool operator==(const GasCost&) const = default;
};

// Fixed per-operation cost table. Defaults are the measured system costs;
// individual entries may be overridden through the scenario config.
class GasSchedule {
public:
    static GasSchedule defaults();

    void set(const std::string& operation, GasCost cost) { costs_[operation] = cost; }
    bool contains(const std::string& operation) const { return costs_.count(operation) > 0; }

    // Throws UnknownOperation.
    const GasCost& cost(const std::string& operation) const;

    const std::map<std::string, GasCost>& entries() const { return costs_; }

private:
    std::map<std::string, GasCost> costs_;
};

// Cumulative gas counters. Gas is tracked, never debited from balances.
class GasMeter {
public:
    Gas charge(const Address& caller, const std::string& operation, const GasSchedule& schedule);

    Gas total() const { return total_; }
    Gas total_for(const Address& caller) const;
    Gas total_for_operation(const std::string& operation) const;

    const std::map<Address, Gas>& per_actor() const { return per_actor_; }
    const std::map<std::string, Gas>& per_operation() const { return per_operation_; }

private:
    std::map<Address, Gas> per_actor_;
    std::map<std::string, Gas> per_operation_;
    Gas total_ = 0;
};

}  // namespace delivchain
