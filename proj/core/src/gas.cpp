#include "delivchain/gas.hpp"

#include "delivchain/errors.hpp"

namespace delivchain {

GasSchedule GasSchedule::defaults() {
    GasSchedule s;
    s.set("bootstrap", {0, 0});
    s.set("register_customer", {93'566, 93'566});
    s.set("register_restaurant", {385'355, 385'355});
    s.set("register_deliveryman", {140'108, 140'108});
    s.set("place_order", {223'985, 223'985});
    s.set("accept_order", {51'981, 51'981});
    s.set("accept_package", {75'571, 75'571});
    s.set("food_making", {55'157, 55'157});
    s.set("collect_food", {57'026, 57'026});
    s.set("food_fee_collecting", {57'133, 57'133});
    s.set("deliver_food", {28'677, 28'677});
    s.set("food_arrival", {77'356, 77'356});
    s.set("collect_delivery_fee", {33'344, 33'344});
    return s;
}

const GasCost& GasSchedule::cost(const std::string& operation) const {
    auto it = costs_.find(operation);
    if (it == costs_.end()) throw ContractError(ErrorCode::UnknownOperation, operation);
    return it->second;
}

Gas GasMeter::charge(const Address& caller, const std::string& operation,
                     const GasSchedule& schedule) {
    Gas amount = schedule.cost(operation).transaction_cost;
    per_actor_[caller] += amount;
    per_operation_[operation] += amount;
    total_ += amount;
    return amount;
}

Gas GasMeter::total_for(const Address& caller) const {
    auto it = per_actor_.find(caller);
    return it == per_actor_.end() ? 0 : it->second;
}

Gas GasMeter::total_for_operation(const std::string& operation) const {
    auto it = per_operation_.find(operation);
    return it == per_operation_.end() ? 0 : it->second;
}

}  // namespace delivchain
