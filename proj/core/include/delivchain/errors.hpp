#pragma once

#include <stdexcept>
#include <string>

namespace delivchain {

enum class ErrorCode {
    // ledger
    TimestampRegression,
    EmptyBlock,
    EmptyList,
    // registry
    DuplicateAddress,
    EmptyMenu,
    DuplicateFoodId,
    InvalidPrepTime,
    UnknownRestaurant,
    UnknownCustomer,
    UnknownDeliveryman,
    UnknownActor,
    // order lifecycle
    UnknownOrder,
    FoodUnavailable,
    InsufficientFunds,
    WrongStatus,
    NotOrderOwner,
    NotAssignedDeliveryman,
    RestaurantAtCapacity,
    DeliverymanAtCapacity,
    NotYetDelivered,
    // settlement
    AlreadyCollected,
    UnknownOperation,
    // simulator / io
    InvalidConfig,
    CorruptDump,
};

const char* error_name(ErrorCode code);

// Every rejected operation throws this and leaves all engine state unchanged.
class ContractError : public std::runtime_error {
public:
    ContractError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    explicit ContractError(ErrorCode code) : std::runtime_error(error_name(code)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace delivchain
