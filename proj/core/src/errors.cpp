#include "delivchain/errors.hpp"

namespace delivchain {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::TimestampRegression: return "TimestampRegression";
        case ErrorCode::EmptyBlock: return "EmptyBlock";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::DuplicateAddress: return "DuplicateAddress";
        case ErrorCode::EmptyMenu: return "EmptyMenu";
        case ErrorCode::DuplicateFoodId: return "DuplicateFoodId";
        case ErrorCode::InvalidPrepTime: return "InvalidPrepTime";
        case ErrorCode::UnknownRestaurant: return "UnknownRestaurant";
        case ErrorCode::UnknownCustomer: return "UnknownCustomer";
        case ErrorCode::UnknownDeliveryman: return "UnknownDeliveryman";
        case ErrorCode::UnknownActor: return "UnknownActor";
        case ErrorCode::UnknownOrder: return "UnknownOrder";
        case ErrorCode::FoodUnavailable: return "FoodUnavailable";
        case ErrorCode::InsufficientFunds: return "InsufficientFunds";
        case ErrorCode::WrongStatus: return "WrongStatus";
        case ErrorCode::NotOrderOwner: return "NotOrderOwner";
        case ErrorCode::NotAssignedDeliveryman: return "NotAssignedDeliveryman";
        case ErrorCode::RestaurantAtCapacity: return "RestaurantAtCapacity";
        case ErrorCode::DeliverymanAtCapacity: return "DeliverymanAtCapacity";
        case ErrorCode::NotYetDelivered: return "NotYetDelivered";
        case ErrorCode::AlreadyCollected: return "AlreadyCollected";
        case ErrorCode::UnknownOperation: return "UnknownOperation";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::CorruptDump: return "CorruptDump";
    }
    return "UnknownError";
}

}  // namespace delivchain
