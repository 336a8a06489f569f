#include "delivchain/order.hpp"

namespace delivchain {

const char* order_status_str(OrderStatus status) {
    switch (status) {
        case OrderStatus::Placed: return "placed";
        case OrderStatus::AcceptedByRestaurant: return "accepted_by_restaurant";
        case OrderStatus::DeliveryAssigned: return "delivery_assigned";
        case OrderStatus::Prepared: return "prepared";
        case OrderStatus::WithDeliveryman: return "with_deliveryman";
        case OrderStatus::ReceivedByCustomer: return "received_by_customer";
    }
    return "placed";
}

}  // namespace delivchain
