#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "delivchain/types.hpp"

namespace delivchain {

Digest sha256(const std::uint8_t* data, std::size_t len);
Digest sha256(const std::vector<std::uint8_t>& data);
Digest sha256(std::string_view data);

// Digest of two concatenated digests, the Merkle node rule.
Digest sha256_pair(const Digest& left, const Digest& right);

}  // namespace delivchain
