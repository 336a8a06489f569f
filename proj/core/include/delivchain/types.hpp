#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace delivchain {

using Tick = std::uint64_t;   // logical clock unit, stands in for block.timestamp
using Money = std::uint64_t;  // smallest currency unit, no decimals
using Gas = std::uint64_t;

// 256-bit digest, raw bytes. Hex display is lowercase, no 0x prefix.
using Digest = std::array<std::uint8_t, 32>;

// 20-byte actor identifier.
using Address = std::array<std::uint8_t, 20>;

constexpr Digest kZeroDigest{};
constexpr Address kZeroAddress{};

std::string to_hex(const std::uint8_t* data, std::size_t len);
std::string to_hex(const Digest& d);
std::string to_hex(const Address& a);

// Strict parse: even length, lowercase or uppercase hex only.
bool from_hex(const std::string& hex, std::uint8_t* out, std::size_t len);
std::optional<Digest> digest_from_hex(const std::string& hex);
std::optional<Address> address_from_hex(const std::string& hex);

}  // namespace delivchain
