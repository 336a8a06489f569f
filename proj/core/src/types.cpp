#include "delivchain/types.hpp"

namespace delivchain {

namespace {
constexpr char kHexChars[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

std::string to_hex(const std::uint8_t* data, std::size_t len) {
    std::string out;
    out.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(kHexChars[data[i] >> 4]);
        out.push_back(kHexChars[data[i] & 0x0f]);
    }
    return out;
}

std::string to_hex(const Digest& d) { return to_hex(d.data(), d.size()); }
std::string to_hex(const Address& a) { return to_hex(a.data(), a.size()); }

bool from_hex(const std::string& hex, std::uint8_t* out, std::size_t len) {
    if (hex.size() != len * 2) return false;
    for (std::size_t i = 0; i < len; ++i) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) return false;
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return true;
}

std::optional<Digest> digest_from_hex(const std::string& hex) {
    Digest d;
    if (!from_hex(hex, d.data(), d.size())) return std::nullopt;
    return d;
}

std::optional<Address> address_from_hex(const std::string& hex) {
    Address a;
    if (!from_hex(hex, a.data(), a.size())) return std::nullopt;
    return a;
}

}  // namespace delivchain
