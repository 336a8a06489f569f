#include "delivchain/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace delivchain {

Digest sha256(const std::uint8_t* data, std::size_t len) {
    Digest out{};
    unsigned int out_len = 0;
    if (EVP_Digest(data, len, out.data(), &out_len, EVP_sha256(), nullptr) != 1 ||
        out_len != out.size()) {
        throw std::runtime_error("sha256: EVP_Digest failed");
    }
    return out;
}

Digest sha256(const std::vector<std::uint8_t>& data) { return sha256(data.data(), data.size()); }

Digest sha256(std::string_view data) {
    return sha256(reinterpret_cast<const std::uint8_t*>(data.data()), data.size());
}

Digest sha256_pair(const Digest& left, const Digest& right) {
    std::uint8_t buf[64];
    std::copy(left.begin(), left.end(), buf);
    std::copy(right.begin(), right.end(), buf + 32);
    return sha256(buf, sizeof(buf));
}

}  // namespace delivchain
