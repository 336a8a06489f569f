#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delivchain/types.hpp"

namespace delivchain::wire {

// Canonical byte encoding used for every digest input and for transaction
// input/output payloads. The format is fixed so that independent
// implementations hash identical bytes:
//
//   field        := len payload            (len = u32 big-endian byte count)
//   u64          := len=8,  8-byte big-endian value
//   digest       := len=32, raw bytes
//   address      := len=20, raw bytes
//   string/bytes := len=n,  raw bytes
//   list<T>      := u64 count field, then each element encoded in order
//   optional<T>  := u64 flag field (0|1), then the value field if flag=1
//
// Structs encode their fields in declared order with no framing around the
// whole struct.

class Encoder {
public:
    void put_u64(std::uint64_t v) {
        put_len(8);
        for (int i = 7; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void put_bytes(const std::uint8_t* data, std::size_t len) {
        put_len(static_cast<std::uint32_t>(len));
        buf_.insert(buf_.end(), data, data + len);
    }

    void put_string(std::string_view s) {
        put_bytes(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
    }

    void put_digest(const Digest& d) { put_bytes(d.data(), d.size()); }
    void put_address(const Address& a) { put_bytes(a.data(), a.size()); }

    void put_blob(const std::vector<std::uint8_t>& b) { put_bytes(b.data(), b.size()); }

    void put_optional_u64(const std::optional<std::uint64_t>& v) {
        put_u64(v.has_value() ? 1 : 0);
        if (v) put_u64(*v);
    }

    void put_u64_list(const std::vector<std::uint64_t>& vs) {
        put_u64(vs.size());
        for (auto v : vs) put_u64(v);
    }

    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

private:
    void put_len(std::uint32_t n) {
        for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
    }

    std::vector<std::uint8_t> buf_;
};

// Bounds-checked reader for the same format. Failures set the error flag
// rather than throwing; callers translate into their own error domain.
class Decoder {
public:
    explicit Decoder(const std::vector<std::uint8_t>& data) : data_(data.data()), size_(data.size()) {}
    Decoder(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

    std::uint64_t get_u64() {
        auto payload = next(8);
        if (!payload) return 0;
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | payload[i];
        return v;
    }

    std::string get_string() {
        std::size_t n = 0;
        auto payload = next_var(n);
        if (!payload) return {};
        return std::string(reinterpret_cast<const char*>(payload), n);
    }

    std::vector<std::uint8_t> get_blob() {
        std::size_t n = 0;
        auto payload = next_var(n);
        if (!payload) return {};
        return std::vector<std::uint8_t>(payload, payload + n);
    }

    Digest get_digest() {
        Digest d{};
        auto payload = next(d.size());
        if (payload) std::memcpy(d.data(), payload, d.size());
        return d;
    }

    Address get_address() {
        Address a{};
        auto payload = next(a.size());
        if (payload) std::memcpy(a.data(), payload, a.size());
        return a;
    }

    std::optional<std::uint64_t> get_optional_u64() {
        if (get_u64() == 0) return std::nullopt;
        return get_u64();
    }

    std::vector<std::uint64_t> get_u64_list() {
        std::uint64_t n = get_u64();
        std::vector<std::uint64_t> out;
        if (failed_ || n > remaining() / 12) {  // each element is at least 12 bytes
            failed_ = true;
            return out;
        }
        out.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(get_u64());
        return out;
    }

    bool failed() const { return failed_; }
    bool exhausted() const { return pos_ == size_; }
    // A decode is clean when nothing failed and all bytes were consumed.
    bool ok() const { return !failed_ && exhausted(); }

private:
    std::size_t remaining() const { return size_ - pos_; }

    const std::uint8_t* next(std::size_t expected) {
        std::size_t n = 0;
        auto payload = next_var(n);
        if (!payload || n != expected) {
            failed_ = true;
            return nullptr;
        }
        return payload;
    }

    const std::uint8_t* next_var(std::size_t& n) {
        if (failed_ || remaining() < 4) {
            failed_ = true;
            return nullptr;
        }
        std::uint32_t len = 0;
        for (int i = 0; i < 4; ++i) len = (len << 8) | data_[pos_ + i];
        pos_ += 4;
        if (remaining() < len) {
            failed_ = true;
            return nullptr;
        }
        const std::uint8_t* payload = data_ + pos_;
        pos_ += len;
        n = len;
        return payload;
    }

    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
    bool failed_ = false;
};

}  // namespace delivchain::wire
