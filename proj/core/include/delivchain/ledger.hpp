#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delivchain/types.hpp"

namespace delivchain {

enum class EventName { OrderUpdate, Warning, Message };

const char* event_name_str(EventName name);
std::optional<EventName> event_name_from_str(const std::string& s);

// One emitted log entry. order_update entries carry a status code; warning
// entries carry a msg starting with "Late in".
struct EventRecord {
    EventName name = EventName::Message;
    std::uint64_t order_id = 0;  // 0 when not tied to an order
    std::optional<std::uint8_t> status;
    std::string msg;

    bool operator==(const EventRecord&) const = default;
};

// One recorded contract call. tx_hash covers the call identity
// (caller, operation, input, block timestamp, per-block sequence number).
// The Merkle leaf digest covers the whole record, so any stored field is
// tamper-evident through tx_root.
struct Transaction {
    Digest tx_hash{};
    Address caller{};
    std::string operation;
    std::vector<std::uint8_t> input;
    std::vector<std::uint8_t> output;
    std::vector<EventRecord> events;
    Gas gas_charged = 0;

    Digest compute_tx_hash(Tick block_timestamp, std::uint64_t seq) const;
    Digest leaf_digest() const;

    bool operator==(const Transaction&) const = default;
};

struct Block {
    std::uint64_t index = 0;
    Digest prev_hash{};
    Tick timestamp = 0;
    std::uint64_t nonce = 0;  // always 0, no proof of work
    Digest tx_root{};
    std::vector<Transaction> transactions;
    Digest block_hash{};

    // Digest over (index, prev_hash, timestamp, nonce, tx_root).
    Digest compute_block_hash() const;

    bool operator==(const Block&) const = default;
};

// Standard binary Merkle root over the given digests; an odd layer duplicates
// its last digest, so a single leaf hashes to sha256(d || d).
// Throws ContractError(EmptyList) on an empty input.
Digest merkle_root(const std::vector<Digest>& digests);

struct VerifyReport {
    bool ok = true;
    std::optional<std::uint64_t> first_bad_index;
    std::string reason;
};

// Append-only hash-chained block store. Appends are strictly serialized by
// the owning engine; reads never observe a partial append.
class Ledger {
public:
    // Finalizes the draft transactions (tx_hash from the block timestamp and
    // sequence position), links the block to the current head, and appends it.
    // Throws TimestampRegression / EmptyBlock.
    const Block& append_block(std::vector<Transaction> transactions, Tick timestamp);

    // Full recomputation of every digest and linkage, lowest failure wins.
    VerifyReport verify_chain() const;

    // All events with the given order id, in chain order.
    std::vector<EventRecord> query_events(std::uint64_t order_id) const;

    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    const Block& head() const { return blocks_.back(); }
    Digest head_hash() const { return blocks_.empty() ? kZeroDigest : blocks_.back().block_hash; }

    // Newline-delimited JSON, one block per line, digests as lowercase hex.
    std::string to_ndjson() const;

    // Parses a dump without verifying it; call verify_chain() afterwards.
    // Throws ContractError(CorruptDump) when the text is not parseable at all.
    static Ledger from_ndjson(const std::string& text);

    // Adopts pre-built blocks as-is (replay/verification paths).
    static Ledger from_blocks(std::vector<Block> blocks);

private:
    std::vector<Block> blocks_;
};

}  // namespace delivchain
