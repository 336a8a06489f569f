#include "delivchain/ledger.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "delivchain/errors.hpp"
#include "delivchain/sha256.hpp"
#include "delivchain/wire.hpp"

namespace delivchain {

using nlohmann::json;

const char* event_name_str(EventName name) {
    switch (name) {
        case EventName::OrderUpdate: return "order_update";
        case EventName::Warning: return "warning";
        case EventName::Message: return "message";
    }
    return "message";
}

std::optional<EventName> event_name_from_str(const std::string& s) {
    if (s == "order_update") return EventName::OrderUpdate;
    if (s == "warning") return EventName::Warning;
    if (s == "message") return EventName::Message;
    return std::nullopt;
}

Digest Transaction::compute_tx_hash(Tick block_timestamp, std::uint64_t seq) const {
    wire::Encoder enc;
    enc.put_address(caller);
    enc.put_string(operation);
    enc.put_blob(input);
    enc.put_u64(block_timestamp);
    enc.put_u64(seq);
    return sha256(enc.bytes());
}

Digest Transaction::leaf_digest() const {
    wire::Encoder enc;
    enc.put_digest(tx_hash);
    enc.put_address(caller);
    enc.put_string(operation);
    enc.put_blob(input);
    enc.put_blob(output);
    enc.put_u64(events.size());
    for (const auto& ev : events) {
        enc.put_string(event_name_str(ev.name));
        enc.put_u64(ev.order_id);
        enc.put_u64(ev.status.has_value() ? 1 : 0);
        if (ev.status) enc.put_u64(*ev.status);
        enc.put_string(ev.msg);
    }
    enc.put_u64(gas_charged);
    return sha256(enc.bytes());
}

Digest Block::compute_block_hash() const {
    wire::Encoder enc;
    enc.put_u64(index);
    enc.put_digest(prev_hash);
    enc.put_u64(timestamp);
    enc.put_u64(nonce);
    enc.put_digest(tx_root);
    return sha256(enc.bytes());
}

Digest merkle_root(const std::vector<Digest>& digests) {
    if (digests.empty()) throw ContractError(ErrorCode::EmptyList, "merkle_root of no digests");
    std::vector<Digest> level = digests;
    do {
        if (level.size() % 2 != 0) level.push_back(level.back());
        std::vector<Digest> next;
        next.reserve(level.size() / 2);
        for (std::size_t i = 0; i < level.size(); i += 2) {
            next.push_back(sha256_pair(level[i], level[i + 1]));
        }
        level = std::move(next);
    } while (level.size() > 1);
    return level.front();
}

const Block& Ledger::append_block(std::vector<Transaction> transactions, Tick timestamp) {
    if (transactions.empty()) throw ContractError(ErrorCode::EmptyBlock);
    if (!blocks_.empty() && timestamp < blocks_.back().timestamp) {
        throw ContractError(ErrorCode::TimestampRegression,
                            "timestamp " + std::to_string(timestamp) + " < head " +
                                std::to_string(blocks_.back().timestamp));
    }

    Block block;
    block.index = blocks_.size();
    block.prev_hash = blocks_.empty() ? kZeroDigest : blocks_.back().block_hash;
    block.timestamp = timestamp;
    block.nonce = 0;
    block.transactions = std::move(transactions);

    std::vector<Digest> leaves;
    leaves.reserve(block.transactions.size());
    for (std::size_t seq = 0; seq < block.transactions.size(); ++seq) {
        auto& tx = block.transactions[seq];
        tx.tx_hash = tx.compute_tx_hash(timestamp, seq);
        leaves.push_back(tx.leaf_digest());
    }
    block.tx_root = merkle_root(leaves);
    block.block_hash = block.compute_block_hash();

    blocks_.push_back(std::move(block));
    return blocks_.back();
}

VerifyReport Ledger::verify_chain() const {
    auto fail = [](std::uint64_t index, std::string reason) {
        return VerifyReport{false, index, std::move(reason)};
    };

    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Block& b = blocks_[i];
        if (b.index != i) return fail(i, "index mismatch");
        if (i == 0) {
            if (b.prev_hash != kZeroDigest) return fail(i, "genesis prev_hash not zero");
        } else {
            if (b.prev_hash != blocks_[i - 1].block_hash) return fail(i, "broken prev_hash link");
            if (b.timestamp < blocks_[i - 1].timestamp) return fail(i, "timestamp regression");
        }
        if (b.transactions.empty()) return fail(i, "empty block");

        std::vector<Digest> leaves;
        leaves.reserve(b.transactions.size());
        for (std::size_t seq = 0; seq < b.transactions.size(); ++seq) {
            const Transaction& tx = b.transactions[seq];
            if (tx.tx_hash != tx.compute_tx_hash(b.timestamp, seq)) {
                return fail(i, "tx_hash mismatch at seq " + std::to_string(seq));
            }
            leaves.push_back(tx.leaf_digest());
        }
        if (b.tx_root != merkle_root(leaves)) return fail(i, "tx_root mismatch");
        if (b.block_hash != b.compute_block_hash()) return fail(i, "block_hash mismatch");
    }
    return {};
}

std::vector<EventRecord> Ledger::query_events(std::uint64_t order_id) const {
    std::vector<EventRecord> out;
    for (const Block& b : blocks_) {
        for (const Transaction& tx : b.transactions) {
            for (const EventRecord& ev : tx.events) {
                if (ev.order_id == order_id) out.push_back(ev);
            }
        }
    }
    return out;
}

namespace {

json event_to_json(const EventRecord& ev) {
    json j;
    j["name"] = event_name_str(ev.name);
    j["order_id"] = ev.order_id;
    if (ev.status) j["status"] = *ev.status;
    j["msg"] = ev.msg;
    return j;
}

json tx_to_json(const Transaction& tx) {
    json j;
    j["tx_hash"] = to_hex(tx.tx_hash);
    j["caller"] = to_hex(tx.caller);
    j["operation"] = tx.operation;
    j["input"] = to_hex(tx.input.data(), tx.input.size());
    j["output"] = to_hex(tx.output.data(), tx.output.size());
    json events = json::array();
    for (const auto& ev : tx.events) events.push_back(event_to_json(ev));
    j["events"] = std::move(events);
    j["gas_charged"] = tx.gas_charged;
    return j;
}

// Throws CorruptDump on any shape violation.
void require(bool cond, const std::string& what) {
    if (!cond) throw ContractError(ErrorCode::CorruptDump, what);
}

Digest parse_digest(const json& j, const std::string& key) {
    require(j.contains(key) && j[key].is_string(), "missing digest field " + key);
    auto d = digest_from_hex(j[key].get<std::string>());
    require(d.has_value(), "bad digest in field " + key);
    return *d;
}

EventRecord event_from_json(const json& j) {
    require(j.is_object() && j.contains("name") && j["name"].is_string(), "bad event record");
    EventRecord ev;
    auto name = event_name_from_str(j["name"].get<std::string>());
    require(name.has_value(), "unknown event name");
    ev.name = *name;
    require(j.contains("order_id") && j["order_id"].is_number_unsigned(), "bad event order_id");
    ev.order_id = j["order_id"].get<std::uint64_t>();
    if (j.contains("status")) {
        require(j["status"].is_number_unsigned(), "bad event status");
        ev.status = static_cast<std::uint8_t>(j["status"].get<std::uint64_t>());
    }
    require(j.contains("msg") && j["msg"].is_string(), "bad event msg");
    ev.msg = j["msg"].get<std::string>();
    return ev;
}

Transaction tx_from_json(const json& j) {
    require(j.is_object(), "transaction is not an object");
    Transaction tx;
    tx.tx_hash = parse_digest(j, "tx_hash");
    require(j.contains("caller") && j["caller"].is_string(), "missing caller");
    auto caller = address_from_hex(j["caller"].get<std::string>());
    require(caller.has_value(), "bad caller address");
    tx.caller = *caller;
    require(j.contains("operation") && j["operation"].is_string(), "missing operation");
    tx.operation = j["operation"].get<std::string>();

    for (const char* key : {"input", "output"}) {
        require(j.contains(key) && j[key].is_string(), std::string("missing ") + key);
        const auto hex = j[key].get<std::string>();
        require(hex.size() % 2 == 0, "odd hex payload");
        std::vector<std::uint8_t> bytes(hex.size() / 2);
        require(bytes.empty() || from_hex(hex, bytes.data(), bytes.size()), "bad hex payload");
        (key[0] == 'i' ? tx.input : tx.output) = std::move(bytes);
    }

    require(j.contains("events") && j["events"].is_array(), "missing events");
    for (const auto& ej : j["events"]) tx.events.push_back(event_from_json(ej));
    require(j.contains("gas_charged") && j["gas_charged"].is_number_unsigned(), "bad gas_charged");
    tx.gas_charged = j["gas_charged"].get<std::uint64_t>();
    return tx;
}

Block block_from_json(const json& j) {
    require(j.is_object(), "block is not an object");
    Block b;
    require(j.contains("index") && j["index"].is_number_unsigned(), "bad block index");
    b.index = j["index"].get<std::uint64_t>();
    b.prev_hash = parse_digest(j, "prev_hash");
    require(j.contains("timestamp") && j["timestamp"].is_number_unsigned(), "bad timestamp");
    b.timestamp = j["timestamp"].get<std::uint64_t>();
    require(j.contains("nonce") && j["nonce"].is_number_unsigned(), "bad nonce");
    b.nonce = j["nonce"].get<std::uint64_t>();
    b.tx_root = parse_digest(j, "tx_root");
    require(j.contains("transactions") && j["transactions"].is_array(), "missing transactions");
    for (const auto& tj : j["transactions"]) b.transactions.push_back(tx_from_json(tj));
    b.block_hash = parse_digest(j, "block_hash");
    return b;
}

}  // namespace

std::string Ledger::to_ndjson() const {
    std::ostringstream out;
    for (const Block& b : blocks_) {
        json j;
        j["index"] = b.index;
        j["prev_hash"] = to_hex(b.prev_hash);
        j["timestamp"] = b.timestamp;
        j["nonce"] = b.nonce;
        j["tx_root"] = to_hex(b.tx_root);
        json txs = json::array();
        for (const auto& tx : b.transactions) txs.push_back(tx_to_json(tx));
        j["transactions"] = std::move(txs);
        j["block_hash"] = to_hex(b.block_hash);
        out << j.dump() << '\n';
    }
    return out.str();
}

Ledger Ledger::from_ndjson(const std::string& text) {
    std::vector<Block> blocks;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        require(!j.is_discarded(), "line is not valid JSON");
        blocks.push_back(block_from_json(j));
    }
    require(!blocks.empty(), "dump contains no blocks");
    return from_blocks(std::move(blocks));
}

Ledger Ledger::from_blocks(std::vector<Block> blocks) {
    Ledger l;
    l.blocks_ = std::move(blocks);
    return l;
}

}  // namespace delivchain
