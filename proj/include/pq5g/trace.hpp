#pragma once

// JSON-lines trace. One record per line:
//
//   {"index":0,"kind":"header","step":0,"config":{...}}
//   {"index":5,"kind":"message","step":4,"from":"ue0","to":"seaf","link":"air",
//    "type":"AuthResponse","payload":"04...","events":["..."]}
//   {"index":9,"kind":"message",...,"link":"core","payload_sha256":"..."}
//   {"index":12,"kind":"event","step":7,"from":"ue0","events":["registration-start: SUCI"]}
//   {"index":40,"kind":"attack","step":31,"from":"attacker","report":{...}}
//
// Air-interface payloads are the canonical message encoding in hex. The
// serving/home link is modelled as a protected channel: its records carry
// only a SHA-256 digest of the canonical encoding.

#include "pq5g/bytes.hpp"
#include "pq5g/messages.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pq5g {

enum class RecordKind : std::uint8_t { Header, Message, Event, Attack };

struct TraceRecord {
    std::uint64_t index = 0;
    std::uint64_t step = 0;
    RecordKind kind = RecordKind::Message;
    std::string from;
    std::string to;
    std::string link; // "air" or "core"
    std::string type;
    Bytes payload;    // air links only
    std::string payload_sha256; // core links only
    std::vector<std::string> events;
    nlohmann::json body; // header config or attack report

    bool is_air() const { return kind == RecordKind::Message && link == "air"; }

    /// Decodes the air payload. Throws FormatError for core records.
    ProtocolMessage message() const;
};

struct Trace {
    std::vector<TraceRecord> records;

    const nlohmann::json& config() const; // throws FormatError without a header

    /// Air records of message type `type`, optionally filtered by endpoint.
    std::vector<const TraceRecord*> air(const std::string& type, const std::string& from = {},
                                        const std::string& to = {}) const;

    std::string to_jsonl() const;
    static Trace from_jsonl(std::istream& in);
    static Trace from_jsonl(const std::string& text);
};

nlohmann::json to_json(const TraceRecord& record);
TraceRecord record_from_json(const nlohmann::json& j);

/// Air records whose payload contains any of `secrets`; each hit is
/// reported as "index N: <label>".
std::vector<std::string> find_cleartext(const Trace& trace, const std::vector<std::pair<std::string, Bytes>>& secrets);

} // namespace pq5g
