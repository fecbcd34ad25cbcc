#include "pq5g/trace.hpp"

#include "pq5g/crypto.hpp"
#include "pq5g/error.hpp"

#include <istream>
#include <sstream>

namespace pq5g {

namespace {

std::string_view kind_name(RecordKind kind)
{
    switch (kind) {
    case RecordKind::Header:
        return "header";
    case RecordKind::Message:
        return "message";
    case RecordKind::Event:
        return "event";
    case RecordKind::Attack:
        return "attack";
    }
    return "?";
}

RecordKind parse_kind(const std::string& s)
{
    if (s == "header")
        return RecordKind::Header;
    if (s == "message")
        return RecordKind::Message;
    if (s == "event")
        return RecordKind::Event;
    if (s == "attack")
        return RecordKind::Attack;
    throw FormatError("unknown trace record kind '" + s + "'");
}

} // namespace

ProtocolMessage TraceRecord::message() const
{
    if (!is_air())
        throw FormatError("record " + std::to_string(index) + " carries no air payload");
    return decode(payload);
}

const nlohmann::json& Trace::config() const
{
    for (const auto& r : records)
        if (r.kind == RecordKind::Header)
            return r.body;
    throw FormatError("trace has no header record");
}

std::vector<const TraceRecord*> Trace::air(const std::string& type, const std::string& from,
                                           const std::string& to) const
{
    std::vector<const TraceRecord*> out;
    for (const auto& r : records) {
        if (!r.is_air() || r.type != type)
            continue;
        if (!from.empty() && r.from != from)
            continue;
        if (!to.empty() && r.to != to)
            continue;
        out.push_back(&r);
    }
    return out;
}

nlohmann::json to_json(const TraceRecord& r)
{
    nlohmann::json j;
    j["index"] = r.index;
    j["step"] = r.step;
    j["kind"] = kind_name(r.kind);
    switch (r.kind) {
    case RecordKind::Header:
        j["config"] = r.body;
        break;
    case RecordKind::Message:
        j["from"] = r.from;
        j["to"] = r.to;
        j["link"] = r.link;
        j["type"] = r.type;
        if (r.link == "air")
            j["payload"] = to_hex(r.payload);
        else
            j["payload_sha256"] = r.payload_sha256;
        j["events"] = r.events;
        break;
    case RecordKind::Event:
        j["from"] = r.from;
        j["events"] = r.events;
        break;
    case RecordKind::Attack:
        j["from"] = r.from;
        j["report"] = r.body;
        break;
    }
    return j;
}

TraceRecord record_from_json(const nlohmann::json& j)
{
    try {
        TraceRecord r;
        r.index = j.at("index").get<std::uint64_t>();
        r.step = j.at("step").get<std::uint64_t>();
        r.kind = parse_kind(j.at("kind").get<std::string>());
        switch (r.kind) {
        case RecordKind::Header:
            r.body = j.at("config");
            break;
        case RecordKind::Message:
            r.from = j.at("from").get<std::string>();
            r.to = j.at("to").get<std::string>();
            r.link = j.at("link").get<std::string>();
            r.type = j.at("type").get<std::string>();
            if (r.link == "air")
                r.payload = from_hex(j.at("payload").get<std::string>());
            else
                r.payload_sha256 = j.at("payload_sha256").get<std::string>();
            r.events = j.at("events").get<std::vector<std::string>>();
            break;
        case RecordKind::Event:
            r.from = j.at("from").get<std::string>();
            r.events = j.at("events").get<std::vector<std::string>>();
            break;
        case RecordKind::Attack:
            r.from = j.at("from").get<std::string>();
            r.body = j.at("report");
            break;
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed trace record: ") + e.what());
    }
}

std::string Trace::to_jsonl() const
{
    std::string out;
    for (const auto& r : records) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

Trace Trace::from_jsonl(std::istream& in)
{
    Trace t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError("trace line " + std::to_string(line_no) + ": " + e.what());
        }
        t.records.push_back(record_from_json(j));
    }
    return t;
}

Trace Trace::from_jsonl(const std::string& text)
{
    std::istringstream in(text);
    return from_jsonl(in);
}

std::vector<std::string> find_cleartext(const Trace& trace, const std::vector<std::pair<std::string, Bytes>>& secrets)
{
    std::vector<std::string> hits;
    for (const auto& r : trace.records) {
        if (!r.is_air())
            continue;
        for (const auto& [label, secret] : secrets)
            if (!secret.empty() && contains(r.payload, secret))
                hits.push_back("index " + std::to_string(r.index) + ": " + label);
    }
    return hits;
}

} // namespace pq5g
