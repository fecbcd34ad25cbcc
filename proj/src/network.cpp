#include "pq5g/network.hpp"

#include "pq5g/error.hpp"

namespace pq5g {

namespace {

Block<32> derive(ByteView seed_key, std::string_view label, std::uint64_t index = 0)
{
    return hmac_sha256(seed_key, concat({to_bytes(label), be_bytes(index, 8)}));
}

} // namespace

Network::Network(ScenarioConfig config)
    : config_(std::move(config))
    , seed_key_(be_bytes(config_.seed, 8))
{
    config_.validate();

    const auto& registry = SchemeRegistry::standard();
    home_keys_.scheme = config_.home_key_scheme;
    home_keys_.ecies = registry.find(scheme_id::ecies).generate_key_pair(derive(seed_key_, "home-ecies"));
    home_keys_.pq_slot = registry.find(scheme_id::pq_slot).generate_key_pair(derive(seed_key_, "home-pq-slot"));
    const Bytes home_public = home_keys_.for_scheme(config_.home_key_scheme).public_key;

    SeafState seaf;
    seaf.sn_name = to_bytes(config_.sn_name);
    seaf.phase = config_.phase;
    seaf.identities = ServingIdentityState(be_value(ByteView(derive(seed_key_, "guti-salt")).first(8)));

    ArpfState arpf;
    arpf.keys = home_keys_;

    for (std::size_t i = 0; i < config_.subscribers.size(); ++i) {
        const auto& sub = config_.subscribers[i];
        const auto key_bytes = derive(seed_key_, "subscriber-key", i);
        SecretKey k(sub.k ? *sub.k : Bytes(key_bytes.begin(), key_bytes.begin() + sub.k_bits / 8));
        Supi supi(sub.supi, config_.home_network_id);
        const std::uint64_t sqn = be_value(ByteView(derive(seed_key_, "subscriber-sqn", i)).first(4));

        arpf.subscribers.emplace(supi, SubscriberRecord{supi, k, sqn, kDefaultAmf, sub.suite, 1});

        UeState ue{.id = entity_id::ue(i),
                   .supi = supi,
                   .usim = UsimState{k, sub.suite, sqn, kDefaultMaxSqnJump},
                   .scheme = config_.home_key_scheme,
                   .home_public_key = home_public,
                   .sn_name = seaf.sn_name,
                   .phase = config_.phase,
                   .merged_errors = config_.merged_errors,
                   .concealment = config_.concealment,
                   .guti = std::nullopt,
                   .uplink_data = to_bytes(std::string_view(sub.uplink_data)),
                   .pending_k_seaf = std::nullopt,
                   .keys = std::nullopt,
                   .nas = std::nullopt,
                   .up = std::nullopt,
                   .registered = false};
        if (sub.guti_provisioned) {
            seaf.identities.mark_authenticated(supi);
            ue.guti = seaf.identities.assign(supi);
        }
        keys_.push_back(k);
        supis_.push_back(supi);
        entities_.emplace(ue.id, std::move(ue));
    }
    entities_.emplace(entity_id::seaf, std::move(seaf));
    entities_.emplace(entity_id::ausf, AusfState{});
    entities_.emplace(entity_id::arpf, std::move(arpf));

    TraceRecord header;
    header.kind = RecordKind::Header;
    header.body = config_.to_json();
    trace_.records.push_back(std::move(header));
}

const UeState& Network::ue(std::size_t i) const
{
    return std::get<UeState>(entity(entity_id::ue(i)));
}

const SeafState& Network::seaf() const
{
    return std::get<SeafState>(entity(entity_id::seaf));
}

const AusfState& Network::ausf() const
{
    return std::get<AusfState>(entity(entity_id::ausf));
}

const ArpfState& Network::arpf() const
{
    return std::get<ArpfState>(entity(entity_id::arpf));
}

const SecretKey& Network::subscriber_key(std::size_t i) const
{
    return keys_.at(i);
}

const Supi& Network::supi(std::size_t i) const
{
    return supis_.at(i);
}

EntityState& Network::entity(const std::string& id)
{
    auto it = entities_.find(id);
    if (it == entities_.end())
        throw StateError("no entity '" + id + "'");
    return it->second;
}

const EntityState& Network::entity(const std::string& id) const
{
    auto it = entities_.find(id);
    if (it == entities_.end())
        throw StateError("no entity '" + id + "'");
    return it->second;
}

std::uint64_t Network::next_seed()
{
    return be_value(ByteView(derive(seed_key_, "step", seed_counter_++)).first(8));
}

void Network::record_message(const Envelope& e, std::vector<std::string> events)
{
    TraceRecord r;
    r.index = trace_.records.size();
    r.step = step_;
    r.kind = RecordKind::Message;
    r.from = e.from;
    r.to = e.to;
    r.type = message_type(e.message);
    const Bytes encoded = encode(e.message);
    if (is_air_message(e.message)) {
        r.link = "air";
        r.payload = encoded;
    } else {
        r.link = "core";
        r.payload_sha256 = to_hex(sha256(encoded));
    }
    r.events = std::move(events);
    trace_.records.push_back(std::move(r));
}

void Network::register_ue(std::size_t i)
{
    auto& state = entity(entity_id::ue(i));
    auto result = start_registration(std::get<UeState>(std::move(state)), next_seed());
    state = std::move(result.state);

    TraceRecord r;
    r.index = trace_.records.size();
    r.step = ++step_;
    r.kind = RecordKind::Event;
    r.from = entity_id::ue(i);
    for (const auto& ev : result.events)
        r.events.push_back(ev.str());
    trace_.records.push_back(std::move(r));

    for (auto& out : result.outgoing)
        bus_.push_back(std::move(out));
    run();
}

std::vector<ProtocolMessage> Network::inject(const std::string& to, const ProtocolMessage& m)
{
    attacker_inbox_.clear();
    bus_.push_back({entity_id::attacker, to, m});
    run();
    return std::move(attacker_inbox_);
}

void Network::drop_next(const std::string& type, std::size_t count)
{
    drops_[type] += count;
}

std::vector<AuthRequest> Network::captured_auth_requests() const
{
    std::vector<AuthRequest> out;
    for (const auto* r : trace_.air("AuthRequest", entity_id::seaf))
        out.push_back(std::get<AuthRequest>(r->message()));
    return out;
}

void Network::record_attack(const nlohmann::json& report)
{
    TraceRecord r;
    r.index = trace_.records.size();
    r.step = step_;
    r.kind = RecordKind::Attack;
    r.from = entity_id::attacker;
    r.body = report;
    trace_.records.push_back(std::move(r));
}

void Network::run()
{
    std::size_t deliveries = 0;
    while (!bus_.empty()) {
        if (++deliveries > kMaxDeliveriesPerRun)
            throw StateError("message bus did not settle");
        Envelope e = std::move(bus_.front());
        bus_.pop_front();
        ++step_;

        if (is_air_message(e.message)) {
            auto drop = drops_.find(message_type(e.message));
            if (drop != drops_.end() && drop->second > 0) {
                --drop->second;
                record_message(e, {"dropped-by-attacker"});
                continue;
            }
        }
        if (e.to == entity_id::attacker) {
            record_message(e, {"captured-by-attacker"});
            attacker_inbox_.push_back(std::move(e.message));
            continue;
        }

        auto& state = entity(e.to);
        auto result = step(std::move(state), e, next_seed());
        state = std::move(result.state);

        std::vector<std::string> events;
        for (const auto& ev : result.events)
            events.push_back(ev.str());
        record_message(e, std::move(events));
        for (auto& out : result.outgoing)
            bus_.push_back(std::move(out));
    }
}

} // namespace pq5g
