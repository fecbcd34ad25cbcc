#pragma once

// Deterministic simulated network: one UE per configured subscriber, a
// SEAF, an AUSF and an ARPF on an in-order, reliable, synchronous bus. The
// attacker sits on the air interface and can read, drop, inject and replay.
//
// All secret material is derived from the config seed through HMAC with
// distinct labels, and every step draws its randomness from its own derived
// seed, so traces depend only on the config.

#include "pq5g/entities.hpp"
#include "pq5g/scenario.hpp"
#include "pq5g/trace.hpp"

#include <deque>
#include <map>

namespace pq5g {

class Network {
public:
    /// Validates the config (ConfigError) and provisions every entity.
    explicit Network(ScenarioConfig config);

    const ScenarioConfig& config() const noexcept { return config_; }
    const Trace& trace() const noexcept { return trace_; }

    std::size_t ue_count() const noexcept { return config_.subscribers.size(); }
    const UeState& ue(std::size_t i) const;
    const SeafState& seaf() const;
    const AusfState& ausf() const;
    const ArpfState& arpf() const;

    // Ground truth, for attack verification and effective-key setup.
    const SecretKey& subscriber_key(std::size_t i) const;
    const Supi& supi(std::size_t i) const;
    const HomeNetworkKeys& home_keys() const noexcept { return home_keys_; }

    /// UE i starts a registration; the bus runs until quiet.
    void register_ue(std::size_t i);

    /// Sends `m` from the attacker to entity `to` and runs the bus. Returns
    /// whatever the network addressed back to the attacker.
    std::vector<ProtocolMessage> inject(const std::string& to, const ProtocolMessage& m);

    /// Discards the next `count` air messages of type `type`.
    void drop_next(const std::string& type, std::size_t count = 1);

    /// AuthRequests the SEAF has sent so far, in trace order.
    std::vector<AuthRequest> captured_auth_requests() const;

    void record_attack(const nlohmann::json& report);

private:
    EntityState& entity(const std::string& id);
    const EntityState& entity(const std::string& id) const;
    std::uint64_t next_seed();
    void run();
    void record_message(const Envelope& e, std::vector<std::string> events);

    ScenarioConfig config_;
    Bytes seed_key_;
    HomeNetworkKeys home_keys_;
    std::vector<SecretKey> keys_;
    std::vector<Supi> supis_;
    std::map<std::string, EntityState> entities_;
    std::deque<Envelope> bus_;
    std::map<std::string, std::size_t> drops_;
    std::vector<ProtocolMessage> attacker_inbox_;
    Trace trace_;
    std::uint64_t step_ = 0;
    std::uint64_t seed_counter_ = 0;
};

inline constexpr std::size_t kMaxDeliveriesPerRun = 100000;

} // namespace pq5g
