#pragma once

// Entity state machines for UE (USIM + ME), SEAF (co-located with the AMF),
// AUSF and ARPF. Transitions are pure: step() consumes a state value and an
// incoming envelope and returns the successor state plus outputs.

#include "pq5g/auth_vectors.hpp"
#include "pq5g/key_hierarchy.hpp"
#include "pq5g/messages.hpp"
#include "pq5g/session.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pq5g {

namespace entity_id {
inline const std::string seaf = "seaf";
inline const std::string ausf = "ausf";
inline const std::string arpf = "arpf";
inline const std::string attacker = "attacker";
std::string ue(std::size_t index);
} // namespace entity_id

struct Envelope {
    std::string from;
    std::string to;
    ProtocolMessage message;
};

struct Event {
    std::string kind;
    std::string detail;

    std::string str() const { return detail.empty() ? kind : kind + ": " + detail; }
};

struct HomeNetworkKeys {
    std::uint8_t scheme = scheme_id::ecies; // scheme USIMs are provisioned with
    SchemeKeyPair ecies;
    SchemeKeyPair pq_slot;

    const SchemeKeyPair& for_scheme(std::uint8_t id) const;
};

// Where SUCI concealment nominally runs. The computation is the same either way.
enum class ConcealmentLocation : std::uint8_t { Me, Usim };

std::string_view to_string(ConcealmentLocation location);

struct UeState {
    std::string id;
    Supi supi;
    UsimState usim;
    std::uint8_t scheme = scheme_id::ecies;
    Bytes home_public_key;
    Bytes sn_name;
    MigrationPhase phase = MigrationPhase::Legacy;
    bool merged_errors = false;
    ConcealmentLocation concealment = ConcealmentLocation::Me; // nominal; recorded in the trace only
    std::optional<Guti> guti;
    Bytes uplink_data; // sent on the user plane once registered

    std::optional<Block<32>> pending_k_seaf;
    std::optional<KeyContext> keys;
    std::optional<SessionChannel> nas;
    std::optional<SessionChannel> up;
    bool registered = false;
};

enum class SeafStage : std::uint8_t {
    Identifying,
    AwaitingAv,
    AwaitingResponse,
    AwaitingConfirm,
    Established,
    Failed,
};

struct SeafSession {
    std::string ue;
    SeafStage stage = SeafStage::Identifying;
    std::variant<std::monostate, Suci, Supi> identity;
    Rand rand{};
    Autn autn;
    Block<16> hxres_star{};
    bool resync_attempted = false;
    std::optional<Supi> supi;
    std::optional<Block<32>> k_seaf;
    std::optional<KeyContext> keys;
    std::optional<SessionChannel> nas;
    std::optional<SessionChannel> up;
    std::optional<Guti> guti;
};

struct SeafState {
    Bytes sn_name;
    MigrationPhase phase = MigrationPhase::Legacy;
    ServingIdentityState identities;
    std::map<std::uint32_t, SeafSession> sessions;
    std::map<std::string, std::uint32_t> by_ue;
    std::uint32_t next_context = 1;

    const SeafSession* session_for(const std::string& ue) const;
};

struct AusfEntry {
    HeAV he_av;
    Supi supi;
    Bytes sn_name;
    bool used = false;
};

struct AusfState {
    std::map<std::uint32_t, Bytes> requested_sn_name;
    std::map<std::uint32_t, AusfEntry> entries;
};

struct ArpfState {
    std::map<Supi, SubscriberRecord> subscribers;
    HomeNetworkKeys keys;
};

using EntityState = std::variant<UeState, SeafState, AusfState, ArpfState>;

struct StepResult {
    EntityState state;
    std::vector<Envelope> outgoing;
    std::vector<Event> events;
};

/// Pure transition. Randomness inside the step is drawn from `rng_seed` only.
/// Messages that make no sense in the current state produce a
/// "protocol-state" event, never an exception.
StepResult step(EntityState state, const Envelope& incoming, std::uint64_t rng_seed);

/// UE-local trigger: emit a RegistrationRequest (GUTI if one is held, else a
/// freshly concealed SUCI).
StepResult start_registration(UeState state, std::uint64_t rng_seed);

} // namespace pq5g
