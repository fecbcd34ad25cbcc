#pragma once

// Scenario configuration (JSON). Example:
//
//   {
//     "seed": 7,
//     "phase": "phase1",
//     "merged_errors": false,
//     "home_key_scheme": 1,
//     "subscribers": [
//       {"supi": "imsi-001010000000001", "k_bits": 128, "suite": "reference128"},
//       {"supi": "imsi-001010000000002", "k_bits": 256, "suite": "reference256",
//        "uplink_data": "hello"}
//     ],
//     "attacker_script": [
//       {"op": "replay", "capture": 0, "to": 1},
//       {"op": "attack", "name": "suci-compromise"}
//     ]
//   }
//
// Optional top-level "concealment": "me" (default) or "usim", the nominal
// place SUCIs are computed; it only shows up in trace events.
//
// Optional per-subscriber fields: "k_hex" (explicit key), "identity"
// ("suci" or "guti": a GUTI provisioned out of band, so the subscriber never
// sends a SUCI), "auto_register" (default true).
//
// Script ops: register {ue}, reauth {ue}, replay {capture, to},
// drop {type, count}, attack {name, params}. Indices are 0-based; "capture"
// counts AuthRequests sent by the SEAF, in trace order.

#include "pq5g/crypto.hpp"
#include "pq5g/entities.hpp"
#include "pq5g/key_hierarchy.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pq5g {

struct SubscriberConfig {
    std::string supi;
    int k_bits = 128;
    AlgorithmSuite suite = AlgorithmSuite::Reference128;
    std::optional<Bytes> k;
    bool guti_provisioned = false;
    std::string uplink_data;
    bool auto_register = true;
};

struct ScriptOp {
    std::string op;
    nlohmann::json args; // the full directive object
};

inline constexpr std::array<std::string_view, 5> kAttackNames = {
    "handshake-recovery", "keystream-recovery", "linkability", "sqn-leak", "suci-compromise"};

inline constexpr std::string_view kDefaultSnName = "5G:mnc001.mcc001.3gppnetwork.org";
inline constexpr std::string_view kDefaultHomeNetworkId = "001-01";

struct ScenarioConfig {
    std::uint64_t seed = 0;
    MigrationPhase phase = MigrationPhase::Legacy;
    std::string sn_name{kDefaultSnName};
    std::string home_network_id{kDefaultHomeNetworkId};
    std::uint8_t home_key_scheme = 0x01;
    bool merged_errors = false;
    ConcealmentLocation concealment = ConcealmentLocation::Me;
    std::vector<SubscriberConfig> subscribers;
    std::vector<ScriptOp> attacker_script;

    /// Throws ConfigError naming the offending field, e.g.
    /// "subscribers[1].k_bits: Phase2 requires 256-bit keys".
    static ScenarioConfig from_json(const nlohmann::json& j);
    static ScenarioConfig from_text(const std::string& text);

    /// Normalised form; from_json(to_json()) round-trips.
    nlohmann::json to_json() const;

    /// Re-checks the cross-field invariants. Throws ConfigError.
    void validate() const;
};

std::string_view to_string(AlgorithmSuite suite);

} // namespace pq5g
