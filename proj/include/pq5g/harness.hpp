#pragma once

// Desk-scale attacks against captured traces and a live simulated network.
//
// Key recovery searches an effective keyspace: the true key with its leading
// `effective_bits` unknown and everything else fixed. Candidates run through
// the unmodified primitive pipeline, so the attacked code path is the honest
// one. The whole space is always enumerated; queries = 2^effective_bits
// regardless of how the space is partitioned across threads.

#include "pq5g/network.hpp"
#include "pq5g/trace.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pq5g {

enum class AttackKind : std::uint8_t {
    HandshakeKeyRecovery,
    KeystreamKeyRecovery,
    LinkabilityReplay,
    SqnLeak,
    SuciCompromise,
};

std::string_view to_string(AttackKind kind);

struct AttackReport {
    AttackKind attack = AttackKind::HandshakeKeyRecovery;
    bool success = false;
    std::uint64_t queries = 0;     // classical oracle queries actually made
    std::uint64_t grover_cost = 0; // expected Grover queries for the same space
    std::optional<Bytes> recovered;
    std::string notes;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
};

inline constexpr int kMinEffectiveBits = 1;
inline constexpr int kMaxEffectiveBits = 32;

struct EffectiveKeySpec {
    int effective_bits = 20;
    Bytes fixed_suffix; // full key length; the leading effective_bits are ignored

    /// Key with its leading bits replaced by `candidate` (big-endian).
    SecretKey candidate(std::uint64_t candidate) const;
    std::uint64_t space() const { return std::uint64_t{1} << effective_bits; }

    /// Throws DomainError for bits outside 1..32 or a suffix that is not a key length.
    void validate() const;

    /// Spec whose search space contains `key`: its leading bits zeroed.
    static EffectiveKeySpec around(const SecretKey& key, int effective_bits);
};

struct SearchOptions {
    unsigned partitions = 1; // disjoint candidate ranges searched concurrently
};

// --- Handshake: one (RAND, AUTN, RES*) pair ---

struct HandshakeIntercept {
    Rand rand{};
    Autn autn;
    Block<16> res_star{};
    Bytes sn_name;
};

/// Last completed challenge-response for `ue` in the trace. Throws
/// EvidenceError naming the missing message type.
HandshakeIntercept handshake_intercept(const Trace& trace, const std::string& ue);

/// Recomputes RES* and the AUTN MAC from public inputs only.
bool verify_handshake_key(const HandshakeIntercept& in, const SecretKey& k, AlgorithmSuite suite);

AttackReport handshake_key_recovery(const HandshakeIntercept& in, const EffectiveKeySpec& spec, AlgorithmSuite suite,
                                    SearchOptions options = {});

// --- Keystream: one protected PDU with known plaintext ---

inline constexpr std::size_t kMinKnownPlaintext = 8;

struct KeystreamIntercept {
    std::optional<Rand> rand;
    std::optional<Autn> autn;
    Bytes sn_name;
    Bytes supi;
    Stratum stratum = Stratum::Nas;
    std::uint32_t count = 0;
    std::uint8_t bearer = 0;
    Direction direction = Direction::Uplink;
    Bytes ciphertext;
    Bytes known_plaintext; // aligned with the start of ciphertext
};

/// First uplink NAS PDU of `ue` after its last AuthRequest, with the
/// predictable RegistrationComplete as known plaintext (first
/// `known_bytes` bytes). `supi` is the subscriber identity, assumed known.
KeystreamIntercept keystream_intercept(const Trace& trace, const std::string& ue, ByteView supi,
                                       std::size_t known_bytes = 16);

bool verify_keystream_key(const KeystreamIntercept& in, const SecretKey& k, AlgorithmSuite suite,
                          MigrationPhase phase);

/// Throws EvidenceError("AuthRequest") without RAND or AUTN and
/// EvidenceError("known-plaintext") below kMinKnownPlaintext bytes.
AttackReport keystream_key_recovery(const KeystreamIntercept& in, const EffectiveKeySpec& spec, AlgorithmSuite suite,
                                    MigrationPhase phase, SearchOptions options = {});

// --- Active attacks against a live network ---

/// Replays AuthRequest number `capture` (trace order) to every probe and
/// classifies a probe as the original recipient iff it answers with
/// SyncFailureMsg. When every answer looks alike, the attacker can only
/// guess (seeded by `guess_seed`) and the report flags the attack defeated.
AttackReport linkability_replay(Network& net, std::size_t capture, const std::vector<std::string>& probes,
                                std::uint64_t guess_seed = 0);

/// Replays AuthRequest `capture` to `target` `replays` times, letting the
/// target re-authenticate in between when `advance` is set. Consecutive
/// AUTS concealed-SQN fields XOR to SQN_i ^ SQN_j, checked against the
/// simulator's USIM state.
AttackReport sqn_leak(Network& net, std::size_t capture, const std::string& target, int replays, bool advance = true);

// --- Identity ---

/// Decrypts every captured SUCI with `home_private_key`, looking the scheme
/// up by the SUCI's scheme id. `expected` maps UE ids to their true SUPIs.
AttackReport suci_compromise(const Trace& trace, ByteView home_private_key,
                             const std::map<std::string, std::string>& expected);

std::map<std::string, std::string> ground_truth_supis(const ScenarioConfig& config);

// --- Dispatch by name (CLI and scenario scripts) ---

/// Passive attacks (handshake-recovery, keystream-recovery, suci-compromise)
/// read `evidence`; active ones drive `net`. Ground truth needed to set up
/// the effective keyspace or score the result comes from `net`.
///
/// params: ue (index), effective_bits, partitions, known_bytes,
/// withhold_rand, capture, probes (indices), replays, advance.
AttackReport run_attack(Network& net, const Trace& evidence, const std::string& name, const nlohmann::json& params);

bool is_passive_attack(const std::string& name);

/// Kind for a CLI/script attack name. Throws ConfigError for unknown names.
AttackKind attack_kind(const std::string& name);

} // namespace pq5g
