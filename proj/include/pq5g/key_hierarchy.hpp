#pragma once

// Serving-network key hierarchy below K_SEAF:
//
//   K_SEAF -> K_AMF -> { K_NASint, K_NASenc, K_gNB -> { K_RRCint, K_RRCenc, K_UPint, K_UPenc } }
//
// Intermediate keys are always 256 bits. Operational keys are truncated to
// their leading 128 bits in Legacy and Phase1 and kept whole in Phase2.

#include "pq5g/bytes.hpp"

#include <optional>
#include <string_view>
#include <variant>

namespace pq5g {

enum class MigrationPhase : std::uint8_t { Legacy, Phase1, Phase2 };

std::string_view to_string(MigrationPhase phase);
std::optional<MigrationPhase> parse_phase(std::string_view text);

inline std::size_t operational_key_length(MigrationPhase phase)
{
    return phase == MigrationPhase::Phase2 ? 32 : 16;
}

// Algorithm type distinguishers carried in the operational-key KDF label.
enum class KeyType : std::uint8_t {
    NasEnc = 0x01,
    NasInt = 0x02,
    RrcEnc = 0x03,
    RrcInt = 0x04,
    UpEnc = 0x05,
    UpInt = 0x06,
};

struct KAmf {
    Block<32> bytes{};
};

struct KGnb {
    Block<32> bytes{};
};

using OperationalParent = std::variant<KAmf, KGnb>;

Block<32> derive_k_amf(const Block<32>& k_seaf, ByteView supi);

Block<32> derive_k_gnb(const Block<32>& k_amf, std::uint32_t nas_uplink_count);

/// NAS keys must come from K_AMF, RRC/UP keys from K_gNB; anything else is a
/// ConfigError.
Bytes derive_operational_key(const OperationalParent& parent, KeyType type, std::uint8_t algo_id,
                             MigrationPhase phase);

enum class Stratum : std::uint8_t { Nas = 0, Rrc = 1, Up = 2 };

std::string_view to_string(Stratum stratum);

struct KeyPair {
    Bytes integrity;
    Bytes encryption;

    friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

/// The (int, enc) pair for one stratum.
KeyPair derive_operational_pair(const OperationalParent& parent, Stratum stratum, std::uint8_t algo_id,
                                MigrationPhase phase);

inline constexpr std::uint8_t kDefaultAlgorithmId = 0x02;

struct KeyContext {
    std::optional<Block<32>> k_seaf; // cleared once K_AMF exists
    Block<32> k_amf{};
    Block<32> k_gnb{};
    KeyPair nas;
    KeyPair rrc;
    KeyPair up;

    const KeyPair& keys_for(Stratum s) const;

    void erase_anchor() { k_seaf.reset(); }

    friend bool operator==(const KeyContext&, const KeyContext&) = default;
};

KeyContext build_key_context(const Block<32>& k_seaf, ByteView supi, MigrationPhase phase,
                             std::uint8_t algo_id = kDefaultAlgorithmId);

} // namespace pq5g
