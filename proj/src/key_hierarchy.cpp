#include "pq5g/key_hierarchy.hpp"

#include "pq5g/crypto.hpp"
#include "pq5g/error.hpp"

namespace pq5g {

std::string_view to_string(MigrationPhase phase)
{
    switch (phase) {
    case MigrationPhase::Legacy:
        return "legacy";
    case MigrationPhase::Phase1:
        return "phase1";
    case MigrationPhase::Phase2:
        return "phase2";
    }
    return "?";
}

std::optional<MigrationPhase> parse_phase(std::string_view text)
{
    for (auto p : {MigrationPhase::Legacy, MigrationPhase::Phase1, MigrationPhase::Phase2})
        if (to_string(p) == text)
            return p;
    return std::nullopt;
}

std::string_view to_string(Stratum stratum)
{
    switch (stratum) {
    case Stratum::Nas:
        return "NAS";
    case Stratum::Rrc:
        return "RRC";
    case Stratum::Up:
        return "UP";
    }
    return "?";
}

Block<32> derive_k_amf(const Block<32>& k_seaf, ByteView supi)
{
    return kdf(k_seaf, {fc::k_amf, {to_bytes(supi)}});
}

Block<32> derive_k_gnb(const Block<32>& k_amf, std::uint32_t nas_uplink_count)
{
    return kdf(k_amf, {fc::k_gnb, {be_bytes(nas_uplink_count, 4)}});
}

Bytes derive_operational_key(const OperationalParent& parent, KeyType type, std::uint8_t algo_id,
                             MigrationPhase phase)
{
    const bool nas = type == KeyType::NasEnc || type == KeyType::NasInt;
    const Block<32>* key = nullptr;
    if (nas && std::holds_alternative<KAmf>(parent))
        key = &std::get<KAmf>(parent).bytes;
    else if (!nas && std::holds_alternative<KGnb>(parent))
        key = &std::get<KGnb>(parent).bytes;
    else
        throw ConfigError(nas ? "NAS keys derive from K_AMF" : "RRC and UP keys derive from K_gNB");

    auto full = kdf(*key, {fc::operational, {Bytes{static_cast<std::uint8_t>(type)}, Bytes{algo_id}}});
    return Bytes(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(operational_key_length(phase)));
}

KeyPair derive_operational_pair(const OperationalParent& parent, Stratum stratum, std::uint8_t algo_id,
                                MigrationPhase phase)
{
    KeyType i{}, e{};
    switch (stratum) {
    case Stratum::Nas:
        i = KeyType::NasInt, e = KeyType::NasEnc;
        break;
    case Stratum::Rrc:
        i = KeyType::RrcInt, e = KeyType::RrcEnc;
        break;
    case Stratum::Up:
        i = KeyType::UpInt, e = KeyType::UpEnc;
        break;
    }
    return {derive_operational_key(parent, i, algo_id, phase), derive_operational_key(parent, e, algo_id, phase)};
}

const KeyPair& KeyContext::keys_for(Stratum s) const
{
    switch (s) {
    case Stratum::Nas:
        return nas;
    case Stratum::Rrc:
        return rrc;
    case Stratum::Up:
        break;
    }
    return up;
}

KeyContext build_key_context(const Block<32>& k_seaf, ByteView supi, MigrationPhase phase, std::uint8_t algo_id)
{
    KeyContext ctx;
    ctx.k_seaf = k_seaf;
    ctx.k_amf = derive_k_amf(k_seaf, supi);
    ctx.k_gnb = derive_k_gnb(ctx.k_amf, 0);
    ctx.nas = derive_operational_pair(KAmf{ctx.k_amf}, Stratum::Nas, algo_id, phase);
    ctx.rrc = derive_operational_pair(KGnb{ctx.k_gnb}, Stratum::Rrc, algo_id, phase);
    ctx.up = derive_operational_pair(KGnb{ctx.k_gnb}, Stratum::Up, algo_id, phase);
    return ctx;
}

} // namespace pq5g
