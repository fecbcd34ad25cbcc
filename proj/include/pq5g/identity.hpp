#pragma once

// Subscriber identity privacy: SUPI concealment into SUCIs through
// pluggable protection schemes, and the serving network's GUTI map.

#include "pq5g/bytes.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string_view>

namespace pq5g {

inline constexpr std::size_t kMaxSupiLength = 64;

class Supi {
public:
    /// Throws LengthError for an empty value or one longer than 64 bytes.
    Supi(Bytes value, Bytes home_network_id);
    Supi(std::string_view value, std::string_view home_network_id);

    const Bytes& value() const noexcept { return value_; }
    const Bytes& home_network_id() const noexcept { return home_network_id_; }
    std::string str() const { return to_string(value_); }

    friend bool operator==(const Supi&, const Supi&) = default;
    friend auto operator<=>(const Supi&, const Supi&) = default;

private:
    Bytes value_;
    Bytes home_network_id_;
};

struct Suci {
    Bytes home_network_id;
    std::uint8_t scheme_id = 0;
    Bytes ciphertext;

    Bytes serialize() const;
    static Suci parse(ByteView bytes);

    friend bool operator==(const Suci&, const Suci&) = default;
};

struct SchemeKeyPair {
    Bytes public_key;
    Bytes private_key;
};

namespace scheme_id {
inline constexpr std::uint8_t ecies = 0x01;
inline constexpr std::uint8_t pq_slot = 0x02;
} // namespace scheme_id

class ProtectionScheme {
public:
    virtual ~ProtectionScheme() = default;

    virtual std::uint8_t id() const noexcept = 0;
    virtual std::string_view name() const noexcept = 0;

    /// Deterministic in `seed` (at least 32 bytes).
    virtual SchemeKeyPair generate_key_pair(ByteView seed) const = 0;

    /// Randomised through `randomness` (at least 32 bytes); deterministic given it.
    virtual Bytes conceal(ByteView public_key, ByteView plaintext, ByteView randomness) const = 0;

    /// Throws DecryptionError on a wrong key or any corruption.
    virtual Bytes reveal(ByteView private_key, ByteView ciphertext) const = 0;
};

// Ephemeral-static ECDH over a named curve, KDF to an encryption and a MAC
// key, HMAC-counter stream encryption, 64-bit tag over eph_pub || ct.
// Ciphertext layout: compressed ephemeral point || ct || tag.
class EciesScheme final : public ProtectionScheme {
public:
    /// `curve_nid` is an OpenSSL curve NID; prime256v1 by default.
    explicit EciesScheme(int curve_nid = 0);

    std::uint8_t id() const noexcept override { return scheme_id::ecies; }
    std::string_view name() const noexcept override { return "ecies"; }

    SchemeKeyPair generate_key_pair(ByteView seed) const override;
    Bytes conceal(ByteView public_key, ByteView plaintext, ByteView randomness) const override;
    Bytes reveal(ByteView private_key, ByteView ciphertext) const override;

    int curve_nid() const noexcept { return curve_nid_; }

private:
    int curve_nid_;
};

// Occupies the post-quantum KEM slot with a symmetric stand-in: the "public"
// key is the home network's shared secret. Simulation only; it has no
// public-key security whatsoever.
class PqSlotStandInScheme final : public ProtectionScheme {
public:
    std::uint8_t id() const noexcept override { return scheme_id::pq_slot; }
    std::string_view name() const noexcept override { return "pq-slot-standin-simulation-only"; }

    SchemeKeyPair generate_key_pair(ByteView seed) const override;
    Bytes conceal(ByteView public_key, ByteView plaintext, ByteView randomness) const override;
    Bytes reveal(ByteView private_key, ByteView ciphertext) const override;
};

class SchemeRegistry {
public:
    void add(std::shared_ptr<const ProtectionScheme> scheme);

    /// Throws SchemeNotFound.
    const ProtectionScheme& find(std::uint8_t id) const;
    bool contains(std::uint8_t id) const { return schemes_.count(id) != 0; }

    /// ECIES (0x01) and the PQ-slot stand-in (0x02).
    static const SchemeRegistry& standard();

private:
    std::map<std::uint8_t, std::shared_ptr<const ProtectionScheme>> schemes_;
};

Suci conceal_supi(const Supi& supi, ByteView home_public_key, const ProtectionScheme& scheme, ByteView randomness);

/// Throws SchemeNotFound for an unregistered id.
Suci conceal_supi(const Supi& supi, ByteView home_public_key, const SchemeRegistry& registry, std::uint8_t scheme,
                  ByteView randomness);

/// Throws SchemeNotFound or DecryptionError (never returns a wrong SUPI).
Supi reveal_suci(const Suci& suci, ByteView home_private_key, const SchemeRegistry& registry);

using Guti = Block<10>;

// Serving network's temporary-identity map. Freshness holds across
// reset(): issued GUTIs are never handed out again.
class ServingIdentityState {
public:
    explicit ServingIdentityState(std::uint64_t salt = 0) : salt_(salt) {}

    void mark_authenticated(const Supi& supi) { authenticated_.insert(supi); }
    bool is_authenticated(const Supi& supi) const { return authenticated_.count(supi) != 0; }

    /// Throws StateError when `supi` has not authenticated.
    Guti assign(const Supi& supi);
    std::optional<Supi> resolve(const Guti& guti) const;

    /// Forgets the map and authentication state.
    void reset();

    std::size_t size() const { return map_.size(); }

private:
    std::uint64_t salt_;
    std::uint64_t counter_ = 0;
    std::set<Supi> authenticated_;
    std::map<Guti, Supi> map_;
    std::set<Guti> issued_;
};

inline Guti assign_guti(ServingIdentityState& state, const Supi& supi) { return state.assign(supi); }

inline std::optional<Supi> resolve_guti(const ServingIdentityState& state, const Guti& guti)
{
    return state.resolve(guti);
}

} // namespace pq5g
