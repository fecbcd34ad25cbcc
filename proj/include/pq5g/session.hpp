#pragma once

// Per-stratum session protection. NAS and RRC are encrypt-then-MAC (tag over
// ciphertext); the user plane is MAC-then-encrypt (tag over plaintext).

#include "pq5g/crypto.hpp"
#include "pq5g/key_hierarchy.hpp"

#include <array>
#include <optional>

namespace pq5g {

struct ProtectedPdu {
    Stratum stratum = Stratum::Nas;
    std::uint32_t count = 0;
    std::uint8_t bearer = 0;
    Direction direction = Direction::Uplink;
    Bytes payload;
    Block<4> mac{};

    friend bool operator==(const ProtectedPdu&, const ProtectedPdu&) = default;
};

inline constexpr std::uint64_t kCountLimit = std::uint64_t{1} << 32;

class SessionChannel {
public:
    SessionChannel(Stratum stratum, KeyPair keys);

    Stratum stratum() const noexcept { return stratum_; }
    const KeyPair& keys() const noexcept { return keys_; }

    /// Next COUNT the channel will use to send in `d`.
    std::uint64_t next_count(Direction d) const noexcept { return tx_[index(d)]; }
    std::optional<std::uint32_t> last_received(Direction d) const noexcept { return rx_[index(d)]; }

    // Test hook for exhaustion handling.
    void set_next_count(Direction d, std::uint64_t count) { tx_[index(d)] = count; }

    friend bool operator==(const SessionChannel&, const SessionChannel&) = default;

private:
    friend ProtectedPdu protect_pdu(SessionChannel&, ByteView, std::uint8_t, Direction);
    friend Bytes unprotect_pdu(SessionChannel&, const ProtectedPdu&);

    static std::size_t index(Direction d) noexcept { return static_cast<std::size_t>(d); }

    Stratum stratum_;
    KeyPair keys_;
    std::array<std::uint64_t, 2> tx_{0, 0};
    std::array<std::optional<std::uint32_t>, 2> rx_{};
};

/// Throws ChannelExpired once COUNT for `direction` reaches 2^32.
ProtectedPdu protect_pdu(SessionChannel& channel, ByteView plaintext, std::uint8_t bearer, Direction direction);

/// Throws ReplayError for a COUNT not above the last accepted one in that
/// direction, IntegrityError on tag mismatch. State only advances on success.
Bytes unprotect_pdu(SessionChannel& channel, const ProtectedPdu& pdu);

} // namespace pq5g
