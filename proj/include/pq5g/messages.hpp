#pragma once

// Wire messages and their canonical byte encoding. Every message starts with
// a one-byte type code; variable-length fields carry a two-byte big-endian
// length prefix, fixed-width fields are raw.

#include "pq5g/auth_vectors.hpp"
#include "pq5g/identity.hpp"
#include "pq5g/session.hpp"

#include <string>
#include <variant>

namespace pq5g {

// --- UE <-> SEAF (air interface) ---

struct RegistrationRequest {
    std::variant<Suci, Guti> identity;
    friend bool operator==(const RegistrationRequest&, const RegistrationRequest&) = default;
};

struct IdentityRequest {
    friend bool operator==(const IdentityRequest&, const IdentityRequest&) = default;
};

struct AuthRequest {
    Rand rand{};
    Autn autn;
    friend bool operator==(const AuthRequest&, const AuthRequest&) = default;
};

struct AuthResponse {
    Block<16> res_star{};
    friend bool operator==(const AuthResponse&, const AuthResponse&) = default;
};

struct MacFailureMsg {
    friend bool operator==(const MacFailureMsg&, const MacFailureMsg&) = default;
};

struct SyncFailureMsg {
    Block<14> auts{};
    friend bool operator==(const SyncFailureMsg&, const SyncFailureMsg&) = default;
};

// Single failure message used when MAC and SQN failures are merged. The
// token is AUTS for a sync failure and random bytes for a MAC failure.
struct AuthFailureMsg {
    Block<14> token{};
    friend bool operator==(const AuthFailureMsg&, const AuthFailureMsg&) = default;
};

struct AuthResult {
    bool success = false;
    friend bool operator==(const AuthResult&, const AuthResult&) = default;
};

// --- SEAF <-> AUSF <-> ARPF (home/serving link) ---

struct ResyncInfo {
    Rand rand{};
    Block<14> auts{};
    friend bool operator==(const ResyncInfo&, const ResyncInfo&) = default;
};

struct AvRequest {
    std::uint32_t context = 0;
    std::variant<Suci, Supi> identity;
    Bytes sn_name;
    std::optional<ResyncInfo> resync;
    friend bool operator==(const AvRequest&, const AvRequest&) = default;
};

struct AvResponse {
    std::uint32_t context = 0;
    HeAV he_av;
    Supi supi;
    friend bool operator==(const AvResponse&, const AvResponse&) = default;
};

struct AvReject {
    std::uint32_t context = 0;
    std::string reason;
    friend bool operator==(const AvReject&, const AvReject&) = default;
};

// First three elements of the 5G AV, AUSF -> SEAF.
struct ServingAvDelivery {
    std::uint32_t context = 0;
    Rand rand{};
    Autn autn;
    Block<16> hxres_star{};
    friend bool operator==(const ServingAvDelivery&, const ServingAvDelivery&) = default;
};

struct AuthConfirm {
    std::uint32_t context = 0;
    Block<16> res_star{};
    friend bool operator==(const AuthConfirm&, const AuthConfirm&) = default;
};

struct AuthConfirmAck {
    std::uint32_t context = 0;
    bool success = false;
    std::optional<Supi> supi;
    std::optional<Block<32>> k_seaf;
    friend bool operator==(const AuthConfirmAck&, const AuthConfirmAck&) = default;
};

using ProtocolMessage =
    std::variant<RegistrationRequest, IdentityRequest, AuthRequest, AuthResponse, MacFailureMsg, SyncFailureMsg,
                 AuthFailureMsg, AuthResult, ProtectedPdu, AvRequest, AvResponse, AvReject, ServingAvDelivery,
                 AuthConfirm, AuthConfirmAck>;

std::string message_type(const ProtocolMessage& msg);

/// True for messages that travel over the UE <-> SEAF air interface.
bool is_air_message(const ProtocolMessage& msg);

Bytes encode(const ProtocolMessage& msg);

/// Throws FormatError for unknown type codes or malformed bodies.
ProtocolMessage decode(ByteView bytes);

// --- NAS payloads carried inside protected NAS PDUs ---

struct GutiAssignment {
    Guti guti{};
    friend bool operator==(const GutiAssignment&, const GutiAssignment&) = default;
};

struct RegistrationComplete {
    friend bool operator==(const RegistrationComplete&, const RegistrationComplete&) = default;
};

using NasPayload = std::variant<GutiAssignment, RegistrationComplete>;

Bytes encode_nas(const NasPayload& payload);
NasPayload decode_nas(ByteView bytes);

/// The fixed plaintext of a RegistrationComplete; predictable to anyone who
/// knows the protocol.
Bytes registration_complete_plaintext();

} // namespace pq5g
