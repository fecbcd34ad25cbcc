#pragma once

// Authentication vectors (3G/4G base AV, 5G HE AV, 5G serving AV) and the
// UE-side processing that mirrors them.

#include "pq5g/crypto.hpp"
#include "pq5g/identity.hpp"

#include <optional>
#include <variant>

namespace pq5g {

inline constexpr Amf kDefaultAmf = {0x80, 0x00};
inline constexpr std::uint64_t kDefaultMaxSqnJump = std::uint64_t{1} << 28;

struct Autn {
    Block<6> sqn_xor_ak{};
    Amf amf{};
    Block<8> mac{};

    Block<16> serialize() const;
    static Autn parse(ByteView bytes); // throws FormatError unless 16 bytes

    friend bool operator==(const Autn&, const Autn&) = default;
};

struct BaseAV {
    Rand rand{};
    Block<16> xres{};
    Block<16> ck{};
    Block<16> ik{};
    Autn autn;

    friend bool operator==(const BaseAV&, const BaseAV&) = default;
};

struct HeAV {
    Rand rand{};
    Autn autn;
    Block<16> xres_star{};
    Block<32> k_ausf{};

    friend bool operator==(const HeAV&, const HeAV&) = default;
};

struct ServingAV {
    Rand rand{};
    Autn autn;
    Block<16> hxres_star{};
    Block<32> k_seaf{};

    friend bool operator==(const ServingAV&, const ServingAV&) = default;
};

// Home-side long-term state. `sqn` is the last SQN issued.
struct SubscriberRecord {
    Supi supi;
    SecretKey k;
    std::uint64_t sqn = 0;
    Amf amf = kDefaultAmf;
    AlgorithmSuite suite = AlgorithmSuite::Reference128;
    std::uint64_t sqn_step = 1;
};

/// Advances `subscriber.sqn` by its step and builds the AV for the new SQN.
BaseAV generate_base_av(SubscriberRecord& subscriber, const Rand& rand);

Block<16> derive_xres_star(const Block<16>& ck, const Block<16>& ik, const Rand& rand, const Block<16>& xres,
                           ByteView sn_name);

Block<32> derive_k_ausf(const Block<16>& ck, const Block<16>& ik, const Block<6>& sqn_xor_ak, ByteView sn_name);

Block<32> derive_k_seaf(const Block<32>& k_ausf, ByteView sn_name);

/// Leading 16 bytes of SHA-256(rand || res_star); HXRES* when applied to XRES*.
Block<16> hash_res_star(const Rand& rand, const Block<16>& res_star);

HeAV build_he_av(const BaseAV& base, ByteView sn_name);

ServingAV reduce_to_serving_av(const HeAV& he_av, ByteView sn_name);

struct UsimState {
    SecretKey k;
    AlgorithmSuite suite = AlgorithmSuite::Reference128;
    std::uint64_t highest_sqn = 0;
    std::uint64_t max_sqn_jump = kDefaultMaxSqnJump;
};

namespace challenge {

struct Success {
    Block<16> res{};
    Block<16> ck{};
    Block<16> ik{};
};

struct MacFailure {};

struct SyncFailure {
    Block<14> auts{};
};

} // namespace challenge

using UsimChallengeResult = std::variant<challenge::Success, challenge::MacFailure, challenge::SyncFailure>;

// AMF value bound into MAC-S. Resynchronisation uses a dummy all-zero AMF so
// the home side can verify AUTS from K and RAND alone.
inline constexpr Amf kResyncAmf = {0x00, 0x00};

/// MAC check first, then freshness: SQN must exceed the highest accepted
/// value by at most `max_sqn_jump`. Success advances the window.
UsimChallengeResult usim_process_challenge(UsimState& usim, const Rand& rand, const Autn& autn);

/// Home-side AUTS check: returns SQN_MS when MAC-S verifies.
std::optional<std::uint64_t> recover_sqn_from_auts(AlgorithmSuite suite, const SecretKey& k, const Rand& rand,
                                                   const Block<14>& auts);

struct MeResponse {
    Block<16> res_star{};
    Block<32> k_ausf{};
    Block<32> k_seaf{};
};

MeResponse me_compute_response(const Block<16>& ck, const Block<16>& ik, const Block<16>& res, const Rand& rand,
                               const Autn& autn, ByteView sn_name);

} // namespace pq5g
