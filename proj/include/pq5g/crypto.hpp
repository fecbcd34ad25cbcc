#pragma once

// Reference primitive suite: the generic KDF, f1..f5 / f1* / f5*, the
// session keystream generator and the 32-bit integrity MAC. Everything is
// one HMAC-SHA-256 family separated by a leading one-byte domain tag.
//
//   tag   function           output
//   0x01  f1   (MAC-A)       8 bytes
//   0x02  f1*  (MAC-S)       8 bytes
//   0x03  f2   (RES/XRES)    16 bytes
//   0x04  f3   (CK)          16 bytes
//   0x05  f4   (IK)          16 bytes
//   0x06  f5   (AK)          6 bytes
//   0x07  f5*  (AK*)         6 bytes
//   0x10  keystream block    32 bytes per block
//   0x11  mac32              4 bytes
//
// All truncations keep the leading bytes. SQN is serialised as 6 big-endian
// bytes.

#include "pq5g/bytes.hpp"

#include <cstdint>
#include <vector>

namespace pq5g {

Block<32> sha256(ByteView data);
Block<32> hmac_sha256(ByteView key, ByteView data);

class SecretKey {
public:
    /// Throws LengthError unless `bytes` is 16 or 32 bytes long.
    explicit SecretKey(Bytes bytes);

    int bits() const noexcept { return static_cast<int>(bytes_.size() * 8); }
    ByteView bytes() const noexcept { return bytes_; }

    friend bool operator==(const SecretKey&, const SecretKey&) = default;

private:
    Bytes bytes_;
};

enum class AlgorithmSuite : std::uint8_t { Reference128 = 1, Reference256 = 2 };

bool suite_supports(AlgorithmSuite suite, int key_bits) noexcept;

/// Throws ConfigError when the suite cannot take a key of this length.
void require_supported(AlgorithmSuite suite, const SecretKey& k);

struct KdfLabel {
    std::uint8_t fc = 0;
    std::vector<Bytes> params;
};

// FC values used across the hierarchy.
namespace fc {
inline constexpr std::uint8_t xres_star = 0x6B;
inline constexpr std::uint8_t k_ausf = 0x6C;
inline constexpr std::uint8_t k_seaf = 0x6D;
inline constexpr std::uint8_t k_amf = 0x6E;
inline constexpr std::uint8_t k_gnb = 0x6F;
inline constexpr std::uint8_t operational = 0x70;
inline constexpr std::uint8_t k_amf_horizontal = 0x71; // reserved, unused
} // namespace fc

/// S = FC || P0 || L0 || P1 || L1 ...; returns HMAC-SHA-256(key, S).
Block<32> kdf(ByteView key, const KdfLabel& label);

/// The KDF input string S, exposed for tracing and tests.
Bytes kdf_input(const KdfLabel& label);

inline constexpr std::uint64_t kSqnMax = (std::uint64_t{1} << 48) - 1;

using Rand = Block<16>;
using Amf = Block<2>;

Block<8> f1(AlgorithmSuite suite, const SecretKey& k, const Rand& rand, std::uint64_t sqn, const Amf& amf);
Block<8> f1_star(AlgorithmSuite suite, const SecretKey& k, const Rand& rand, std::uint64_t sqn, const Amf& amf);

struct F2345 {
    Block<16> xres;
    Block<16> ck;
    Block<16> ik;
    Block<6> ak;
};

F2345 f2345(AlgorithmSuite suite, const SecretKey& k, const Rand& rand);
Block<6> f5_star(AlgorithmSuite suite, const SecretKey& k, const Rand& rand);

// Individual functions; f2345 is their composition.
Block<16> f2(AlgorithmSuite suite, const SecretKey& k, const Rand& rand);
Block<16> f3(AlgorithmSuite suite, const SecretKey& k, const Rand& rand);
Block<16> f4(AlgorithmSuite suite, const SecretKey& k, const Rand& rand);
Block<6> f5(AlgorithmSuite suite, const SecretKey& k, const Rand& rand);

enum class Direction : std::uint8_t { Uplink = 0, Downlink = 1 };

inline constexpr std::uint8_t kMaxBearer = 31;

/// Counter-mode stream: block i = HMAC(key, 0x10 || COUNT || B || i), where
/// B = bearer << 3 | direction << 2. Throws DomainError for bearer > 31.
Bytes keystream(ByteView key, std::uint32_t count, std::uint8_t bearer, Direction direction, std::size_t length);

Block<4> mac32(ByteView key, std::uint32_t count, std::uint8_t bearer, Direction direction, ByteView message);

} // namespace pq5g
