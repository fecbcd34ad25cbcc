#include "pq5g/crypto.hpp"

#include "pq5g/error.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>

#include <memory>

namespace pq5g {

namespace {

struct MacDeleter {
    void operator()(EVP_MAC* p) const { EVP_MAC_free(p); }
    void operator()(EVP_MAC_CTX* p) const { EVP_MAC_CTX_free(p); }
};

// One fetched HMAC context per thread; EVP_MAC_init with a new key reuses
// the digest binding, which is far cheaper than a fresh fetch per call.
class HmacContext {
public:
    HmacContext()
        : mac_(EVP_MAC_fetch(nullptr, "HMAC", nullptr))
    {
        if (!mac_)
            throw Error("HMAC unavailable in libcrypto");
        ctx_.reset(EVP_MAC_CTX_new(mac_.get()));
        if (!ctx_)
            throw Error("EVP_MAC_CTX_new failed");
        char digest[] = "SHA256";
        OSSL_PARAM params[] = {
            OSSL_PARAM_construct_utf8_string(OSSL_MAC_PARAM_DIGEST, digest, 0),
            OSSL_PARAM_construct_end(),
        };
        if (EVP_MAC_CTX_set_params(ctx_.get(), params) != 1)
            throw Error("cannot bind SHA256 to HMAC");
    }

    void init(ByteView key)
    {
        // HMAC rejects a null key pointer even at length zero.
        static const std::uint8_t empty = 0;
        const std::uint8_t* k = key.empty() ? &empty : key.data();
        if (EVP_MAC_init(ctx_.get(), k, key.size(), nullptr) != 1)
            throw Error("EVP_MAC_init failed");
    }

    void update(ByteView data)
    {
        if (!data.empty() && EVP_MAC_update(ctx_.get(), data.data(), data.size()) != 1)
            throw Error("EVP_MAC_update failed");
    }

    Block<32> final()
    {
        Block<32> out{};
        std::size_t len = 0;
        if (EVP_MAC_final(ctx_.get(), out.data(), &len, out.size()) != 1 || len != out.size())
            throw Error("EVP_MAC_final failed");
        return out;
    }

private:
    std::unique_ptr<EVP_MAC, MacDeleter> mac_;
    std::unique_ptr<EVP_MAC_CTX, MacDeleter> ctx_;
};

HmacContext& hmac_context()
{
    thread_local HmacContext ctx;
    return ctx;
}

// HMAC(key, tag || parts...)
template <typename... Parts>
Block<32> tagged_hmac(ByteView key, std::uint8_t tag, const Parts&... parts)
{
    auto& h = hmac_context();
    h.init(key);
    const std::uint8_t t[1] = {tag};
    h.update(t);
    (h.update(ByteView(parts)), ...);
    return h.final();
}

Block<6> sqn_bytes(std::uint64_t sqn)
{
    if (sqn > kSqnMax)
        throw DomainError("SQN exceeds 48 bits");
    Block<6> out{};
    for (int i = 0; i < 6; ++i)
        out[5 - i] = static_cast<std::uint8_t>(sqn >> (8 * i));
    return out;
}

std::uint8_t bearer_direction(std::uint8_t bearer, Direction direction)
{
    if (bearer > kMaxBearer)
        throw DomainError("bearer identifier must fit in 5 bits");
    return static_cast<std::uint8_t>((bearer << 3) | (static_cast<std::uint8_t>(direction) << 2));
}

Block<4> count_bytes(std::uint32_t count)
{
    return {static_cast<std::uint8_t>(count >> 24), static_cast<std::uint8_t>(count >> 16),
            static_cast<std::uint8_t>(count >> 8), static_cast<std::uint8_t>(count)};
}

} // namespace

Block<32> sha256(ByteView data)
{
    Block<32> out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("EVP_Digest failed");
    return out;
}

Block<32> hmac_sha256(ByteView key, ByteView data)
{
    auto& h = hmac_context();
    h.init(key);
    h.update(data);
    return h.final();
}

SecretKey::SecretKey(Bytes bytes)
    : bytes_(std::move(bytes))
{
    if (bytes_.size() != 16 && bytes_.size() != 32)
        throw LengthError("secret key K must be 128 or 256 bits, got " + std::to_string(bytes_.size() * 8));
}

bool suite_supports(AlgorithmSuite suite, int key_bits) noexcept
{
    switch (suite) {
    case AlgorithmSuite::Reference128:
        return key_bits == 128;
    case AlgorithmSuite::Reference256:
        return key_bits == 128 || key_bits == 256;
    }
    return false;
}

void require_supported(AlgorithmSuite suite, const SecretKey& k)
{
    if (!suite_supports(suite, k.bits()))
        throw ConfigError("algorithm suite does not accept a " + std::to_string(k.bits()) + "-bit key");
}

Bytes kdf_input(const KdfLabel& label)
{
    Bytes s;
    s.push_back(label.fc);
    for (const auto& p : label.params) {
        if (p.size() > 0xFFFF)
            throw LengthError("KDF parameter longer than 65535 bytes");
        append(s, p);
        s.push_back(static_cast<std::uint8_t>(p.size() >> 8));
        s.push_back(static_cast<std::uint8_t>(p.size()));
    }
    return s;
}

Block<32> kdf(ByteView key, const KdfLabel& label)
{
    if (key.empty())
        throw LengthError("KDF key must be non-empty");
    return hmac_sha256(key, kdf_input(label));
}

Block<8> f1(AlgorithmSuite suite, const SecretKey& k, const Rand& rand, std::uint64_t sqn, const Amf& amf)
{
    require_supported(suite, k);
    return leading<8>(tagged_hmac(k.bytes(), 0x01, rand, sqn_bytes(sqn), amf));
}

Block<8> f1_star(AlgorithmSuite suite, const SecretKey& k, const Rand& rand, std::uint64_t sqn, const Amf& amf)
{
    require_supported(suite, k);
    return leading<8>(tagged_hmac(k.bytes(), 0x02, rand, sqn_bytes(sqn), amf));
}

Block<16> f2(AlgorithmSuite suite, const SecretKey& k, const Rand& rand)
{
    require_supported(suite, k);
    return leading<16>(tagged_hmac(k.bytes(), 0x03, rand));
}

Block<16> f3(AlgorithmSuite suite, const SecretKey& k, const Rand& rand)
{
    require_supported(suite, k);
    return leading<16>(tagged_hmac(k.bytes(), 0x04, rand));
}

Block<16> f4(AlgorithmSuite suite, const SecretKey& k, const Rand& rand)
{
    require_supported(suite, k);
    return leading<16>(tagged_hmac(k.bytes(), 0x05, rand));
}

Block<6> f5(AlgorithmSuite suite, const SecretKey& k, const Rand& rand)
{
    require_supported(suite, k);
    return leading<6>(tagged_hmac(k.bytes(), 0x06, rand));
}

F2345 f2345(AlgorithmSuite suite, const SecretKey& k, const Rand& rand)
{
    return {f2(suite, k, rand), f3(suite, k, rand), f4(suite, k, rand), f5(suite, k, rand)};
}

Block<6> f5_star(AlgorithmSuite suite, const SecretKey& k, const Rand& rand)
{
    require_supported(suite, k);
    return leading<6>(tagged_hmac(k.bytes(), 0x07, rand));
}

Bytes keystream(ByteView key, std::uint32_t count, std::uint8_t bearer, Direction direction, std::size_t length)
{
    const std::uint8_t bd[1] = {bearer_direction(bearer, direction)};
    const auto c = count_bytes(count);
    Bytes out;
    out.reserve(length + 32);
    for (std::uint32_t i = 0; out.size() < length; ++i) {
        auto block = tagged_hmac(key, 0x10, c, bd, count_bytes(i));
        append(out, block);
    }
    out.resize(length);
    return out;
}

Block<4> mac32(ByteView key, std::uint32_t count, std::uint8_t bearer, Direction direction, ByteView message)
{
    const std::uint8_t bd[1] = {bearer_direction(bearer, direction)};
    return leading<4>(tagged_hmac(key, 0x11, count_bytes(count), bd, message));
}

} // namespace pq5g
