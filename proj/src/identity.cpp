#include "pq5g/identity.hpp"

#include "pq5g/crypto.hpp"
#include "pq5g/error.hpp"

#include <openssl/bn.h>
#include <openssl/crypto.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

namespace pq5g {

Supi::Supi(Bytes value, Bytes home_network_id)
    : value_(std::move(value))
    , home_network_id_(std::move(home_network_id))
{
    if (value_.empty())
        throw LengthError("SUPI must be non-empty");
    if (value_.size() > kMaxSupiLength)
        throw LengthError("SUPI longer than 64 bytes");
}

Supi::Supi(std::string_view value, std::string_view home_network_id)
    : Supi(to_bytes(value), to_bytes(home_network_id))
{
}

// home_network_id (len-prefixed) || scheme id || ciphertext (len-prefixed)
Bytes Suci::serialize() const
{
    const Bytes hn_len{static_cast<std::uint8_t>(home_network_id.size())};
    const Bytes id{scheme_id};
    return concat({hn_len, home_network_id, id, be_bytes(ciphertext.size(), 2), ciphertext});
}

Suci Suci::parse(ByteView bytes)
{
    auto fail = [] { return FormatError("truncated SUCI"); };
    if (bytes.empty())
        throw fail();
    std::size_t pos = 0;
    std::size_t hn_len = bytes[pos++];
    if (bytes.size() < pos + hn_len + 3)
        throw fail();
    Suci s;
    s.home_network_id = to_bytes(bytes.subspan(pos, hn_len));
    pos += hn_len;
    s.scheme_id = bytes[pos++];
    std::size_t ct_len = be_value(bytes.subspan(pos, 2));
    pos += 2;
    if (bytes.size() != pos + ct_len)
        throw FormatError("SUCI length mismatch");
    s.ciphertext = to_bytes(bytes.subspan(pos, ct_len));
    return s;
}

namespace {

struct BnDeleter {
    void operator()(BIGNUM* p) const { BN_clear_free(p); }
    void operator()(BN_CTX* p) const { BN_CTX_free(p); }
    void operator()(EC_GROUP* p) const { EC_GROUP_free(p); }
    void operator()(EC_POINT* p) const { EC_POINT_free(p); }
};

using BnPtr = std::unique_ptr<BIGNUM, BnDeleter>;
using BnCtxPtr = std::unique_ptr<BN_CTX, BnDeleter>;
using GroupPtr = std::unique_ptr<EC_GROUP, BnDeleter>;
using PointPtr = std::unique_ptr<EC_POINT, BnDeleter>;

constexpr std::size_t kTagLength = 8;

class Curve {
public:
    explicit Curve(int nid)
        : group_(EC_GROUP_new_by_curve_name(nid))
        , ctx_(BN_CTX_new())
    {
        if (!group_ || !ctx_)
            throw ConfigError("unsupported curve");
        order_.reset(BN_new());
        EC_GROUP_get_order(group_.get(), order_.get(), ctx_.get());
        field_bytes_ = static_cast<std::size_t>((EC_GROUP_get_degree(group_.get()) + 7) / 8);
    }

    std::size_t field_bytes() const { return field_bytes_; }
    std::size_t point_bytes() const { return field_bytes_ + 1; }

    // d = (seed mod (n - 1)) + 1, never zero.
    BnPtr scalar_from(ByteView seed) const
    {
        if (seed.size() < 32)
            throw LengthError("EC scalar seed needs at least 32 bytes");
        BnPtr raw(BN_bin2bn(seed.data(), static_cast<int>(seed.size()), nullptr));
        BnPtr n1(BN_dup(order_.get()));
        BN_sub_word(n1.get(), 1);
        BnPtr d(BN_new());
        BN_nnmod(d.get(), raw.get(), n1.get(), ctx_.get());
        BN_add_word(d.get(), 1);
        return d;
    }

    BnPtr scalar_decode(ByteView bytes) const
    {
        BnPtr d(BN_bin2bn(bytes.data(), static_cast<int>(bytes.size()), nullptr));
        if (BN_is_zero(d.get()) || BN_cmp(d.get(), order_.get()) >= 0)
            throw DecryptionError("invalid private scalar");
        return d;
    }

    Bytes scalar_encode(const BIGNUM* d) const
    {
        Bytes out(field_bytes_);
        BN_bn2binpad(d, out.data(), static_cast<int>(out.size()));
        return out;
    }

    PointPtr mul_generator(const BIGNUM* d) const
    {
        PointPtr p(EC_POINT_new(group_.get()));
        if (EC_POINT_mul(group_.get(), p.get(), d, nullptr, nullptr, ctx_.get()) != 1)
            throw Error("EC_POINT_mul failed");
        return p;
    }

    // Returns the x-coordinate of d * P.
    Bytes shared_x(const BIGNUM* d, const EC_POINT* peer) const
    {
        PointPtr p(EC_POINT_new(group_.get()));
        if (EC_POINT_mul(group_.get(), p.get(), nullptr, peer, d, ctx_.get()) != 1 ||
            EC_POINT_is_at_infinity(group_.get(), p.get()))
            throw DecryptionError("ECDH failed");
        BnPtr x(BN_new());
        EC_POINT_get_affine_coordinates(group_.get(), p.get(), x.get(), nullptr, ctx_.get());
        Bytes out(field_bytes_);
        BN_bn2binpad(x.get(), out.data(), static_cast<int>(out.size()));
        return out;
    }

    Bytes encode(const EC_POINT* p) const
    {
        Bytes out(point_bytes());
        std::size_t n = EC_POINT_point2oct(group_.get(), p, POINT_CONVERSION_COMPRESSED, out.data(), out.size(),
                                           ctx_.get());
        if (n != out.size())
            throw Error("EC point encoding failed");
        return out;
    }

    // nullptr when `bytes` is not a valid point on the curve.
    PointPtr decode(ByteView bytes) const
    {
        PointPtr p(EC_POINT_new(group_.get()));
        if (EC_POINT_oct2point(group_.get(), p.get(), bytes.data(), bytes.size(), ctx_.get()) != 1)
            return nullptr;
        return p;
    }

private:
    GroupPtr group_;
    BnCtxPtr ctx_;
    BnPtr order_;
    std::size_t field_bytes_ = 0;
};

struct DemKeys {
    Block<32> enc;
    Block<32> mac;
};

DemKeys dem_keys(ByteView shared, ByteView binding, std::uint8_t fc)
{
    const Bytes b(binding.begin(), binding.end());
    return {kdf(shared, {fc, {b, Bytes{0x01}}}), kdf(shared, {fc, {b, Bytes{0x02}}})};
}

Bytes dem_seal(const DemKeys& keys, ByteView header, ByteView plaintext, std::size_t tag_len)
{
    Bytes ct = keystream(keys.enc, 0, 0, Direction::Uplink, plaintext.size());
    for (std::size_t i = 0; i < ct.size(); ++i)
        ct[i] ^= plaintext[i];
    Bytes out = concat({header, ct});
    auto tag = hmac_sha256(keys.mac, out);
    out.insert(out.end(), tag.begin(), tag.begin() + static_cast<std::ptrdiff_t>(tag_len));
    return out;
}

Bytes dem_open(const DemKeys& keys, ByteView sealed, std::size_t header_len, std::size_t tag_len)
{
    ByteView authed = sealed.first(sealed.size() - tag_len);
    ByteView tag = sealed.last(tag_len);
    auto expected = hmac_sha256(keys.mac, authed);
    if (CRYPTO_memcmp(expected.data(), tag.data(), tag_len) != 0)
        throw DecryptionError("SUCI tag mismatch");
    ByteView ct = authed.subspan(header_len);
    Bytes pt = keystream(keys.enc, 0, 0, Direction::Uplink, ct.size());
    for (std::size_t i = 0; i < pt.size(); ++i)
        pt[i] ^= ct[i];
    return pt;
}

} // namespace

EciesScheme::EciesScheme(int curve_nid)
    : curve_nid_(curve_nid == 0 ? NID_X9_62_prime256v1 : curve_nid)
{
    Curve probe(curve_nid_);
}

SchemeKeyPair EciesScheme::generate_key_pair(ByteView seed) const
{
    Curve curve(curve_nid_);
    auto d = curve.scalar_from(seed);
    auto q = curve.mul_generator(d.get());
    return {curve.encode(q.get()), curve.scalar_encode(d.get())};
}

Bytes EciesScheme::conceal(ByteView public_key, ByteView plaintext, ByteView randomness) const
{
    Curve curve(curve_nid_);
    auto home = curve.decode(public_key);
    if (!home)
        throw ConfigError("home network public key is not a valid curve point");
    auto eph = curve.scalar_from(randomness);
    Bytes eph_pub = curve.encode(curve.mul_generator(eph.get()).get());
    Bytes z = curve.shared_x(eph.get(), home.get());
    return dem_seal(dem_keys(z, eph_pub, 0x90), eph_pub, plaintext, kTagLength);
}

Bytes EciesScheme::reveal(ByteView private_key, ByteView ciphertext) const
{
    Curve curve(curve_nid_);
    if (ciphertext.size() < curve.point_bytes() + kTagLength)
        throw DecryptionError("SUCI ciphertext too short");
    ByteView eph_pub = ciphertext.first(curve.point_bytes());
    auto eph = curve.decode(eph_pub);
    if (!eph)
        throw DecryptionError("ephemeral key is not a valid curve point");
    auto d = curve.scalar_decode(private_key);
    Bytes z = curve.shared_x(d.get(), eph.get());
    return dem_open(dem_keys(z, eph_pub, 0x90), ciphertext, curve.point_bytes(), kTagLength);
}

namespace {
constexpr std::size_t kPqNonceLength = 16;
constexpr std::size_t kPqTagLength = 16;
} // namespace

SchemeKeyPair PqSlotStandInScheme::generate_key_pair(ByteView seed) const
{
    if (seed.size() < 32)
        throw LengthError("key seed needs at least 32 bytes");
    auto secret = hmac_sha256(seed, to_bytes(std::string_view("pq-slot-standin")));
    return {to_bytes(secret), to_bytes(secret)};
}

Bytes PqSlotStandInScheme::conceal(ByteView public_key, ByteView plaintext, ByteView randomness) const
{
    if (public_key.size() != 32)
        throw ConfigError("PQ-slot key must be 32 bytes");
    if (randomness.size() < kPqNonceLength)
        throw LengthError("PQ-slot conceal needs 16 bytes of randomness");
    ByteView nonce = randomness.first(kPqNonceLength);
    auto shared = kdf(public_key, {0x91, {to_bytes(nonce)}});
    return dem_seal(dem_keys(shared, nonce, 0x92), nonce, plaintext, kPqTagLength);
}

Bytes PqSlotStandInScheme::reveal(ByteView private_key, ByteView ciphertext) const
{
    if (private_key.size() != 32)
        throw DecryptionError("PQ-slot key must be 32 bytes");
    if (ciphertext.size() < kPqNonceLength + kPqTagLength)
        throw DecryptionError("SUCI ciphertext too short");
    ByteView nonce = ciphertext.first(kPqNonceLength);
    auto shared = kdf(private_key, {0x91, {to_bytes(nonce)}});
    return dem_open(dem_keys(shared, nonce, 0x92), ciphertext, kPqNonceLength, kPqTagLength);
}

void SchemeRegistry::add(std::shared_ptr<const ProtectionScheme> scheme)
{
    auto id = scheme->id();
    schemes_[id] = std::move(scheme);
}

const ProtectionScheme& SchemeRegistry::find(std::uint8_t id) const
{
    auto it = schemes_.find(id);
    if (it == schemes_.end())
        throw SchemeNotFound("no protection scheme registered under id " + std::to_string(id));
    return *it->second;
}

const SchemeRegistry& SchemeRegistry::standard()
{
    static const SchemeRegistry registry = [] {
        SchemeRegistry r;
        r.add(std::make_shared<EciesScheme>());
        r.add(std::make_shared<PqSlotStandInScheme>());
        return r;
    }();
    return registry;
}

Suci conceal_supi(const Supi& supi, ByteView home_public_key, const ProtectionScheme& scheme, ByteView randomness)
{
    return {supi.home_network_id(), scheme.id(), scheme.conceal(home_public_key, supi.value(), randomness)};
}

Suci conceal_supi(const Supi& supi, ByteView home_public_key, const SchemeRegistry& registry, std::uint8_t scheme,
                  ByteView randomness)
{
    return conceal_supi(supi, home_public_key, registry.find(scheme), randomness);
}

Supi reveal_suci(const Suci& suci, ByteView home_private_key, const SchemeRegistry& registry)
{
    const auto& scheme = registry.find(suci.scheme_id);
    Bytes value = scheme.reveal(home_private_key, suci.ciphertext);
    if (value.empty() || value.size() > kMaxSupiLength)
        throw DecryptionError("decrypted SUPI has invalid length");
    return Supi(std::move(value), suci.home_network_id);
}

Guti ServingIdentityState::assign(const Supi& supi)
{
    if (!is_authenticated(supi))
        throw StateError("cannot assign a GUTI to an unauthenticated subscriber");
    Guti guti{};
    do {
        auto digest = sha256(concat({be_bytes(salt_, 8), be_bytes(counter_++, 8)}));
        guti = leading<10>(digest);
    } while (issued_.count(guti) != 0);
    issued_.insert(guti);
    map_.insert_or_assign(guti, supi);
    return guti;
}

std::optional<Supi> ServingIdentityState::resolve(const Guti& guti) const
{
    auto it = map_.find(guti);
    if (it == map_.end())
        return std::nullopt;
    return it->second;
}

void ServingIdentityState::reset()
{
    map_.clear();
    authenticated_.clear();
}

} // namespace pq5g
