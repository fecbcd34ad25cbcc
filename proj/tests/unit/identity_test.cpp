#include "pq5g/error.hpp"
#include "pq5g/identity.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace pq5g;
using testutil::Random;

struct Keys {
    SchemeKeyPair ecies = EciesScheme{}.generate_key_pair(Bytes(32, 0x42));
    SchemeKeyPair pq = PqSlotStandInScheme{}.generate_key_pair(Bytes(32, 0x43));
};

const Supi kSupi("imsi-001010000000001", "001-01");

TEST(Supi, LengthBounds)
{
    EXPECT_THROW(Supi("", "001-01"), LengthError);
    EXPECT_NO_THROW(Supi(std::string(64, 'a'), "001-01"));
    EXPECT_THROW(Supi(std::string(65, 'a'), "001-01"), LengthError);
}

TEST(Suci, SerializeRoundTrip)
{
    Keys keys;
    Random rng(40);
    const auto s = conceal_supi(kSupi, keys.ecies.public_key, SchemeRegistry::standard(), scheme_id::ecies,
                                rng.bytes(32));
    EXPECT_EQ(Suci::parse(s.serialize()), s);
    auto bytes = s.serialize();
    bytes.pop_back();
    EXPECT_THROW(Suci::parse(bytes), FormatError);
}

class SchemeRoundTrip : public ::testing::TestWithParam<std::uint8_t> {};

TEST_P(SchemeRoundTrip, AllLengthsUpTo64)
{
    Keys keys;
    const auto id = GetParam();
    const auto& pair = id == scheme_id::ecies ? keys.ecies : keys.pq;
    Random rng(41 + id);
    for (std::size_t len = 1; len <= kMaxSupiLength; ++len) {
        Supi supi(rng.bytes(len), to_bytes(std::string_view("001-01")));
        const auto suci = conceal_supi(supi, pair.public_key, SchemeRegistry::standard(), id, rng.bytes(32));
        EXPECT_EQ(suci.scheme_id, id);
        EXPECT_EQ(suci.home_network_id, supi.home_network_id());
        EXPECT_EQ(reveal_suci(suci, pair.private_key, SchemeRegistry::standard()), supi);
    }
}

TEST_P(SchemeRoundTrip, HundredConcealsDistinctAndUnlinkable)
{
    Keys keys;
    const auto id = GetParam();
    const auto& pair = id == scheme_id::ecies ? keys.ecies : keys.pq;
    Random rng(50 + id);
    std::set<Bytes> seen;
    std::vector<Bytes> samples;
    for (int i = 0; i < 100; ++i) {
        const auto suci = conceal_supi(kSupi, pair.public_key, SchemeRegistry::standard(), id, rng.bytes(32));
        EXPECT_EQ(reveal_suci(suci, pair.private_key, SchemeRegistry::standard()), kSupi);
        seen.insert(suci.ciphertext);
        samples.push_back(suci.ciphertext);
    }
    EXPECT_EQ(seen.size(), 100u);

    // The ciphertext has no fixed framing, so no byte position may be constant.
    const auto len = samples.front().size();
    for (const auto& s : samples)
        ASSERT_EQ(s.size(), len);
    for (std::size_t pos = 0; pos < len; ++pos) {
        std::set<std::uint8_t> values;
        for (const auto& s : samples)
            values.insert(s[pos]);
        EXPECT_GT(values.size(), 1u) << "constant byte at position " << pos;
    }
}

TEST_P(SchemeRoundTrip, EveryByteFlipIsRejected)
{
    Keys keys;
    const auto id = GetParam();
    const auto& pair = id == scheme_id::ecies ? keys.ecies : keys.pq;
    Random rng(60 + id);
    const auto suci = conceal_supi(kSupi, pair.public_key, SchemeRegistry::standard(), id, rng.bytes(32));
    for (std::size_t pos = 0; pos < suci.ciphertext.size(); ++pos) {
        auto bad = suci;
        bad.ciphertext[pos] ^= 0x01;
        EXPECT_THROW(reveal_suci(bad, pair.private_key, SchemeRegistry::standard()), DecryptionError)
            << "position " << pos;
    }
}

TEST_P(SchemeRoundTrip, DeterministicGivenRandomness)
{
    Keys keys;
    const auto id = GetParam();
    const auto& pair = id == scheme_id::ecies ? keys.ecies : keys.pq;
    const Bytes r(32, 0x77);
    EXPECT_EQ(conceal_supi(kSupi, pair.public_key, SchemeRegistry::standard(), id, r),
              conceal_supi(kSupi, pair.public_key, SchemeRegistry::standard(), id, r));
}

INSTANTIATE_TEST_SUITE_P(Schemes, SchemeRoundTrip, ::testing::Values(scheme_id::ecies, scheme_id::pq_slot),
                         [](const auto& info) { return info.param == scheme_id::ecies ? "Ecies" : "PqSlot"; });

TEST(Reveal, WrongPrivateKeyIsDecryptionError)
{
    Keys keys;
    const auto other = EciesScheme{}.generate_key_pair(Bytes(32, 0x44));
    const auto suci =
        conceal_supi(kSupi, keys.ecies.public_key, SchemeRegistry::standard(), scheme_id::ecies, Bytes(32, 1));
    EXPECT_THROW(reveal_suci(suci, other.private_key, SchemeRegistry::standard()), DecryptionError);
}

TEST(Reveal, ClassicalKeyCannotOpenPqSlot)
{
    Keys keys;
    const auto suci =
        conceal_supi(kSupi, keys.pq.public_key, SchemeRegistry::standard(), scheme_id::pq_slot, Bytes(32, 1));
    EXPECT_THROW(reveal_suci(suci, keys.ecies.private_key, SchemeRegistry::standard()), DecryptionError);
}

TEST(Registry, UnknownSchemeIsDistinctError)
{
    Keys keys;
    EXPECT_THROW(conceal_supi(kSupi, keys.ecies.public_key, SchemeRegistry::standard(), 0x7F, Bytes(32, 1)),
                 SchemeNotFound);
    auto suci =
        conceal_supi(kSupi, keys.ecies.public_key, SchemeRegistry::standard(), scheme_id::ecies, Bytes(32, 1));
    suci.scheme_id = 0x7F;
    EXPECT_THROW(reveal_suci(suci, keys.ecies.private_key, SchemeRegistry::standard()), SchemeNotFound);
}

TEST(Guti, AssignResolveFreshness)
{
    ServingIdentityState state(7);
    EXPECT_THROW(assign_guti(state, kSupi), StateError);

    state.mark_authenticated(kSupi);
    const auto g1 = assign_guti(state, kSupi);
    const auto g2 = assign_guti(state, kSupi);
    EXPECT_NE(g1, g2);
    EXPECT_EQ(resolve_guti(state, g2), kSupi);

    Guti never{};
    never.fill(0xEE);
    EXPECT_FALSE(resolve_guti(state, never).has_value());

    state.reset();
    EXPECT_FALSE(resolve_guti(state, g2).has_value());
    EXPECT_THROW(assign_guti(state, kSupi), StateError);

    state.mark_authenticated(kSupi);
    std::set<Guti> all{g1, g2};
    for (int i = 0; i < 200; ++i)
        EXPECT_TRUE(all.insert(assign_guti(state, kSupi)).second);
}

} // namespace
