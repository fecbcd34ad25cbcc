#include "pq5g/cost.hpp"
#include "pq5g/error.hpp"
#include "pq5g/harness.hpp"
#include "pq5g/simulate.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace {

using namespace pq5g;
using nlohmann::json;

ScenarioConfig fleet(std::uint64_t seed, MigrationPhase phase, std::size_t n, int bits, std::uint8_t scheme = 1)
{
    ScenarioConfig c;
    c.seed = seed;
    c.phase = phase;
    c.home_key_scheme = scheme;
    for (std::size_t i = 0; i < n; ++i) {
        SubscriberConfig s;
        s.supi = "imsi-00101000000" + std::to_string(2000 + i);
        s.k_bits = bits;
        s.suite = bits == 256 ? AlgorithmSuite::Reference256 : AlgorithmSuite::Reference128;
        c.subscribers.push_back(s);
    }
    return c;
}

AlgorithmSuite suite_of(const Network& net, std::size_t i) { return net.config().subscribers[i].suite; }

TEST(EffectiveKeySpec, Bounds)
{
    const SecretKey k(Bytes(16, 0xFF));
    EXPECT_THROW(EffectiveKeySpec::around(k, 0), DomainError);
    EXPECT_THROW(EffectiveKeySpec::around(k, 33), DomainError);
    EXPECT_THROW((EffectiveKeySpec{8, Bytes(20)}.validate()), DomainError);

    const auto spec = EffectiveKeySpec::around(k, 12);
    EXPECT_EQ(spec.space(), 4096u);
    EXPECT_EQ(to_hex(spec.candidate(0).bytes()), "000fffffffffffffffffffffffffffff");
    EXPECT_EQ(spec.candidate(0xFFF), k);
    EXPECT_EQ(to_hex(spec.candidate(0x123).bytes()), "123fffffffffffffffffffffffffffff");
}

TEST(Handshake, RecoversKeyFromOnePair)
{
    const auto run = simulate(fleet(100, MigrationPhase::Legacy, 2, 128));
    const auto& net = run.network;
    const auto in = handshake_intercept(net.trace(), "ue1");
    const auto spec = EffectiveKeySpec::around(net.subscriber_key(1), 16);
    const auto report = handshake_key_recovery(in, spec, suite_of(net, 1));

    EXPECT_TRUE(report.success);
    EXPECT_EQ(report.attack, AttackKind::HandshakeKeyRecovery);
    ASSERT_TRUE(report.recovered.has_value());
    EXPECT_EQ(*report.recovered, to_bytes(net.subscriber_key(1).bytes()));
    EXPECT_LE(report.queries, spec.space());
    EXPECT_EQ(BigInt(report.grover_cost), grover_cost(16));

    // Soundness: the recovered key re-verifies from public evidence alone.
    EXPECT_TRUE(verify_handshake_key(in, SecretKey(*report.recovered), suite_of(net, 1)));
    EXPECT_FALSE(verify_handshake_key(in, net.subscriber_key(0), suite_of(net, 0)));
}

TEST(Handshake, EvidenceIsOnlyTheChallengeResponsePair)
{
    const auto run = simulate(fleet(101, MigrationPhase::Phase1, 1, 256));
    const auto& trace = run.network.trace();
    const auto req = std::get<AuthRequest>(trace.air("AuthRequest", "seaf", "ue0").front()->message());
    const auto resp = std::get<AuthResponse>(trace.air("AuthResponse", "ue0").front()->message());
    HandshakeIntercept in{req.rand, req.autn, resp.res_star, to_bytes(std::string_view(kDefaultSnName))};
    const auto report =
        handshake_key_recovery(in, EffectiveKeySpec::around(run.network.subscriber_key(0), 12), AlgorithmSuite::Reference256);
    EXPECT_TRUE(report.success);
    EXPECT_EQ(*report.recovered, to_bytes(run.network.subscriber_key(0).bytes()));
}

TEST(Handshake, RandomResponseFindsNothing)
{
    const auto run = simulate(fleet(102, MigrationPhase::Legacy, 1, 128));
    auto in = handshake_intercept(run.network.trace(), "ue0");
    testutil::Random rng(3);
    in.res_star = rng.block<16>();
    const auto spec = EffectiveKeySpec::around(run.network.subscriber_key(0), 12);
    const auto report = handshake_key_recovery(in, spec, AlgorithmSuite::Reference128);
    EXPECT_FALSE(report.success);
    EXPECT_FALSE(report.recovered.has_value());
    EXPECT_EQ(report.queries, spec.space());
}

TEST(Handshake, KeyOutsideSpaceFindsNothing)
{
    const auto run = simulate(fleet(103, MigrationPhase::Legacy, 1, 128));
    const auto in = handshake_intercept(run.network.trace(), "ue0");
    auto suffix = to_bytes(run.network.subscriber_key(0).bytes());
    suffix.back() ^= 1;
    const auto report = handshake_key_recovery(in, EffectiveKeySpec{10, suffix}, AlgorithmSuite::Reference128);
    EXPECT_FALSE(report.success);
}

TEST(Handshake, MissingEvidence)
{
    auto net = Network(fleet(104, MigrationPhase::Legacy, 2, 128));
    net.register_ue(0);
    try {
        handshake_intercept(net.trace(), "ue1");
        FAIL();
    } catch (const EvidenceError& e) {
        EXPECT_EQ(e.missing(), "AuthResponse");
    }
}

TEST(Handshake, PartitionCountDoesNotChangeReport)
{
    const auto run = simulate(fleet(105, MigrationPhase::Legacy, 1, 128));
    const auto in = handshake_intercept(run.network.trace(), "ue0");
    const auto spec = EffectiveKeySpec::around(run.network.subscriber_key(0), 12);
    const auto one = handshake_key_recovery(in, spec, AlgorithmSuite::Reference128, {1}).to_json().dump();
    for (unsigned p : {2u, 3u, 7u, 64u})
        EXPECT_EQ(handshake_key_recovery(in, spec, AlgorithmSuite::Reference128, {p}).to_json().dump(), one) << p;
}

class Keystream : public ::testing::TestWithParam<MigrationPhase> {};

TEST_P(Keystream, RecoversKeyThroughFullChain)
{
    const auto phase = GetParam();
    const int bits = phase == MigrationPhase::Legacy ? 128 : 256;
    const auto run = simulate(fleet(106, phase, 2, bits));
    const auto& net = run.network;
    const auto in = keystream_intercept(net.trace(), "ue0", net.supi(0).value());
    EXPECT_EQ(in.known_plaintext.size(), 16u);
    EXPECT_EQ(in.direction, Direction::Uplink);
    EXPECT_EQ(in.stratum, Stratum::Nas);

    const auto spec = EffectiveKeySpec::around(net.subscriber_key(0), 12);
    const auto report = keystream_key_recovery(in, spec, suite_of(net, 0), phase);
    EXPECT_TRUE(report.success);
    ASSERT_TRUE(report.recovered.has_value());
    EXPECT_EQ(*report.recovered, to_bytes(net.subscriber_key(0).bytes()));
    EXPECT_TRUE(verify_keystream_key(in, SecretKey(*report.recovered), suite_of(net, 0), phase));
    EXPECT_FALSE(verify_keystream_key(in, net.subscriber_key(1), suite_of(net, 1), phase));
}

INSTANTIATE_TEST_SUITE_P(Phases, Keystream,
                         ::testing::Values(MigrationPhase::Legacy, MigrationPhase::Phase1, MigrationPhase::Phase2),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(KeystreamPreconditions, RandWithheldOrShortPlaintext)
{
    const auto run = simulate(fleet(107, MigrationPhase::Legacy, 1, 128));
    const auto& net = run.network;
    const auto spec = EffectiveKeySpec::around(net.subscriber_key(0), 8);
    auto no_rand = keystream_intercept(net.trace(), "ue0", net.supi(0).value());
    no_rand.rand.reset();
    try {
        keystream_key_recovery(no_rand, spec, AlgorithmSuite::Reference128, MigrationPhase::Legacy);
        FAIL();
    } catch (const EvidenceError& e) {
        EXPECT_EQ(e.missing(), "AuthRequest");
    }

    const auto short_pt = keystream_intercept(net.trace(), "ue0", net.supi(0).value(), 4);
    try {
        keystream_key_recovery(short_pt, spec, AlgorithmSuite::Reference128, MigrationPhase::Legacy);
        FAIL();
    } catch (const EvidenceError& e) {
        EXPECT_EQ(e.missing(), "known-plaintext");
    }
    const auto minimum = keystream_intercept(net.trace(), "ue0", net.supi(0).value(), kMinKnownPlaintext);
    EXPECT_TRUE(keystream_key_recovery(minimum, spec, AlgorithmSuite::Reference128, MigrationPhase::Legacy).success);
}

TEST(Linkability, TargetAmongNineDecoys)
{
    auto run = simulate(fleet(108, MigrationPhase::Legacy, 10, 128));
    auto& net = run.network;
    std::vector<std::string> probes;
    for (std::size_t i = 0; i < 10; ++i)
        probes.push_back(entity_id::ue(i));
    const auto report = linkability_replay(net, 4, probes);
    EXPECT_TRUE(report.success);
    EXPECT_EQ(report.details["correct"], 10);
    EXPECT_EQ(report.details["identified"], json::array({"ue4"}));
    EXPECT_EQ(report.details["original"], "ue4");
    EXPECT_EQ(*report.recovered, to_bytes(std::string_view("ue4")));
}

TEST(Linkability, MergedErrorsDefeatTheAttack)
{
    auto c = fleet(109, MigrationPhase::Legacy, 10, 128);
    c.merged_errors = true;
    auto run = simulate(c);
    std::vector<std::string> probes;
    for (std::size_t i = 0; i < 10; ++i)
        probes.push_back(entity_id::ue(i));
    const auto report = linkability_replay(run.network, 0, probes, 5);
    EXPECT_FALSE(report.success);
    EXPECT_TRUE(report.details["defeated"].get<bool>());
    EXPECT_EQ(report.details["identified"].size(), 1u);
    for (const auto& row : report.details["probes"])
        EXPECT_EQ(row["response"], "AuthFailureMsg");
}

TEST(Linkability, EmptyProbeList)
{
    auto run = simulate(fleet(110, MigrationPhase::Legacy, 2, 128));
    const auto report = linkability_replay(run.network, 0, {});
    EXPECT_FALSE(report.success);
    EXPECT_EQ(report.queries, 0u);
}

TEST(SqnLeak, RecoversExactXor)
{
    auto run = simulate(fleet(111, MigrationPhase::Legacy, 3, 128));
    const auto report = sqn_leak(run.network, 2, "ue2", 4);
    EXPECT_TRUE(report.success);
    const auto& diffs = report.details["differences"];
    ASSERT_EQ(diffs.size(), 3u);
    for (const auto& d : diffs) {
        EXPECT_EQ(d["recovered_xor"], d["ground_truth_xor"]);
        EXPECT_NE(d["recovered_xor"], 0);
    }
    EXPECT_EQ(report.recovered->size(), 18u);
}

TEST(SqnLeak, NoAdvanceGivesZero)
{
    auto run = simulate(fleet(112, MigrationPhase::Legacy, 2, 128));
    const auto report = sqn_leak(run.network, 0, "ue0", 2, false);
    EXPECT_TRUE(report.success);
    EXPECT_EQ(report.details["differences"][0]["recovered_xor"], 0);
}

TEST(SqnLeak, WrongTargetFails)
{
    auto run = simulate(fleet(113, MigrationPhase::Legacy, 2, 128));
    const auto report = sqn_leak(run.network, 0, "ue1", 2);
    EXPECT_FALSE(report.success);
    EXPECT_EQ(report.details["probes"][0]["response"], "MacFailureMsg");
    EXPECT_THROW(sqn_leak(run.network, 0, "ue0", 1), DomainError);
}

TEST(SuciCompromise, RecoversEverySupi)
{
    const auto c = fleet(114, MigrationPhase::Legacy, 5, 128);
    const auto run = simulate(c);
    const auto report =
        suci_compromise(run.network.trace(), run.network.home_keys().ecies.private_key, ground_truth_supis(c));
    EXPECT_TRUE(report.success);
    EXPECT_EQ(report.details["captured"], 5);
    EXPECT_EQ(report.details["correct"], 5);
}

TEST(SuciCompromise, GutiOnlyTrace)
{
    auto c = fleet(115, MigrationPhase::Legacy, 3, 128);
    for (auto& s : c.subscribers)
        s.guti_provisioned = true;
    const auto run = simulate(c);
    const auto report =
        suci_compromise(run.network.trace(), run.network.home_keys().ecies.private_key, ground_truth_supis(c));
    EXPECT_FALSE(report.success);
    EXPECT_EQ(report.notes, "no concealed identifiers captured");
}

TEST(SuciCompromise, PqSlotDefeatsClassicalKey)
{
    const auto c = fleet(116, MigrationPhase::Phase2, 3, 256, scheme_id::pq_slot);
    const auto run = simulate(c);
    const auto report =
        suci_compromise(run.network.trace(), run.network.home_keys().ecies.private_key, ground_truth_supis(c));
    EXPECT_FALSE(report.success);
    EXPECT_EQ(report.details["captured"], 3);
    EXPECT_EQ(report.details["correct"], 0);
}

TEST(Dispatch, NamesAndParams)
{
    EXPECT_THROW(attack_kind("mitm"), ConfigError);
    for (auto n : kAttackNames)
        EXPECT_NO_THROW(attack_kind(std::string(n)));
    EXPECT_TRUE(is_passive_attack("suci-compromise"));
    EXPECT_FALSE(is_passive_attack("linkability"));

    auto run = simulate(fleet(117, MigrationPhase::Legacy, 2, 128));
    const Trace evidence = run.network.trace();
    const auto r = run_attack(run.network, evidence, "handshake-recovery", {{"ue", 1}, {"effective_bits", 10}});
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.queries, 1024u);
    EXPECT_THROW(run_attack(run.network, evidence, "handshake-recovery", {{"ue", 7}}), ConfigError);

    const auto j = r.to_json();
    for (auto key : {"attack", "success", "queries", "grover_cost", "recovered", "notes", "details"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["attack"], "HandshakeKeyRecovery");
}

TEST(Dispatch, ScriptedAttacksAreRecordedInTrace)
{
    auto c = fleet(118, MigrationPhase::Legacy, 3, 128);
    c.attacker_script.push_back(
        {"attack", {{"op", "attack"}, {"name", "handshake-recovery"}, {"params", {{"effective_bits", 8}}}}});
    c.attacker_script.push_back(
        {"attack", {{"op", "attack"}, {"name", "keystream-recovery"}, {"params", {{"withhold_rand", true}}}}});
    const auto run = simulate(c);
    ASSERT_EQ(run.reports.size(), 2u);
    EXPECT_TRUE(run.reports[0].success);
    EXPECT_FALSE(run.reports[1].success);
    EXPECT_EQ(run.reports[1].details["missing"], "AuthRequest");
    std::size_t attack_records = 0;
    for (const auto& r : run.network.trace().records)
        attack_records += r.kind == RecordKind::Attack;
    EXPECT_EQ(attack_records, 2u);
}

} // namespace
