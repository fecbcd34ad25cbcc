#include "pq5g/error.hpp"
#include "pq5g/scenario.hpp"
#include "pq5g/simulate.hpp"

#include <gtest/gtest.h>

namespace {

using namespace pq5g;
using nlohmann::json;

json base()
{
    return json::parse(R"({
        "seed": 1, "phase": "phase1",
        "subscribers": [
            {"supi": "imsi-001010000000001", "k_bits": 128},
            {"supi": "imsi-001010000000002", "k_bits": 256, "suite": "reference256"}
        ]
    })");
}

std::string error_of(const json& j)
{
    try {
        (void)ScenarioConfig::from_json(j);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "no error";
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

TEST(Config, DefaultsAndRoundTrip)
{
    const auto c = ScenarioConfig::from_json(base());
    EXPECT_EQ(c.phase, MigrationPhase::Phase1);
    EXPECT_EQ(c.sn_name, kDefaultSnName);
    EXPECT_EQ(c.home_key_scheme, 1);
    EXPECT_FALSE(c.merged_errors);
    EXPECT_EQ(c.subscribers[0].suite, AlgorithmSuite::Reference128);
    EXPECT_EQ(c.subscribers[1].suite, AlgorithmSuite::Reference256);
    EXPECT_EQ(ScenarioConfig::from_json(c.to_json()).to_json(), c.to_json());
}

TEST(Config, Phase2RejectsShortKeyNamingSubscriber)
{
    auto j = base();
    j["phase"] = "phase2";
    const auto e = error_of(j);
    EXPECT_TRUE(starts_with(e, "subscribers[0].k_bits")) << e;
}

TEST(Config, LegacyRejectsLongKey)
{
    auto j = base();
    j["phase"] = "legacy";
    EXPECT_TRUE(starts_with(error_of(j), "subscribers[1].k_bits")) << error_of(j);
}

TEST(Config, LocatedErrors)
{
    struct Case {
        std::function<void(json&)> mutate;
        std::string where;
    };
    const std::vector<Case> cases = {
        {[](json& j) { j.erase("seed"); }, "seed"},
        {[](json& j) { j["phase"] = "phase3"; }, "phase"},
        {[](json& j) { j["subscribers"] = json::array(); }, "subscribers"},
        {[](json& j) { j["colour"] = 1; }, "colour"},
        {[](json& j) { j["subscribers"][0]["colour"] = 1; }, "subscribers[0].colour"},
        {[](json& j) { j["subscribers"][1]["supi"] = "imsi-001010000000001"; }, "subscribers[1].supi"},
        {[](json& j) { j["subscribers"][1]["suite"] = "reference128"; }, "subscribers[1].suite"},
        {[](json& j) { j["subscribers"][0]["suite"] = "milenage"; }, "subscribers[0].suite"},
        {[](json& j) { j["subscribers"][0]["k_bits"] = 192; }, "subscribers[0].k_bits"},
        {[](json& j) { j["subscribers"][0]["k_hex"] = "00ff"; }, "subscribers[0].k_hex"},
        {[](json& j) { j["subscribers"][0]["identity"] = "imei"; }, "subscribers[0].identity"},
        {[](json& j) { j["home_key_scheme"] = 9; }, "home_key_scheme"},
        {[](json& j) { j["concealment"] = "sim"; }, "concealment"},
        {[](json& j) { j["seed"] = "one"; }, "seed"},
        {[](json& j) { j["attacker_script"] = json::array({{{"op", "jam"}}}); }, "attacker_script[0].op"},
        {[](json& j) { j["attacker_script"] = json::array({{{"op", "register"}, {"ue", 5}}}); },
         "attacker_script[0].ue"},
        {[](json& j) { j["attacker_script"] = json::array({{{"op", "attack"}, {"name", "x"}}}); },
         "attacker_script[0].name"},
        {[](json& j) { j["attacker_script"] = json::array({{{"op", "replay"}, {"to", 0}}}); },
         "attacker_script[0].capture"},
    };
    for (const auto& c : cases) {
        auto j = base();
        c.mutate(j);
        const auto e = error_of(j);
        EXPECT_TRUE(starts_with(e, c.where)) << c.where << " -> " << e;
    }
}

TEST(Config, MalformedTextIsConfigError)
{
    EXPECT_THROW(ScenarioConfig::from_text("{"), ConfigError);
    EXPECT_THROW(ScenarioConfig::from_text("[]"), ConfigError);
}

TEST(Config, ExplicitKeyIsUsed)
{
    auto j = base();
    j["subscribers"][0]["k_hex"] = "000102030405060708090a0b0c0d0e0f";
    Network net(ScenarioConfig::from_json(j));
    EXPECT_EQ(to_hex(net.subscriber_key(0).bytes()), "000102030405060708090a0b0c0d0e0f");
}

TEST(Simulate, ScriptErrorsCarryLocation)
{
    auto j = base();
    j["attacker_script"] = json::array({{{"op", "replay"}, {"capture", 9}, {"to", 0}}});
    try {
        (void)simulate(ScenarioConfig::from_json(j));
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_TRUE(starts_with(e.what(), "attacker_script[0]")) << e.what();
    }
}

TEST(Simulate, KeysDoNotDependOnOtherSubscribersKeyLength)
{
    // Secrets are derived per index from the seed, so changing one subscriber's
    // key length leaves the others untouched.
    auto a = base();
    auto b = base();
    b["subscribers"][1]["k_bits"] = 128;
    b["subscribers"][1]["suite"] = "reference128";
    Network na(ScenarioConfig::from_json(a)), nb(ScenarioConfig::from_json(b));
    EXPECT_EQ(na.subscriber_key(0), nb.subscriber_key(0));
}

} // namespace
