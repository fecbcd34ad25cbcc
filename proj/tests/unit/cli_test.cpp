#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using namespace pq5g::cli;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(PQ5G_CONFIG_DIR) + "/" + name; }

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("pq5g-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(Cli, RunHonestScenario)
{
    const auto r = cli({"run", "--config", config("honest.json"), "--out", path("t.jsonl")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("auth_success=3 auth_failed=0", 0), 0u) << r.out;

    std::ifstream in(path("t.jsonl"));
    std::string line, last_result;
    while (std::getline(in, line)) {
        const auto j = json::parse(line);
        if (j.value("type", "") == "AuthResult")
            last_result = j.at("payload");
    }
    EXPECT_EQ(last_result.substr(last_result.size() - 2), "01"); // success flag
}

TEST_F(Cli, RunIsDeterministic)
{
    ASSERT_EQ(cli({"run", "--config", config("replay.json"), "--out", path("a.jsonl")}).code, kExitOk);
    ASSERT_EQ(cli({"run", "--config", config("replay.json"), "--out", path("b.jsonl")}).code, kExitOk);
    EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("b.jsonl")));
}

TEST_F(Cli, InvalidConfigNamesSubscriber)
{
    const auto r = cli({"run", "--config", config("invalid-phase2.json"), "--out", path("t.jsonl")});
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_NE(r.err.find("subscribers[1].k_bits"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(path("t.jsonl")));

    EXPECT_EQ(cli({"run", "--config", path("missing.json"), "--out", path("t.jsonl")}).code, kExitConfig);
}

TEST_F(Cli, HandshakeAttackOnTrace)
{
    ASSERT_EQ(cli({"run", "--config", config("honest.json"), "--out", path("t.jsonl")}).code, kExitOk);
    const auto before = slurp(path("t.jsonl"));
    const auto r = cli({"attack", "handshake-recovery", "--trace", path("t.jsonl"), "--effective-bits", "12",
                        "--ue", "2", "--partitions", "2", "--out", path("with-report.jsonl")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.err.empty()) << r.err;
    const auto report = json::parse(r.out);
    EXPECT_TRUE(report["success"].get<bool>());
    EXPECT_EQ(report["queries"], 4096);
    EXPECT_EQ(report["grover_cost"], 51);

    EXPECT_EQ(slurp(path("t.jsonl")), before);
    const auto extended = slurp(path("with-report.jsonl"));
    EXPECT_EQ(extended.rfind(before, 0), 0u);
    EXPECT_NE(extended.find("\"kind\":\"attack\""), std::string::npos);
}

TEST_F(Cli, AttackRefusesToOverwriteInput)
{
    ASSERT_EQ(cli({"run", "--config", config("honest.json"), "--out", path("t.jsonl")}).code, kExitOk);
    const auto before = slurp(path("t.jsonl"));
    const auto r = cli({"attack", "suci-compromise", "--trace", path("t.jsonl"), "--out", path("t.jsonl")});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(slurp(path("t.jsonl")), before);
}

TEST_F(Cli, SuciCompromiseOnGutiOnlyTrace)
{
    ASSERT_EQ(cli({"run", "--config", config("guti-only.json"), "--out", path("t.jsonl")}).code, kExitOk);
    const auto r = cli({"attack", "suci-compromise", "--trace", path("t.jsonl")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto report = json::parse(r.out);
    EXPECT_FALSE(report["success"].get<bool>());
    EXPECT_EQ(report["notes"], "no concealed identifiers captured");
}

TEST_F(Cli, KeystreamWithheldRandIsMissingEvidence)
{
    ASSERT_EQ(cli({"run", "--config", config("honest.json"), "--out", path("t.jsonl")}).code, kExitOk);
    const auto r = cli({"attack", "keystream-recovery", "--trace", path("t.jsonl"), "--effective-bits", "8",
                        "--withhold-rand"});
    EXPECT_EQ(r.code, kExitEvidence);
    EXPECT_NE(r.err.find("AuthRequest"), std::string::npos) << r.err;

    const auto ok = cli({"attack", "keystream-recovery", "--trace", path("t.jsonl"), "--effective-bits", "8"});
    ASSERT_EQ(ok.code, kExitOk) << ok.err;
    EXPECT_TRUE(json::parse(ok.out)["success"].get<bool>());
}

TEST_F(Cli, ActiveAttacksFromTrace)
{
    ASSERT_EQ(cli({"run", "--config", config("honest.json"), "--out", path("t.jsonl")}).code, kExitOk);
    const auto link = cli({"attack", "linkability", "--trace", path("t.jsonl"), "--capture", "1"});
    ASSERT_EQ(link.code, kExitOk) << link.err;
    EXPECT_TRUE(json::parse(link.out)["success"].get<bool>());

    const auto leak = cli({"attack", "sqn-leak", "--trace", path("t.jsonl"), "--capture", "0", "--replays", "3"});
    ASSERT_EQ(leak.code, kExitOk) << leak.err;
    EXPECT_TRUE(json::parse(leak.out)["success"].get<bool>());
}

TEST_F(Cli, UsageErrors)
{
    ASSERT_EQ(cli({"run", "--config", config("honest.json"), "--out", path("t.jsonl")}).code, kExitOk);
    const auto unknown = cli({"attack", "mitm", "--trace", path("t.jsonl")});
    EXPECT_EQ(unknown.code, kExitUsage);
    for (auto name : {"handshake-recovery", "keystream-recovery", "linkability", "sqn-leak", "suci-compromise"})
        EXPECT_NE(unknown.err.find(name), std::string::npos) << name;

    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"cost"}).code, kExitUsage);
    EXPECT_EQ(cli({"cost", "--bits", "0"}).code, kExitUsage);
    EXPECT_EQ(cli({"cost", "--bits", "513"}).code, kExitUsage);
    EXPECT_EQ(cli({"attack", "handshake-recovery", "--trace", path("t.jsonl"), "--effective-bits", "40"}).code,
              kExitUsage);
    EXPECT_EQ(cli({"attack", "handshake-recovery", "--trace", path("nope.jsonl")}).code, kExitConfig);
}

TEST_F(Cli, CostTable)
{
    const auto r = cli({"cost", "--bits", "128"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "model\tbits\tqueries\tlog2\n"
                     "classical\t128\t340282366920938463463374607431768211456\t128.00\n"
                     "grover\t128\t14488038916154245685\t63.65\n");
    const auto r256 = cli({"cost", "--bits", "256"});
    ASSERT_EQ(r256.code, kExitOk);
    EXPECT_NE(r256.out.find("grover\t256\t"), std::string::npos);
    EXPECT_NE(r256.out.find("\t127.65\n"), std::string::npos);
}

} // namespace
