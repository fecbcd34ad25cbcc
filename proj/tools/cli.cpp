#include "cli.hpp"

#include "pq5g/cost.hpp"
#include "pq5g/error.hpp"
#include "pq5g/simulate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pq5g::cli {

namespace {

using nlohmann::json;

struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path, int code_on_failure)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{code_on_failure, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text))
        throw Failure{kExitIo, "cannot write " + path};
}

bool same_file(const std::string& a, const std::string& b)
{
    std::error_code ec;
    return std::filesystem::equivalent(a, b, ec);
}

int cmd_run(const std::string& config_path, const std::string& out_path, std::ostream& out)
{
    const auto config = ScenarioConfig::from_text(read_file(config_path, kExitConfig));
    const auto run = simulate(config);
    const Trace& trace = run.network.trace();
    write_file(out_path, trace.to_jsonl());

    std::size_t successes = 0;
    std::size_t failures = 0;
    for (const auto& r : trace.records)
        for (const auto& e : r.events) {
            successes += e == "auth-success";
            failures += e.rfind("auth-failed", 0) == 0;
        }
    const auto attacks_ok = std::count_if(run.reports.begin(), run.reports.end(), [](auto& r) { return r.success; });
    out << "auth_success=" << successes << " auth_failed=" << failures << " attacks=" << run.reports.size()
        << " attacks_succeeded=" << attacks_ok << " records=" << trace.records.size() << " trace=" << out_path
        << "\n";
    return kExitOk;
}

// Message records only: attack records from the original run are not
// reproduced when passive directives are skipped.
std::vector<json> message_records(const Trace& t)
{
    std::vector<json> out;
    for (const auto& r : t.records)
        if (r.kind == RecordKind::Message) {
            auto j = to_json(r);
            j.erase("index");
            j.erase("step");
            out.push_back(std::move(j));
        }
    return out;
}

int cmd_attack(const std::string& name, const std::string& trace_path, const json& params, const std::string& out_path,
               std::ostream& out, std::ostream& err)
{
    if (!out_path.empty() && same_file(out_path, trace_path))
        throw Failure{kExitUsage, "--out must not overwrite the input trace"};

    std::ifstream in(trace_path, std::ios::binary);
    if (!in)
        throw Failure{kExitConfig, "cannot read " + trace_path};
    Trace evidence;
    try {
        evidence = Trace::from_jsonl(in);
        (void)evidence.config();
    } catch (const FormatError& e) {
        throw Failure{kExitConfig, trace_path + ": " + e.what()};
    }

    // Rebuild the live network the trace came from; attacks read evidence
    // from the file and use the rebuilt network for ground truth and probes.
    auto run = simulate(ScenarioConfig::from_json(evidence.config()), {.skip_passive_attacks = true});
    if (message_records(evidence) != message_records(run.network.trace()))
        err << "warning: " << trace_path << " does not match a replay of its header config\n";

    const AttackReport report = run_attack(run.network, evidence, name, params);
    out << report.to_json().dump() << "\n";

    if (!out_path.empty()) {
        TraceRecord r;
        r.index = evidence.records.size();
        r.step = evidence.records.empty() ? 0 : evidence.records.back().step;
        r.kind = RecordKind::Attack;
        r.from = entity_id::attacker;
        r.body = report.to_json();
        evidence.records.push_back(std::move(r));
        write_file(out_path, evidence.to_jsonl());
    }
    return kExitOk;
}

std::string fixed2(double v)
{
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(2) << v;
    return ss.str();
}

int cmd_cost(int bits, std::ostream& out)
{
    const BigInt classical = classical_cost(bits);
    const BigInt grover = grover_cost(bits);
    out << "model\tbits\tqueries\tlog2\n";
    out << "classical\t" << bits << "\t" << classical << "\t" << fixed2(log2_of(classical)) << "\n";
    out << "grover\t" << bits << "\t" << grover << "\t" << fixed2(log2_of(grover)) << "\n";
    return kExitOk;
}

std::string attack_list()
{
    std::string s;
    for (auto n : kAttackNames)
        s += (s.empty() ? "" : ", ") + std::string(n);
    return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"5G AKA simulator and post-quantum attack harness", "pq5g"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_path;
    auto* run = app.add_subcommand("run", "Run a scenario and write its trace");
    run->add_option("--config", config_path, "Scenario config (JSON)")->required();
    run->add_option("--out", out_path, "Trace output (JSON lines)")->required();

    std::string attack_name;
    std::string trace_path;
    std::string attack_out;
    std::size_t ue = 0;
    int effective_bits = 0;
    unsigned partitions = 1;
    std::size_t known_bytes = 16;
    bool withhold_rand = false;
    std::size_t capture = 0;
    std::vector<std::size_t> probes;
    int replays = 2;
    bool no_advance = false;
    std::uint64_t guess_seed = 0;
    auto* attack = app.add_subcommand("attack", "Run an attack against a trace");
    attack->add_option("name", attack_name, "One of: " + attack_list())->required();
    attack->add_option("--trace", trace_path, "Trace produced by `run`")->required();
    attack->add_option("--out", attack_out, "Write the trace plus the attack record here");
    auto* ue_opt = attack->add_option("--ue", ue, "Target subscriber index");
    auto* bits_opt = attack->add_option("--effective-bits", effective_bits, "Unknown leading key bits")
                         ->check(CLI::Range(kMinEffectiveBits, kMaxEffectiveBits));
    attack->add_option("--partitions", partitions, "Concurrent search partitions")->check(CLI::Range(1u, 256u));
    attack->add_option("--known-bytes", known_bytes, "Known plaintext bytes");
    attack->add_flag("--withhold-rand", withhold_rand, "Drop RAND from the intercept");
    attack->add_option("--capture", capture, "Index of the captured AuthRequest");
    auto* probes_opt = attack->add_option("--probes", probes, "Probe subscriber indices")->delimiter(',');
    attack->add_option("--replays", replays, "SQN-leak replay count")->check(CLI::Range(2, 1000));
    attack->add_flag("--no-advance", no_advance, "Do not re-authenticate between SQN-leak probes");
    auto* seed_opt = attack->add_option("--guess-seed", guess_seed, "Seed for the guess when errors are merged");

    int bits = 0;
    auto* cost = app.add_subcommand("cost", "Classical and Grover key-search cost");
    cost->add_option("--bits", bits, "Key length in bits")->required()->check(CLI::Range(kMinCostBits, kMaxCostBits));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (run->parsed())
            return cmd_run(config_path, out_path, out);
        if (cost->parsed())
            return cmd_cost(bits, out);

        if (std::find(kAttackNames.begin(), kAttackNames.end(), attack_name) == kAttackNames.end()) {
            err << "error: unknown attack '" << attack_name << "'; valid attacks: " << attack_list() << "\n";
            return kExitUsage;
        }
        json params = json::object();
        if (*ue_opt)
            params["ue"] = ue;
        if (*bits_opt)
            params["effective_bits"] = effective_bits;
        params["partitions"] = partitions;
        params["known_bytes"] = known_bytes;
        params["withhold_rand"] = withhold_rand;
        params["capture"] = capture;
        if (*probes_opt)
            params["probes"] = probes;
        params["replays"] = replays;
        params["advance"] = !no_advance;
        if (*seed_opt)
            params["guess_seed"] = guess_seed;
        return cmd_attack(attack_name, trace_path, params, attack_out, out, err);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const EvidenceError& e) {
        err << "missing evidence: " << e.missing() << ": " << e.what() << "\n";
        return kExitEvidence;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

} // namespace pq5g::cli
