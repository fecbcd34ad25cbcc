#include "pq5g/simulate.hpp"

#include "pq5g/error.hpp"

namespace pq5g {

ScenarioRun simulate(const ScenarioConfig& config, SimulateOptions options)
{
    ScenarioRun run{Network(config), {}};
    Network& net = run.network;

    for (std::size_t i = 0; i < config.subscribers.size(); ++i)
        if (config.subscribers[i].auto_register)
            net.register_ue(i);

    for (std::size_t i = 0; i < config.attacker_script.size(); ++i) {
        const auto& [op, args] = config.attacker_script[i];
        const std::string at = "attacker_script[" + std::to_string(i) + "]";
        try {
            if (op == "register" || op == "reauth") {
                net.register_ue(args.at("ue").get<std::size_t>());
            } else if (op == "replay") {
                const auto captured = net.captured_auth_requests();
                const auto n = args.at("capture").get<std::size_t>();
                if (n >= captured.size())
                    throw ConfigError(at + ".capture: only " + std::to_string(captured.size()) +
                                      " AuthRequests captured so far");
                net.inject(entity_id::ue(args.at("to").get<std::size_t>()), captured[n]);
            } else if (op == "drop") {
                net.drop_next(args.at("type").get<std::string>(), args.value("count", std::size_t{1}));
            } else if (op == "attack") {
                const auto name = args.at("name").get<std::string>();
                if (options.skip_passive_attacks && is_passive_attack(name))
                    continue;
                const auto params = args.value("params", nlohmann::json::object());
                AttackReport report;
                try {
                    report = run_attack(net, net.trace(), name, params);
                } catch (const EvidenceError& e) {
                    report.attack = attack_kind(name);
                    report.notes = std::string("missing evidence: ") + e.missing() + ": " + e.what();
                    report.details["name"] = name;
                    report.details["missing"] = e.missing();
                }
                report.details["directive"] = i;
                net.record_attack(report.to_json());
                run.reports.push_back(std::move(report));
            }
        } catch (const ConfigError& e) {
            const std::string what = e.what();
            throw ConfigError(what.rfind(at, 0) == 0 ? what : at + ": " + what);
        } catch (const DomainError& e) {
            throw ConfigError(at + ": " + e.what());
        }
    }
    return run;
}

Trace run_scenario(const ScenarioConfig& config)
{
    return simulate(config).network.trace();
}

} // namespace pq5g
