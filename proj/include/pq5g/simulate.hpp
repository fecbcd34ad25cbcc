#pragma once

// Scenario execution: auto-registering subscribers register in index order,
// then the attacker script runs op by op against the live network.

#include "pq5g/harness.hpp"
#include "pq5g/network.hpp"

namespace pq5g {

struct ScenarioRun {
    Network network;
    std::vector<AttackReport> reports;
};

struct SimulateOptions {
    // Skip read-only attack directives; the network state is unaffected.
    // Used to rebuild a live network from a trace header cheaply.
    bool skip_passive_attacks = false;
};

/// Throws ConfigError (with the directive's location) when a script op
/// refers to something the run has not produced.
ScenarioRun simulate(const ScenarioConfig& config, SimulateOptions options = {});

Trace run_scenario(const ScenarioConfig& config);

} // namespace pq5g
