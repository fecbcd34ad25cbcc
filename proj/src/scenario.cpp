#include "pq5g/scenario.hpp"

#include "pq5g/error.hpp"
#include "pq5g/identity.hpp"

#include <algorithm>
#include <set>

namespace pq5g {

using nlohmann::json;

std::string_view to_string(AlgorithmSuite suite)
{
    return suite == AlgorithmSuite::Reference256 ? "reference256" : "reference128";
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ConfigError(where + ": " + what);
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed)
{
    for (const auto& [key, _] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(where.empty() ? key : where + "." + key, "unknown field");
}

template <typename T>
T get(const json& obj, const std::string& where, const std::string& key, T fallback)
{
    const std::string at = where.empty() ? key : where + "." + key;
    if (!obj.contains(key))
        return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        fail(at, "wrong type");
    }
}

template <typename T>
T require(const json& obj, const std::string& where, const std::string& key)
{
    const std::string at = where.empty() ? key : where + "." + key;
    if (!obj.contains(key))
        fail(at, "missing");
    return get<T>(obj, where, key, T{});
}

AlgorithmSuite parse_suite(const std::string& s, const std::string& at)
{
    if (s == "reference128")
        return AlgorithmSuite::Reference128;
    if (s == "reference256")
        return AlgorithmSuite::Reference256;
    fail(at, "unknown suite '" + s + "' (reference128, reference256)");
}

SubscriberConfig parse_subscriber(const json& j, const std::string& at)
{
    if (!j.is_object())
        fail(at, "expected an object");
    check_keys(j, at, {"supi", "k_bits", "suite", "k_hex", "identity", "uplink_data", "auto_register"});

    SubscriberConfig s;
    s.supi = require<std::string>(j, at, "supi");
    s.k_bits = get<int>(j, at, "k_bits", 128);
    s.suite = parse_suite(get<std::string>(j, at, "suite", s.k_bits == 256 ? "reference256" : "reference128"),
                          at + ".suite");
    if (j.contains("k_hex")) {
        try {
            s.k = from_hex(get<std::string>(j, at, "k_hex", {}));
        } catch (const FormatError& e) {
            fail(at + ".k_hex", e.what());
        }
    }
    const auto identity = get<std::string>(j, at, "identity", "suci");
    if (identity != "suci" && identity != "guti")
        fail(at + ".identity", "expected \"suci\" or \"guti\"");
    s.guti_provisioned = identity == "guti";
    s.uplink_data = get<std::string>(j, at, "uplink_data", {});
    s.auto_register = get<bool>(j, at, "auto_register", true);
    return s;
}

bool is_index(const json& v)
{
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

} // namespace

ScenarioConfig ScenarioConfig::from_json(const json& j)
{
    if (!j.is_object())
        fail("config", "expected a JSON object");
    check_keys(j, "", {"seed", "phase", "sn_name", "home_network_id", "home_key_scheme", "merged_errors", "concealment",
                       "subscribers",
                       "attacker_script"});

    ScenarioConfig c;
    c.seed = require<std::uint64_t>(j, "", "seed");
    const auto phase = require<std::string>(j, "", "phase");
    if (auto p = parse_phase(phase))
        c.phase = *p;
    else
        fail("phase", "unknown phase '" + phase + "' (legacy, phase1, phase2)");
    c.sn_name = get<std::string>(j, "", "sn_name", std::string(kDefaultSnName));
    c.home_network_id = get<std::string>(j, "", "home_network_id", std::string(kDefaultHomeNetworkId));
    c.home_key_scheme = static_cast<std::uint8_t>(get<int>(j, "", "home_key_scheme", 1));
    c.merged_errors = get<bool>(j, "", "merged_errors", false);
    const auto location = get<std::string>(j, "", "concealment", "me");
    if (location == "me")
        c.concealment = ConcealmentLocation::Me;
    else if (location == "usim")
        c.concealment = ConcealmentLocation::Usim;
    else
        fail("concealment", "expected \"me\" or \"usim\", got '" + location + "'");

    if (!j.contains("subscribers") || !j.at("subscribers").is_array())
        fail("subscribers", "expected a list");
    const auto& subs = j.at("subscribers");
    for (std::size_t i = 0; i < subs.size(); ++i)
        c.subscribers.push_back(parse_subscriber(subs[i], "subscribers[" + std::to_string(i) + "]"));

    if (j.contains("attacker_script")) {
        const auto& script = j.at("attacker_script");
        if (!script.is_array())
            fail("attacker_script", "expected a list");
        for (std::size_t i = 0; i < script.size(); ++i) {
            const std::string at = "attacker_script[" + std::to_string(i) + "]";
            if (!script[i].is_object())
                fail(at, "expected an object");
            c.attacker_script.push_back({require<std::string>(script[i], at, "op"), script[i]});
        }
    }
    c.validate();
    return c;
}

ScenarioConfig ScenarioConfig::from_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return from_json(j);
}

void ScenarioConfig::validate() const
{
    if (subscribers.empty())
        fail("subscribers", "at least one subscriber is required");
    if (sn_name.empty())
        fail("sn_name", "must not be empty");
    if (home_network_id.empty() || home_network_id.size() > 255)
        fail("home_network_id", "must be 1..255 bytes");
    if (home_key_scheme != scheme_id::ecies && home_key_scheme != scheme_id::pq_slot)
        fail("home_key_scheme", "unknown protection scheme " + std::to_string(home_key_scheme) + " (1, 2)");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < subscribers.size(); ++i) {
        const auto& s = subscribers[i];
        const std::string at = "subscribers[" + std::to_string(i) + "]";
        if (s.supi.empty() || s.supi.size() > kMaxSupiLength)
            fail(at + ".supi", "must be 1..64 bytes");
        if (!seen.insert(s.supi).second)
            fail(at + ".supi", "duplicate SUPI " + s.supi);
        if (s.k_bits != 128 && s.k_bits != 256)
            fail(at + ".k_bits", "must be 128 or 256");
        if (phase == MigrationPhase::Legacy && s.k_bits == 256)
            fail(at + ".k_bits", "legacy phase forbids 256-bit keys");
        if (phase == MigrationPhase::Phase2 && s.k_bits != 256)
            fail(at + ".k_bits", "phase2 requires 256-bit keys");
        if (!suite_supports(s.suite, s.k_bits))
            fail(at + ".suite", std::string(to_string(s.suite)) + " does not accept " + std::to_string(s.k_bits) +
                                    "-bit keys");
        if (s.k && s.k->size() * 8 != static_cast<std::size_t>(s.k_bits))
            fail(at + ".k_hex", "length does not match k_bits");
    }

    auto ue_index = [&](const json& op, const std::string& at, const char* key) {
        if (!op.contains(key) || !is_index(op.at(key)))
            fail(at + "." + key, "expected a subscriber index");
        if (op.at(key).get<std::size_t>() >= subscribers.size())
            fail(at + "." + key, "no subscriber with index " + op.at(key).dump());
    };
    for (std::size_t i = 0; i < attacker_script.size(); ++i) {
        const auto& [op, args] = attacker_script[i];
        const std::string at = "attacker_script[" + std::to_string(i) + "]";
        if (op == "register" || op == "reauth") {
            ue_index(args, at, "ue");
        } else if (op == "replay") {
            ue_index(args, at, "to");
            if (!args.contains("capture") || !is_index(args.at("capture")))
                fail(at + ".capture", "expected a capture index");
        } else if (op == "drop") {
            if (!args.contains("type") || !args.at("type").is_string())
                fail(at + ".type", "expected a message type");
            if (args.contains("count") && !is_index(args.at("count")))
                fail(at + ".count", "expected a non-negative count");
        } else if (op == "attack") {
            if (!args.contains("name") || !args.at("name").is_string())
                fail(at + ".name", "expected an attack name");
            const auto name = args.at("name").get<std::string>();
            if (std::find(kAttackNames.begin(), kAttackNames.end(), name) == kAttackNames.end())
                fail(at + ".name", "unknown attack '" + name + "'");
            if (args.contains("params") && !args.at("params").is_object())
                fail(at + ".params", "expected an object");
        } else {
            fail(at + ".op", "unknown op '" + op + "' (register, reauth, replay, drop, attack)");
        }
    }
}

json ScenarioConfig::to_json() const
{
    json j;
    j["seed"] = seed;
    j["phase"] = to_string(phase);
    j["sn_name"] = sn_name;
    j["home_network_id"] = home_network_id;
    j["home_key_scheme"] = home_key_scheme;
    j["merged_errors"] = merged_errors;
    j["concealment"] = concealment == ConcealmentLocation::Usim ? "usim" : "me";
    j["subscribers"] = json::array();
    for (const auto& s : subscribers) {
        json e;
        e["supi"] = s.supi;
        e["k_bits"] = s.k_bits;
        e["suite"] = to_string(s.suite);
        if (s.k)
            e["k_hex"] = to_hex(*s.k);
        e["identity"] = s.guti_provisioned ? "guti" : "suci";
        e["uplink_data"] = s.uplink_data;
        e["auto_register"] = s.auto_register;
        j["subscribers"].push_back(std::move(e));
    }
    j["attacker_script"] = json::array();
    for (const auto& op : attacker_script)
        j["attacker_script"].push_back(op.args);
    return j;
}

} // namespace pq5g
