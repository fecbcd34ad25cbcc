#include "pq5g/harness.hpp"

#include "pq5g/cost.hpp"
#include "pq5g/error.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <thread>

namespace pq5g {

using nlohmann::json;

std::string_view to_string(AttackKind kind)
{
    switch (kind) {
    case AttackKind::HandshakeKeyRecovery:
        return "HandshakeKeyRecovery";
    case AttackKind::KeystreamKeyRecovery:
        return "KeystreamKeyRecovery";
    case AttackKind::LinkabilityReplay:
        return "LinkabilityReplay";
    case AttackKind::SqnLeak:
        return "SqnLeak";
    case AttackKind::SuciCompromise:
        return "SuciCompromise";
    }
    return "?";
}

json AttackReport::to_json() const
{
    json j;
    j["attack"] = to_string(attack);
    j["success"] = success;
    j["queries"] = queries;
    j["grover_cost"] = grover_cost;
    j["recovered"] = recovered ? json(to_hex(*recovered)) : json(nullptr);
    j["notes"] = notes;
    j["details"] = details;
    return j;
}

// --- Effective keyspace ---

void EffectiveKeySpec::validate() const
{
    if (effective_bits < kMinEffectiveBits || effective_bits > kMaxEffectiveBits)
        throw DomainError("effective_bits must be in 1..32, got " + std::to_string(effective_bits));
    if (fixed_suffix.size() != 16 && fixed_suffix.size() != 32)
        throw DomainError("fixed_suffix must be a full 128- or 256-bit key");
}

SecretKey EffectiveKeySpec::candidate(std::uint64_t c) const
{
    Bytes key = fixed_suffix;
    int remaining = effective_bits;
    for (std::size_t i = 0; remaining > 0; ++i) {
        const int take = std::min(remaining, 8);
        remaining -= take;
        const auto bits = static_cast<unsigned>((c >> remaining) & ((1u << take) - 1));
        const auto keep = static_cast<unsigned>(0xFFu >> take);
        key[i] = static_cast<std::uint8_t>((bits << (8 - take)) | (key[i] & keep));
    }
    return SecretKey(std::move(key));
}

EffectiveKeySpec EffectiveKeySpec::around(const SecretKey& key, int effective_bits)
{
    EffectiveKeySpec spec{effective_bits, to_bytes(key.bytes())};
    spec.validate();
    spec.fixed_suffix = to_bytes(spec.candidate(0).bytes());
    return spec;
}

namespace {

std::uint64_t grover_queries(int bits)
{
    return grover_cost(bits).convert_to<std::uint64_t>();
}

// Enumerates the whole space in `partitions` disjoint ranges and returns the
// matching candidates in ascending order.
template <typename Match>
std::vector<std::uint64_t> enumerate(const EffectiveKeySpec& spec, unsigned partitions, const Match& match)
{
    spec.validate();
    const std::uint64_t n = spec.space();
    const std::uint64_t parts = std::clamp<std::uint64_t>(partitions, 1, n);

    std::vector<std::vector<std::uint64_t>> found(parts);
    std::vector<std::exception_ptr> errors(parts);
    auto worker = [&](std::uint64_t p) {
        try {
            const std::uint64_t lo = n * p / parts;
            const std::uint64_t hi = n * (p + 1) / parts;
            for (std::uint64_t c = lo; c < hi; ++c)
                if (match(spec.candidate(c)))
                    found[p].push_back(c);
        } catch (...) {
            errors[p] = std::current_exception();
        }
    };
    if (parts == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::uint64_t p = 0; p < parts; ++p)
            threads.emplace_back(worker, p);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::vector<std::uint64_t> all;
    for (auto& f : found)
        all.insert(all.end(), f.begin(), f.end());
    return all;
}

std::uint64_t sqn_from_autn(AlgorithmSuite suite, const SecretKey& k, const Rand& rand, const Autn& autn)
{
    return be_value(xor_blocks(autn.sqn_xor_ak, f5(suite, k, rand)));
}

bool autn_mac_verifies(AlgorithmSuite suite, const SecretKey& k, const Rand& rand, const Autn& autn)
{
    return f1(suite, k, rand, sqn_from_autn(suite, k, rand, autn), autn.amf) == autn.mac;
}

Block<16> res_star_for(AlgorithmSuite suite, const SecretKey& k, const Rand& rand, ByteView sn_name)
{
    const auto xres = f2(suite, k, rand);
    const auto ck = f3(suite, k, rand);
    const auto ik = f4(suite, k, rand);
    return derive_xres_star(ck, ik, rand, xres, sn_name);
}

Bytes keystream_for(const KeystreamIntercept& in, const SecretKey& k, AlgorithmSuite suite, MigrationPhase phase,
                    std::size_t length)
{
    const auto ck = f3(suite, k, *in.rand);
    const auto ik = f4(suite, k, *in.rand);
    const auto k_ausf = derive_k_ausf(ck, ik, in.autn->sqn_xor_ak, in.sn_name);
    const auto k_amf = derive_k_amf(derive_k_seaf(k_ausf, in.sn_name), in.supi);
    Bytes enc_key;
    switch (in.stratum) {
    case Stratum::Nas:
        enc_key = derive_operational_key(KAmf{k_amf}, KeyType::NasEnc, kDefaultAlgorithmId, phase);
        break;
    case Stratum::Rrc:
        enc_key = derive_operational_key(KGnb{derive_k_gnb(k_amf, 0)}, KeyType::RrcEnc, kDefaultAlgorithmId, phase);
        break;
    case Stratum::Up:
        enc_key = derive_operational_key(KGnb{derive_k_gnb(k_amf, 0)}, KeyType::UpEnc, kDefaultAlgorithmId, phase);
        break;
    }
    return keystream(enc_key, in.count, in.bearer, in.direction, length);
}

Bytes target_keystream(const KeystreamIntercept& in)
{
    Bytes ks(in.known_plaintext.size());
    for (std::size_t i = 0; i < ks.size(); ++i)
        ks[i] = in.ciphertext[i] ^ in.known_plaintext[i];
    return ks;
}

// Index of the last record satisfying `pred` strictly before `before`.
template <typename Pred>
std::optional<std::size_t> last_before(const Trace& trace, std::size_t before, const Pred& pred)
{
    for (std::size_t i = std::min(before, trace.records.size()); i-- > 0;)
        if (pred(trace.records[i]))
            return i;
    return std::nullopt;
}

bool air_from_to(const TraceRecord& r, const std::string& type, const std::string& from, const std::string& to)
{
    return r.is_air() && r.type == type && r.from == from && r.to == to;
}

Bytes trace_sn_name(const Trace& trace)
{
    return to_bytes(std::string_view(trace.config().value("sn_name", std::string(kDefaultSnName))));
}

} // namespace

// --- Handshake key recovery ---

HandshakeIntercept handshake_intercept(const Trace& trace, const std::string& ue)
{
    auto response = last_before(trace, trace.records.size(), [&](const TraceRecord& r) {
        return air_from_to(r, "AuthResponse", ue, entity_id::seaf);
    });
    if (!response)
        throw EvidenceError("AuthResponse", "no AuthResponse from " + ue + " in the trace");
    auto request = last_before(trace, *response, [&](const TraceRecord& r) {
        return air_from_to(r, "AuthRequest", entity_id::seaf, ue);
    });
    if (!request)
        throw EvidenceError("AuthRequest", "no AuthRequest to " + ue + " before its AuthResponse");

    const auto req = std::get<AuthRequest>(trace.records[*request].message());
    const auto res = std::get<AuthResponse>(trace.records[*response].message());
    return {req.rand, req.autn, res.res_star, trace_sn_name(trace)};
}

bool verify_handshake_key(const HandshakeIntercept& in, const SecretKey& k, AlgorithmSuite suite)
{
    if (!suite_supports(suite, k.bits()))
        return false;
    return res_star_for(suite, k, in.rand, in.sn_name) == in.res_star &&
           autn_mac_verifies(suite, k, in.rand, in.autn);
}

AttackReport handshake_key_recovery(const HandshakeIntercept& in, const EffectiveKeySpec& spec, AlgorithmSuite suite,
                                    SearchOptions options)
{
    spec.validate();
    const auto matches = enumerate(spec, options.partitions, [&](const SecretKey& k) {
        return res_star_for(suite, k, in.rand, in.sn_name) == in.res_star;
    });

    AttackReport report;
    report.attack = AttackKind::HandshakeKeyRecovery;
    report.queries = spec.space();
    report.grover_cost = grover_queries(spec.effective_bits);
    report.details["effective_bits"] = spec.effective_bits;
    report.details["res_star_matches"] = matches.size();

    for (auto c : matches) {
        const SecretKey k = spec.candidate(c);
        if (autn_mac_verifies(suite, k, in.rand, in.autn)) {
            report.success = true;
            report.recovered = to_bytes(k.bytes());
            report.notes = "K recovered from one challenge-response pair; AUTN MAC confirms";
            return report;
        }
    }
    report.notes = matches.empty() ? "no candidate reproduces RES*; evidence inconsistent with the key spec"
                                   : "RES* matches failed AUTN MAC confirmation";
    return report;
}

// --- Keystream key recovery ---

KeystreamIntercept keystream_intercept(const Trace& trace, const std::string& ue, ByteView supi,
                                       std::size_t known_bytes)
{
    auto response = last_before(trace, trace.records.size(), [&](const TraceRecord& r) {
        return air_from_to(r, "AuthResponse", ue, entity_id::seaf);
    });
    if (!response)
        throw EvidenceError("AuthResponse", "no completed authentication for " + ue + " in the trace");
    auto request = last_before(trace, *response, [&](const TraceRecord& r) {
        return air_from_to(r, "AuthRequest", entity_id::seaf, ue);
    });
    if (!request)
        throw EvidenceError("AuthRequest", "no AuthRequest to " + ue + " before its AuthResponse");

    std::optional<ProtectedPdu> pdu;
    for (std::size_t i = *response + 1; i < trace.records.size() && !pdu; ++i) {
        const auto& r = trace.records[i];
        if (!air_from_to(r, "ProtectedPdu", ue, entity_id::seaf))
            continue;
        auto p = std::get<ProtectedPdu>(r.message());
        if (p.stratum == Stratum::Nas && p.direction == Direction::Uplink)
            pdu = std::move(p);
    }
    if (!pdu)
        throw EvidenceError("ProtectedPdu", "no uplink NAS PDU from " + ue + " after authentication");

    const auto req = std::get<AuthRequest>(trace.records[*request].message());
    const Bytes plain = registration_complete_plaintext();
    const std::size_t n = std::min({known_bytes, plain.size(), pdu->payload.size()});

    KeystreamIntercept in;
    in.rand = req.rand;
    in.autn = req.autn;
    in.sn_name = trace_sn_name(trace);
    in.supi = to_bytes(supi);
    in.stratum = pdu->stratum;
    in.count = pdu->count;
    in.bearer = pdu->bearer;
    in.direction = pdu->direction;
    in.ciphertext = pdu->payload;
    in.known_plaintext.assign(plain.begin(), plain.begin() + static_cast<std::ptrdiff_t>(n));
    return in;
}

namespace {

void require_keystream_evidence(const KeystreamIntercept& in)
{
    if (!in.rand)
        throw EvidenceError("AuthRequest", "RAND was not intercepted; the key chain cannot be evaluated");
    if (!in.autn)
        throw EvidenceError("AuthRequest", "AUTN was not intercepted; K_AUSF cannot be evaluated");
    if (in.known_plaintext.size() < kMinKnownPlaintext)
        throw EvidenceError("known-plaintext", "need at least " + std::to_string(kMinKnownPlaintext) +
                                                   " bytes of known plaintext, got " +
                                                   std::to_string(in.known_plaintext.size()));
    if (in.ciphertext.size() < in.known_plaintext.size())
        throw EvidenceError("ProtectedPdu", "ciphertext shorter than the known plaintext");
    if (in.supi.empty())
        throw EvidenceError("SUPI", "subscriber identity needed for K_AMF");
}

} // namespace

bool verify_keystream_key(const KeystreamIntercept& in, const SecretKey& k, AlgorithmSuite suite,
                          MigrationPhase phase)
{
    require_keystream_evidence(in);
    if (!suite_supports(suite, k.bits()))
        return false;
    return keystream_for(in, k, suite, phase, in.known_plaintext.size()) == target_keystream(in) &&
           autn_mac_verifies(suite, k, *in.rand, *in.autn);
}

AttackReport keystream_key_recovery(const KeystreamIntercept& in, const EffectiveKeySpec& spec, AlgorithmSuite suite,
                                    MigrationPhase phase, SearchOptions options)
{
    require_keystream_evidence(in);
    spec.validate();
    const Bytes target = target_keystream(in);
    const auto matches = enumerate(spec, options.partitions, [&](const SecretKey& k) {
        return keystream_for(in, k, suite, phase, target.size()) == target;
    });

    AttackReport report;
    report.attack = AttackKind::KeystreamKeyRecovery;
    report.queries = spec.space();
    report.grover_cost = grover_queries(spec.effective_bits);
    report.details["effective_bits"] = spec.effective_bits;
    report.details["known_plaintext_bytes"] = in.known_plaintext.size();
    report.details["stratum"] = to_string(in.stratum);
    report.details["count"] = in.count;
    report.details["keystream_matches"] = matches.size();

    for (auto c : matches) {
        const SecretKey k = spec.candidate(c);
        if (autn_mac_verifies(suite, k, *in.rand, *in.autn)) {
            report.success = true;
            report.recovered = to_bytes(k.bytes());
            report.notes = "K recovered through the full derivation chain from one protected PDU";
            return report;
        }
    }
    report.notes = matches.empty() ? "no candidate reproduces the keystream; evidence inconsistent with the key spec"
                                   : "keystream matches failed AUTN MAC confirmation";
    return report;
}

// --- Linkability ---

namespace {

struct Capture {
    AuthRequest request;
    std::string recipient;
};

Capture capture_at(const Trace& trace, std::size_t capture)
{
    const auto records = trace.air("AuthRequest", entity_id::seaf);
    if (capture >= records.size())
        throw EvidenceError("AuthRequest", "AuthRequest #" + std::to_string(capture) + " not captured (" +
                                               std::to_string(records.size()) + " available)");
    return {std::get<AuthRequest>(records[capture]->message()), records[capture]->to};
}

std::size_t ue_number(const std::string& id)
{
    if (id.size() < 3 || id.rfind("ue", 0) != 0 ||
        !std::all_of(id.begin() + 2, id.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw DomainError("'" + id + "' is not a UE id");
    return std::stoul(id.substr(2));
}

} // namespace

AttackReport linkability_replay(Network& net, std::size_t capture, const std::vector<std::string>& probes,
                                std::uint64_t guess_seed)
{
    AttackReport report;
    report.attack = AttackKind::LinkabilityReplay;
    const Capture cap = capture_at(net.trace(), capture);
    report.details["capture"] = capture;
    report.details["original"] = cap.recipient;

    if (probes.empty()) {
        report.notes = "no probe targets";
        report.details["probes"] = json::array();
        return report;
    }

    json rows = json::array();
    std::vector<std::string> responses;
    for (const auto& probe : probes) {
        auto answers = net.inject(probe, cap.request);
        ++report.queries;
        responses.push_back(answers.empty() ? "none" : message_type(answers.front()));
    }
    const bool signal = std::find(responses.begin(), responses.end(), "SyncFailureMsg") != responses.end();
    const bool merged = !signal && std::find(responses.begin(), responses.end(), "AuthFailureMsg") != responses.end();

    std::optional<std::size_t> guess;
    if (merged) {
        std::mt19937_64 rng(guess_seed);
        guess = std::uniform_int_distribution<std::size_t>(0, probes.size() - 1)(rng);
    }

    std::size_t correct = 0;
    std::vector<std::string> identified;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const bool classified = merged ? i == *guess : responses[i] == "SyncFailureMsg";
        const bool truth = probes[i] == cap.recipient;
        correct += classified == truth;
        if (classified)
            identified.push_back(probes[i]);
        rows.push_back({{"ue", probes[i]},
                        {"response", responses[i]},
                        {"classified_original", classified},
                        {"is_original", truth}});
    }
    report.details["probes"] = rows;
    report.details["correct"] = correct;
    report.details["total"] = probes.size();
    report.details["defeated"] = merged;
    report.details["identified"] = identified;

    if (merged) {
        report.details["guess"] = probes[*guess];
        report.details["guess_correct"] = probes[*guess] == cap.recipient;
        report.notes = "failure responses indistinguishable; identification reduced to a uniform guess";
        return report;
    }
    report.success = correct == probes.size();
    if (identified.size() == 1)
        report.recovered = to_bytes(std::string_view(identified.front()));
    report.notes = report.success ? "SyncFailureMsg singles out the original recipient"
                                   : "classification disagrees with ground truth";
    return report;
}

// --- SQN leak ---

AttackReport sqn_leak(Network& net, std::size_t capture, const std::string& target, int replays, bool advance)
{
    if (replays < 2)
        throw DomainError("sqn-leak needs at least 2 replays");
    const std::size_t index = ue_number(target);
    if (index >= net.ue_count())
        throw DomainError("no UE " + target);

    AttackReport report;
    report.attack = AttackKind::SqnLeak;
    const Capture cap = capture_at(net.trace(), capture);
    report.details["capture"] = capture;
    report.details["target"] = target;

    std::vector<Block<6>> concealed;
    std::vector<std::uint64_t> truth;
    json probes = json::array();
    for (int i = 0; i < replays; ++i) {
        if (i > 0 && advance)
            net.register_ue(index);
        truth.push_back(net.ue(index).usim.highest_sqn);
        auto answers = net.inject(target, cap.request);
        ++report.queries;
        const std::string type = answers.empty() ? "none" : message_type(answers.front());
        probes.push_back({{"response", type}});

        std::optional<Block<14>> token;
        if (auto* s = answers.empty() ? nullptr : std::get_if<SyncFailureMsg>(&answers.front()))
            token = s->auts;
        else if (auto* m = answers.empty() ? nullptr : std::get_if<AuthFailureMsg>(&answers.front()))
            token = m->token;
        if (!token) {
            report.details["probes"] = probes;
            report.notes = type == "MacFailureMsg" ? "target rejected the MAC: not the original recipient"
                                                   : "target did not return a resynchronisation token (" + type + ")";
            return report;
        }
        concealed.push_back(leading<6>(*token));
        probes.back()["concealed_sqn"] = to_hex(concealed.back());
    }

    json diffs = json::array();
    Bytes recovered;
    bool all_match = true;
    for (std::size_t i = 0; i + 1 < concealed.size(); ++i) {
        const auto d = xor_blocks(concealed[i], concealed[i + 1]);
        const std::uint64_t value = be_value(d);
        const std::uint64_t expected = truth[i] ^ truth[i + 1];
        all_match = all_match && value == expected;
        append(recovered, d);
        diffs.push_back({{"recovered_xor", value}, {"ground_truth_xor", expected}});
    }
    report.details["probes"] = probes;
    report.details["differences"] = diffs;
    report.success = all_match;
    report.recovered = recovered;
    report.notes = all_match ? "AUTS concealed-SQN fields XOR to the true SQN differences"
                             : "recovered differences disagree with the USIM state";
    return report;
}

// --- SUCI compromise ---

std::map<std::string, std::string> ground_truth_supis(const ScenarioConfig& config)
{
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < config.subscribers.size(); ++i)
        out[entity_id::ue(i)] = config.subscribers[i].supi;
    return out;
}

AttackReport suci_compromise(const Trace& trace, ByteView home_private_key,
                             const std::map<std::string, std::string>& expected)
{
    AttackReport report;
    report.attack = AttackKind::SuciCompromise;

    json rows = json::array();
    std::size_t captured = 0;
    std::size_t correct = 0;
    Bytes recovered;
    for (const auto* r : trace.air("RegistrationRequest")) {
        if (r->from == entity_id::attacker)
            continue;
        const auto req = std::get<RegistrationRequest>(r->message());
        const auto* suci = std::get_if<Suci>(&req.identity);
        if (!suci)
            continue;
        ++captured;
        ++report.queries;
        json row = {{"index", r->index}, {"ue", r->from}, {"scheme_id", suci->scheme_id}};
        try {
            const Supi supi = reveal_suci(*suci, home_private_key, SchemeRegistry::standard());
            auto it = expected.find(r->from);
            const bool ok = it != expected.end() && it->second == supi.str();
            correct += ok;
            row["recovered"] = supi.str();
            row["correct"] = ok;
            if (!recovered.empty())
                recovered.push_back('\n');
            append(recovered, supi.value());
        } catch (const Error& e) {
            row["error"] = e.what();
            row["correct"] = false;
        }
        rows.push_back(std::move(row));
    }
    report.details["sucis"] = rows;
    report.details["captured"] = captured;
    report.details["correct"] = correct;

    if (captured == 0) {
        report.notes = "no concealed identifiers captured";
        return report;
    }
    report.success = correct == captured;
    if (!recovered.empty())
        report.recovered = recovered;
    report.notes = report.success ? "every captured SUCI opened with the compromised home key"
                                  : std::to_string(captured - correct) + " of " + std::to_string(captured) +
                                        " SUCIs did not open with the compromised key";
    return report;
}

// --- Dispatch ---

bool is_passive_attack(const std::string& name)
{
    return name == "handshake-recovery" || name == "keystream-recovery" || name == "suci-compromise";
}

AttackKind attack_kind(const std::string& name)
{
    static const std::map<std::string, AttackKind, std::less<>> kinds = {
        {"handshake-recovery", AttackKind::HandshakeKeyRecovery},
        {"keystream-recovery", AttackKind::KeystreamKeyRecovery},
        {"linkability", AttackKind::LinkabilityReplay},
        {"sqn-leak", AttackKind::SqnLeak},
        {"suci-compromise", AttackKind::SuciCompromise},
    };
    auto it = kinds.find(name);
    if (it != kinds.end())
        return it->second;
    std::string valid;
    for (auto n : kAttackNames)
        valid += (valid.empty() ? "" : ", ") + std::string(n);
    throw ConfigError("unknown attack '" + name + "' (valid: " + valid + ")");
}

namespace {

std::size_t ue_param(const Network& net, const json& params, const char* key, std::size_t fallback)
{
    const std::size_t ue = params.value(key, fallback);
    if (ue >= net.ue_count())
        throw ConfigError(std::string(key) + ": no subscriber with index " + std::to_string(ue));
    return ue;
}

} // namespace

AttackReport run_attack(Network& net, const Trace& evidence, const std::string& name, const json& params)
{
    attack_kind(name);
    const auto& config = net.config();
    const SearchOptions search{params.value("partitions", 1u)};
    try {
        if (name == "handshake-recovery") {
            const std::size_t ue = ue_param(net, params, "ue", 0);
            const auto spec = EffectiveKeySpec::around(net.subscriber_key(ue), params.value("effective_bits", 20));
            return handshake_key_recovery(handshake_intercept(evidence, entity_id::ue(ue)), spec,
                                          config.subscribers[ue].suite, search);
        }
        if (name == "keystream-recovery") {
            const std::size_t ue = ue_param(net, params, "ue", 0);
            const auto spec = EffectiveKeySpec::around(net.subscriber_key(ue), params.value("effective_bits", 16));
            auto in = keystream_intercept(evidence, entity_id::ue(ue), net.supi(ue).value(),
                                          params.value("known_bytes", std::size_t{16}));
            if (params.value("withhold_rand", false))
                in.rand.reset();
            return keystream_key_recovery(in, spec, config.subscribers[ue].suite, config.phase, search);
        }
        if (name == "linkability") {
            std::vector<std::string> probes;
            if (params.contains("probes")) {
                for (const auto& p : params.at("probes"))
                    probes.push_back(entity_id::ue(ue_param(net, json{{"probe", p}}, "probe", 0)));
            } else {
                for (std::size_t i = 0; i < net.ue_count(); ++i)
                    probes.push_back(entity_id::ue(i));
            }
            const std::uint64_t seed = params.value("guess_seed", config.seed ^ net.trace().records.size());
            return linkability_replay(net, params.value("capture", std::size_t{0}), probes, seed);
        }
        if (name == "sqn-leak") {
            const std::size_t capture = params.value("capture", std::size_t{0});
            std::string target;
            if (params.contains("ue"))
                target = entity_id::ue(ue_param(net, params, "ue", 0));
            else
                target = capture_at(net.trace(), capture).recipient;
            return sqn_leak(net, capture, target, params.value("replays", 2), params.value("advance", true));
        }
        if (name == "suci-compromise") {
            // The classical home key, as recovered by a large quantum computer.
            return suci_compromise(evidence, net.home_keys().ecies.private_key, ground_truth_supis(config));
        }
    } catch (const json::exception& e) {
        throw ConfigError("attack parameters: " + std::string(e.what()));
    }
    throw ConfigError("attack '" + name + "' has no dispatcher");
}

} // namespace pq5g
