#include "pq5g/entities.hpp"

#include "pq5g/error.hpp"

#include <random>

namespace pq5g {

std::string entity_id::ue(std::size_t index)
{
    return "ue" + std::to_string(index);
}

const SchemeKeyPair& HomeNetworkKeys::for_scheme(std::uint8_t id) const
{
    switch (id) {
    case scheme_id::ecies:
        return ecies;
    case scheme_id::pq_slot:
        return pq_slot;
    default:
        throw SchemeNotFound("home network holds no key for scheme " + std::to_string(id));
    }
}

const SeafSession* SeafState::session_for(const std::string& ue) const
{
    auto it = by_ue.find(ue);
    if (it == by_ue.end())
        return nullptr;
    auto s = sessions.find(it->second);
    return s == sessions.end() ? nullptr : &s->second;
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    template <std::size_t N>
    Block<N> block()
    {
        Block<N> out{};
        fill(out);
        return out;
    }

    Bytes bytes(std::size_t n)
    {
        Bytes out(n);
        fill(out);
        return out;
    }

private:
    template <typename Range>
    void fill(Range& r)
    {
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i % 8 == 0)
                word = engine_();
            r[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
        }
    }

    std::mt19937_64 engine_;
};

// Collects outputs for one transition.
struct Out {
    std::vector<Envelope> messages;
    std::vector<Event> events;

    void send(const std::string& from, const std::string& to, ProtocolMessage m)
    {
        messages.push_back({from, to, std::move(m)});
    }
    void event(std::string kind, std::string detail = {}) { events.push_back({std::move(kind), std::move(detail)}); }
    void unexpected(const ProtocolMessage& m, const std::string& why)
    {
        event("protocol-state", "unexpected " + message_type(m) + " (" + why + ")");
    }
};

// --- UE ---

RegistrationRequest suci_registration(const UeState& ue, Rng& rng)
{
    auto randomness = rng.bytes(32);
    return {conceal_supi(ue.supi, ue.home_public_key, SchemeRegistry::standard(), ue.scheme, randomness)};
}

void ue_on_auth_request(UeState& ue, const Envelope& in, const AuthRequest& m, Rng& rng, Out& out)
{
    auto result = usim_process_challenge(ue.usim, m.rand, m.autn);
    if (auto* ok = std::get_if<challenge::Success>(&result)) {
        auto r = me_compute_response(ok->ck, ok->ik, ok->res, m.rand, m.autn, ue.sn_name);
        ue.pending_k_seaf = r.k_seaf;
        out.event("usim-accepted");
        out.send(ue.id, in.from, AuthResponse{r.res_star});
    } else if (std::holds_alternative<challenge::MacFailure>(result)) {
        out.event("usim-mac-failure");
        if (ue.merged_errors)
            out.send(ue.id, in.from, AuthFailureMsg{rng.block<14>()});
        else
            out.send(ue.id, in.from, MacFailureMsg{});
    } else {
        const auto& sync = std::get<challenge::SyncFailure>(result);
        out.event("usim-sync-failure");
        if (ue.merged_errors)
            out.send(ue.id, in.from, AuthFailureMsg{sync.auts});
        else
            out.send(ue.id, in.from, SyncFailureMsg{sync.auts});
    }
}

void ue_on_auth_result(UeState& ue, const AuthResult& m, Out& out)
{
    if (!ue.pending_k_seaf) {
        out.unexpected(m, "no authentication in progress");
        return;
    }
    if (m.success) {
        KeyContext keys = build_key_context(*ue.pending_k_seaf, ue.supi.value(), ue.phase);
        keys.erase_anchor();
        ue.nas.emplace(Stratum::Nas, keys.nas);
        ue.up.emplace(Stratum::Up, keys.up);
        ue.keys = std::move(keys);
        out.event("keys-established", std::string(to_string(ue.phase)));
    } else {
        out.event("auth-rejected");
    }
    ue.pending_k_seaf.reset();
}

void ue_on_pdu(UeState& ue, const Envelope& in, const ProtectedPdu& pdu, Out& out)
{
    if (pdu.stratum != Stratum::Nas || pdu.direction != Direction::Downlink || !ue.nas) {
        out.unexpected(pdu, "no matching downlink channel");
        return;
    }
    Bytes plaintext;
    try {
        plaintext = unprotect_pdu(*ue.nas, pdu);
    } catch (const IntegrityError& e) {
        out.event("integrity-failure", e.what());
        return;
    } catch (const ReplayError& e) {
        out.event("replay-rejected", e.what());
        return;
    }
    NasPayload payload;
    try {
        payload = decode_nas(plaintext);
    } catch (const FormatError& e) {
        out.event("nas-malformed", e.what());
        return;
    }
    if (auto* assign = std::get_if<GutiAssignment>(&payload)) {
        ue.guti = assign->guti;
        ue.registered = true;
        out.event("guti-stored");
        out.send(ue.id, in.from, protect_pdu(*ue.nas, registration_complete_plaintext(), 0, Direction::Uplink));
        if (!ue.uplink_data.empty() && ue.up)
            out.send(ue.id, in.from, protect_pdu(*ue.up, ue.uplink_data, 1, Direction::Uplink));
    } else {
        out.event("nas-ignored", "downlink RegistrationComplete");
    }
}

void ue_step(UeState& ue, const Envelope& in, Rng& rng, Out& out)
{
    const auto& msg = in.message;
    if (std::holds_alternative<IdentityRequest>(msg)) {
        out.send(ue.id, in.from, suci_registration(ue, rng));
    } else if (auto* req = std::get_if<AuthRequest>(&msg)) {
        ue_on_auth_request(ue, in, *req, rng, out);
    } else if (auto* res = std::get_if<AuthResult>(&msg)) {
        ue_on_auth_result(ue, *res, out);
    } else if (auto* pdu = std::get_if<ProtectedPdu>(&msg)) {
        ue_on_pdu(ue, in, *pdu, out);
    } else {
        out.unexpected(msg, "not handled by UE");
    }
}

// --- SEAF ---

SeafSession* seaf_session(SeafState& s, const std::string& ue)
{
    auto it = s.by_ue.find(ue);
    if (it == s.by_ue.end())
        return nullptr;
    auto found = s.sessions.find(it->second);
    return found == s.sessions.end() ? nullptr : &found->second;
}

SeafSession* seaf_context(SeafState& s, std::uint32_t ctx)
{
    auto it = s.sessions.find(ctx);
    return it == s.sessions.end() ? nullptr : &it->second;
}

AvRequest av_request_for(const SeafState& s, std::uint32_t ctx, const SeafSession& session)
{
    AvRequest req;
    req.context = ctx;
    if (auto* suci = std::get_if<Suci>(&session.identity))
        req.identity = *suci;
    else
        req.identity = std::get<Supi>(session.identity);
    req.sn_name = s.sn_name;
    return req;
}

void seaf_fail(SeafSession& session, Out& out, const std::string& why, bool notify_ue)
{
    session.stage = SeafStage::Failed;
    out.event("auth-failed", why);
    if (notify_ue)
        out.send(entity_id::seaf, session.ue, AuthResult{false});
}

void seaf_on_registration(SeafState& s, const Envelope& in, const RegistrationRequest& m, Out& out)
{
    const std::uint32_t ctx = s.next_context++;
    SeafSession session;
    session.ue = in.from;

    if (auto* suci = std::get_if<Suci>(&m.identity)) {
        session.identity = *suci;
        session.stage = SeafStage::AwaitingAv;
        out.send(entity_id::seaf, entity_id::ausf, av_request_for(s, ctx, session));
    } else if (auto supi = s.identities.resolve(std::get<Guti>(m.identity))) {
        session.identity = *supi;
        session.stage = SeafStage::AwaitingAv;
        out.event("guti-resolved");
        out.send(entity_id::seaf, entity_id::ausf, av_request_for(s, ctx, session));
    } else {
        session.stage = SeafStage::Identifying;
        out.event("guti-unknown", "requesting SUCI");
        out.send(entity_id::seaf, in.from, IdentityRequest{});
    }
    s.by_ue[in.from] = ctx;
    s.sessions.insert_or_assign(ctx, std::move(session));
}

void seaf_on_resync_token(SeafState& s, SeafSession& session, const Block<14>& token, Out& out)
{
    if (session.stage != SeafStage::AwaitingResponse || session.resync_attempted) {
        seaf_fail(session, out, "synchronisation failure not recoverable", false);
        return;
    }
    session.resync_attempted = true;
    session.stage = SeafStage::AwaitingAv;
    AvRequest req = av_request_for(s, s.by_ue.at(session.ue), session);
    req.resync = ResyncInfo{session.rand, token};
    out.event("resync-requested");
    out.send(entity_id::seaf, entity_id::ausf, std::move(req));
}

void seaf_on_confirm_ack(SeafState& s, SeafSession& session, const AuthConfirmAck& m, Out& out)
{
    if (session.stage != SeafStage::AwaitingConfirm) {
        out.unexpected(m, "no confirmation pending");
        return;
    }
    if (!m.success || !m.supi || !m.k_seaf) {
        seaf_fail(session, out, "home network rejected RES*", true);
        return;
    }
    session.supi = m.supi;
    session.k_seaf = m.k_seaf;
    KeyContext keys = build_key_context(*session.k_seaf, m.supi->value(), s.phase);
    keys.erase_anchor();
    session.k_seaf.reset();
    session.nas.emplace(Stratum::Nas, keys.nas);
    session.up.emplace(Stratum::Up, keys.up);
    session.keys = std::move(keys);
    session.stage = SeafStage::Established;

    s.identities.mark_authenticated(*m.supi);
    session.guti = s.identities.assign(*m.supi);

    out.event("auth-success");
    out.send(entity_id::seaf, session.ue, AuthResult{true});
    out.send(entity_id::seaf, session.ue,
             protect_pdu(*session.nas, encode_nas(GutiAssignment{*session.guti}), 0, Direction::Downlink));
}

void seaf_on_pdu(SeafSession& session, const ProtectedPdu& pdu, Out& out)
{
    if (session.stage != SeafStage::Established || pdu.direction != Direction::Uplink ||
        pdu.stratum == Stratum::Rrc) {
        out.unexpected(pdu, "no matching uplink channel");
        return;
    }
    auto& channel = pdu.stratum == Stratum::Nas ? *session.nas : *session.up;
    Bytes plaintext;
    try {
        plaintext = unprotect_pdu(channel, pdu);
    } catch (const IntegrityError& e) {
        out.event("integrity-failure", e.what());
        return;
    } catch (const ReplayError& e) {
        out.event("replay-rejected", e.what());
        return;
    }
    if (pdu.stratum == Stratum::Up) {
        out.event("up-data", std::to_string(plaintext.size()) + " bytes");
        return;
    }
    try {
        if (std::holds_alternative<RegistrationComplete>(decode_nas(plaintext)))
            out.event("registration-complete");
        else
            out.event("nas-ignored", "uplink GutiAssignment");
    } catch (const FormatError& e) {
        out.event("nas-malformed", e.what());
    }
}

void seaf_from_ue(SeafState& s, const Envelope& in, Out& out)
{
    const auto& msg = in.message;
    if (auto* reg = std::get_if<RegistrationRequest>(&msg)) {
        seaf_on_registration(s, in, *reg, out);
        return;
    }
    SeafSession* session = seaf_session(s, in.from);
    if (!session) {
        out.unexpected(msg, "no session for " + in.from);
        return;
    }
    if (auto* res = std::get_if<AuthResponse>(&msg)) {
        if (session->stage != SeafStage::AwaitingResponse) {
            out.unexpected(msg, "no challenge outstanding");
            return;
        }
        if (hash_res_star(session->rand, res->res_star) != session->hxres_star) {
            seaf_fail(*session, out, "HRES* does not match HXRES*", true);
            return;
        }
        session->stage = SeafStage::AwaitingConfirm;
        out.send(entity_id::seaf, entity_id::ausf, AuthConfirm{s.by_ue.at(in.from), res->res_star});
    } else if (std::holds_alternative<MacFailureMsg>(msg)) {
        if (session->stage != SeafStage::AwaitingResponse) {
            out.unexpected(msg, "no challenge outstanding");
            return;
        }
        seaf_fail(*session, out, "UE reported MAC failure", false);
    } else if (auto* sync = std::get_if<SyncFailureMsg>(&msg)) {
        seaf_on_resync_token(s, *session, sync->auts, out);
    } else if (auto* merged = std::get_if<AuthFailureMsg>(&msg)) {
        seaf_on_resync_token(s, *session, merged->token, out);
    } else if (auto* pdu = std::get_if<ProtectedPdu>(&msg)) {
        seaf_on_pdu(*session, *pdu, out);
    } else {
        out.unexpected(msg, "not handled by SEAF");
    }
}

void seaf_from_ausf(SeafState& s, const Envelope& in, Out& out)
{
    const auto& msg = in.message;
    if (auto* av = std::get_if<ServingAvDelivery>(&msg)) {
        SeafSession* session = seaf_context(s, av->context);
        if (!session || session->stage != SeafStage::AwaitingAv) {
            out.unexpected(msg, "no AV requested");
            return;
        }
        session->rand = av->rand;
        session->autn = av->autn;
        session->hxres_star = av->hxres_star;
        session->stage = SeafStage::AwaitingResponse;
        out.send(entity_id::seaf, session->ue, AuthRequest{av->rand, av->autn});
    } else if (auto* rej = std::get_if<AvReject>(&msg)) {
        SeafSession* session = seaf_context(s, rej->context);
        if (!session) {
            out.unexpected(msg, "unknown context");
            return;
        }
        seaf_fail(*session, out, rej->reason, true);
    } else if (auto* ack = std::get_if<AuthConfirmAck>(&msg)) {
        SeafSession* session = seaf_context(s, ack->context);
        if (!session) {
            out.unexpected(msg, "unknown context");
            return;
        }
        seaf_on_confirm_ack(s, *session, *ack, out);
    } else {
        out.unexpected(msg, "not handled by SEAF");
    }
}

void seaf_step(SeafState& s, const Envelope& in, Out& out)
{
    if (in.from == entity_id::ausf)
        seaf_from_ausf(s, in, out);
    else
        seaf_from_ue(s, in, out);
}

// --- AUSF ---

void ausf_step(AusfState& s, const Envelope& in, Out& out)
{
    const auto& msg = in.message;
    const std::string& me = entity_id::ausf;
    if (auto* req = std::get_if<AvRequest>(&msg)) {
        if (in.from != entity_id::seaf) {
            out.unexpected(msg, "AV requests come from the SEAF");
            return;
        }
        s.requested_sn_name[req->context] = req->sn_name;
        out.send(me, entity_id::arpf, *req);
    } else if (auto* resp = std::get_if<AvResponse>(&msg)) {
        // Resynchronised requests replace the earlier, now stale, entry.
        auto sn = s.requested_sn_name.find(resp->context);
        if (sn == s.requested_sn_name.end()) {
            out.unexpected(msg, "no AV requested");
            return;
        }
        s.entries.insert_or_assign(resp->context, AusfEntry{resp->he_av, resp->supi, sn->second, false});
        out.send(me, entity_id::seaf, ServingAvDelivery{resp->context, resp->he_av.rand, resp->he_av.autn,
                                                        hash_res_star(resp->he_av.rand, resp->he_av.xres_star)});
    } else if (auto* rej = std::get_if<AvReject>(&msg)) {
        out.send(me, entity_id::seaf, *rej);
    } else if (auto* confirm = std::get_if<AuthConfirm>(&msg)) {
        auto it = s.entries.find(confirm->context);
        if (it == s.entries.end() || it->second.used) {
            out.event("av-not-current");
            out.send(me, entity_id::seaf, AuthConfirmAck{confirm->context, false, std::nullopt, std::nullopt});
            return;
        }
        auto& entry = it->second;
        entry.used = true;
        if (confirm->res_star != entry.he_av.xres_star) {
            out.event("res-star-mismatch");
            out.send(me, entity_id::seaf, AuthConfirmAck{confirm->context, false, std::nullopt, std::nullopt});
            return;
        }
        out.event("home-confirmed");
        out.send(me, entity_id::seaf,
                 AuthConfirmAck{confirm->context, true, entry.supi, derive_k_seaf(entry.he_av.k_ausf, entry.sn_name)});
    } else {
        out.unexpected(msg, "not handled by AUSF");
    }
}

// --- ARPF ---

void arpf_step(ArpfState& s, const Envelope& in, Rng& rng, Out& out)
{
    const std::string& me = entity_id::arpf;
    auto* req = std::get_if<AvRequest>(&in.message);
    if (!req) {
        out.unexpected(in.message, "not handled by ARPF");
        return;
    }
    auto reject = [&](const std::string& why) {
        out.event("av-rejected", why);
        out.send(me, in.from, AvReject{req->context, why});
    };

    std::optional<Supi> supi;
    if (auto* suci = std::get_if<Suci>(&req->identity)) {
        try {
            supi = reveal_suci(*suci, s.keys.for_scheme(suci->scheme_id).private_key, SchemeRegistry::standard());
        } catch (const Error& e) {
            reject(std::string("SUCI not decryptable: ") + e.what());
            return;
        }
    } else {
        supi = std::get<Supi>(req->identity);
    }

    auto it = s.subscribers.find(*supi);
    if (it == s.subscribers.end()) {
        reject("unknown subscriber");
        return;
    }
    SubscriberRecord& record = it->second;

    if (req->resync) {
        auto sqn_ms = recover_sqn_from_auts(record.suite, record.k, req->resync->rand, req->resync->auts);
        if (!sqn_ms) {
            reject("AUTS verification failed");
            return;
        }
        record.sqn = *sqn_ms;
        out.event("resynchronised", "SQN_MS=" + std::to_string(*sqn_ms));
    }

    BaseAV base = generate_base_av(record, rng.block<16>());
    out.send(me, in.from, AvResponse{req->context, build_he_av(base, req->sn_name), record.supi});
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

StepResult step(EntityState state, const Envelope& incoming, std::uint64_t rng_seed)
{
    Rng rng(rng_seed);
    Out out;
    std::visit(overloaded{
                   [&](UeState& ue) { ue_step(ue, incoming, rng, out); },
                   [&](SeafState& seaf) { seaf_step(seaf, incoming, out); },
                   [&](AusfState& ausf) { ausf_step(ausf, incoming, out); },
                   [&](ArpfState& arpf) { arpf_step(arpf, incoming, rng, out); },
               },
               state);
    return {std::move(state), std::move(out.messages), std::move(out.events)};
}

std::string_view to_string(ConcealmentLocation location)
{
    return location == ConcealmentLocation::Usim ? "USIM" : "ME";
}

StepResult start_registration(UeState state, std::uint64_t rng_seed)
{
    Rng rng(rng_seed);
    Out out;
    if (state.guti)
        out.send(state.id, entity_id::seaf, RegistrationRequest{*state.guti});
    else
        out.send(state.id, entity_id::seaf, suci_registration(state, rng));
    out.event("registration-start",
              state.guti ? std::string("GUTI") : "SUCI concealed in " + std::string(to_string(state.concealment)));
    return {std::move(state), std::move(out.messages), std::move(out.events)};
}

} // namespace pq5g
