#include "pq5g/messages.hpp"

#include "pq5g/error.hpp"

namespace pq5g {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

namespace code {
constexpr std::uint8_t registration_request = 0x01;
constexpr std::uint8_t identity_request = 0x02;
constexpr std::uint8_t auth_request = 0x03;
constexpr std::uint8_t auth_response = 0x04;
constexpr std::uint8_t mac_failure = 0x05;
constexpr std::uint8_t sync_failure = 0x06;
constexpr std::uint8_t auth_failure = 0x07;
constexpr std::uint8_t auth_result = 0x08;
constexpr std::uint8_t protected_pdu = 0x09;
constexpr std::uint8_t av_request = 0x20;
constexpr std::uint8_t av_response = 0x21;
constexpr std::uint8_t av_reject = 0x22;
constexpr std::uint8_t serving_av = 0x23;
constexpr std::uint8_t auth_confirm = 0x24;
constexpr std::uint8_t auth_confirm_ack = 0x25;

constexpr std::uint8_t nas_guti_assignment = 0x41;
constexpr std::uint8_t nas_registration_complete = 0x42;
} // namespace code

class Writer {
public:
    explicit Writer(std::uint8_t type) { out_.push_back(type); }

    Writer& u8(std::uint8_t v)
    {
        out_.push_back(v);
        return *this;
    }
    Writer& u32(std::uint32_t v)
    {
        append(out_, be_bytes(v, 4));
        return *this;
    }
    Writer& raw(ByteView v)
    {
        append(out_, v);
        return *this;
    }
    Writer& var(ByteView v)
    {
        if (v.size() > 0xFFFF)
            throw LengthError("field too long to encode");
        append(out_, be_bytes(v.size(), 2));
        append(out_, v);
        return *this;
    }
    Writer& supi(const Supi& s) { return var(s.value()).var(s.home_network_id()); }
    Writer& suci(const Suci& s) { return var(s.serialize()); }

    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class Reader {
public:
    explicit Reader(ByteView in) : in_(in) {}

    std::uint8_t u8()
    {
        need(1);
        return in_[pos_++];
    }
    std::uint32_t u32() { return static_cast<std::uint32_t>(be_value(take(4))); }
    template <std::size_t N>
    Block<N> fixed()
    {
        return leading<N>(take(N));
    }
    Bytes var()
    {
        std::size_t n = be_value(take(2));
        return to_bytes(take(n));
    }
    Supi supi()
    {
        Bytes v = var();
        Bytes hn = var();
        try {
            return Supi(std::move(v), std::move(hn));
        } catch (const LengthError& e) {
            throw FormatError(e.what());
        }
    }
    Suci suci() { return Suci::parse(var()); }
    bool flag()
    {
        auto v = u8();
        if (v > 1)
            throw FormatError("boolean field out of range");
        return v == 1;
    }

    void finish() const
    {
        if (pos_ != in_.size())
            throw FormatError("trailing bytes after message");
    }

private:
    void need(std::size_t n) const
    {
        if (in_.size() - pos_ < n)
            throw FormatError("truncated message");
    }
    ByteView take(std::size_t n)
    {
        need(n);
        auto v = in_.subspan(pos_, n);
        pos_ += n;
        return v;
    }

    ByteView in_;
    std::size_t pos_ = 0;
};

} // namespace

std::string message_type(const ProtocolMessage& msg)
{
    return std::visit(overloaded{
                          [](const RegistrationRequest&) { return "RegistrationRequest"; },
                          [](const IdentityRequest&) { return "IdentityRequest"; },
                          [](const AuthRequest&) { return "AuthRequest"; },
                          [](const AuthResponse&) { return "AuthResponse"; },
                          [](const MacFailureMsg&) { return "MacFailureMsg"; },
                          [](const SyncFailureMsg&) { return "SyncFailureMsg"; },
                          [](const AuthFailureMsg&) { return "AuthFailureMsg"; },
                          [](const AuthResult&) { return "AuthResult"; },
                          [](const ProtectedPdu&) { return "ProtectedPdu"; },
                          [](const AvRequest&) { return "AvRequest"; },
                          [](const AvResponse&) { return "AvResponse"; },
                          [](const AvReject&) { return "AvReject"; },
                          [](const ServingAvDelivery&) { return "ServingAvDelivery"; },
                          [](const AuthConfirm&) { return "AuthConfirm"; },
                          [](const AuthConfirmAck&) { return "AuthConfirmAck"; },
                      },
                      msg);
}

bool is_air_message(const ProtocolMessage& msg)
{
    return msg.index() <= ProtocolMessage(ProtectedPdu{}).index();
}

Bytes encode(const ProtocolMessage& msg)
{
    return std::visit(
        overloaded{
            [](const RegistrationRequest& m) {
                Writer w(code::registration_request);
                if (auto* suci = std::get_if<Suci>(&m.identity))
                    w.u8(0).suci(*suci);
                else
                    w.u8(1).raw(std::get<Guti>(m.identity));
                return w.take();
            },
            [](const IdentityRequest&) { return Writer(code::identity_request).take(); },
            [](const AuthRequest& m) { return Writer(code::auth_request).raw(m.rand).raw(m.autn.serialize()).take(); },
            [](const AuthResponse& m) { return Writer(code::auth_response).raw(m.res_star).take(); },
            [](const MacFailureMsg&) { return Writer(code::mac_failure).take(); },
            [](const SyncFailureMsg& m) { return Writer(code::sync_failure).raw(m.auts).take(); },
            [](const AuthFailureMsg& m) { return Writer(code::auth_failure).raw(m.token).take(); },
            [](const AuthResult& m) { return Writer(code::auth_result).u8(m.success ? 1 : 0).take(); },
            [](const ProtectedPdu& m) {
                return Writer(code::protected_pdu)
                    .u8(static_cast<std::uint8_t>(m.stratum))
                    .u32(m.count)
                    .u8(m.bearer)
                    .u8(static_cast<std::uint8_t>(m.direction))
                    .var(m.payload)
                    .raw(m.mac)
                    .take();
            },
            [](const AvRequest& m) {
                Writer w(code::av_request);
                w.u32(m.context);
                if (auto* suci = std::get_if<Suci>(&m.identity))
                    w.u8(0).suci(*suci);
                else
                    w.u8(1).supi(std::get<Supi>(m.identity));
                w.var(m.sn_name);
                if (m.resync)
                    w.u8(1).raw(m.resync->rand).raw(m.resync->auts);
                else
                    w.u8(0);
                return w.take();
            },
            [](const AvResponse& m) {
                return Writer(code::av_response)
                    .u32(m.context)
                    .raw(m.he_av.rand)
                    .raw(m.he_av.autn.serialize())
                    .raw(m.he_av.xres_star)
                    .raw(m.he_av.k_ausf)
                    .supi(m.supi)
                    .take();
            },
            [](const AvReject& m) { return Writer(code::av_reject).u32(m.context).var(to_bytes(m.reason)).take(); },
            [](const ServingAvDelivery& m) {
                return Writer(code::serving_av)
                    .u32(m.context)
                    .raw(m.rand)
                    .raw(m.autn.serialize())
                    .raw(m.hxres_star)
                    .take();
            },
            [](const AuthConfirm& m) { return Writer(code::auth_confirm).u32(m.context).raw(m.res_star).take(); },
            [](const AuthConfirmAck& m) {
                Writer w(code::auth_confirm_ack);
                w.u32(m.context).u8(m.success ? 1 : 0);
                if (m.supi)
                    w.u8(1).supi(*m.supi);
                else
                    w.u8(0);
                if (m.k_seaf)
                    w.u8(1).raw(*m.k_seaf);
                else
                    w.u8(0);
                return w.take();
            },
        },
        msg);
}

ProtocolMessage decode(ByteView bytes)
{
    Reader r(bytes);
    ProtocolMessage out;
    switch (r.u8()) {
    case code::registration_request: {
        RegistrationRequest m;
        if (r.flag())
            m.identity = r.fixed<10>();
        else
            m.identity = r.suci();
        out = std::move(m);
        break;
    }
    case code::identity_request:
        out = IdentityRequest{};
        break;
    case code::auth_request: {
        AuthRequest m;
        m.rand = r.fixed<16>();
        m.autn = Autn::parse(r.fixed<16>());
        out = m;
        break;
    }
    case code::auth_response:
        out = AuthResponse{r.fixed<16>()};
        break;
    case code::mac_failure:
        out = MacFailureMsg{};
        break;
    case code::sync_failure:
        out = SyncFailureMsg{r.fixed<14>()};
        break;
    case code::auth_failure:
        out = AuthFailureMsg{r.fixed<14>()};
        break;
    case code::auth_result:
        out = AuthResult{r.flag()};
        break;
    case code::protected_pdu: {
        ProtectedPdu m;
        auto stratum = r.u8();
        if (stratum > 2)
            throw FormatError("unknown stratum");
        m.stratum = static_cast<Stratum>(stratum);
        m.count = r.u32();
        m.bearer = r.u8();
        if (m.bearer > kMaxBearer)
            throw FormatError("bearer out of range");
        auto dir = r.u8();
        if (dir > 1)
            throw FormatError("direction out of range");
        m.direction = static_cast<Direction>(dir);
        m.payload = r.var();
        m.mac = r.fixed<4>();
        out = std::move(m);
        break;
    }
    case code::av_request: {
        AvRequest m;
        m.context = r.u32();
        if (r.flag())
            m.identity = r.supi();
        else
            m.identity = r.suci();
        m.sn_name = r.var();
        if (r.flag())
            m.resync = ResyncInfo{r.fixed<16>(), r.fixed<14>()};
        out = std::move(m);
        break;
    }
    case code::av_response: {
        std::uint32_t ctx = r.u32();
        HeAV av;
        av.rand = r.fixed<16>();
        av.autn = Autn::parse(r.fixed<16>());
        av.xres_star = r.fixed<16>();
        av.k_ausf = r.fixed<32>();
        out = AvResponse{ctx, av, r.supi()};
        break;
    }
    case code::av_reject: {
        std::uint32_t ctx = r.u32();
        out = AvReject{ctx, to_string(r.var())};
        break;
    }
    case code::serving_av: {
        ServingAvDelivery m;
        m.context = r.u32();
        m.rand = r.fixed<16>();
        m.autn = Autn::parse(r.fixed<16>());
        m.hxres_star = r.fixed<16>();
        out = m;
        break;
    }
    case code::auth_confirm: {
        std::uint32_t ctx = r.u32();
        out = AuthConfirm{ctx, r.fixed<16>()};
        break;
    }
    case code::auth_confirm_ack: {
        AuthConfirmAck m;
        m.context = r.u32();
        m.success = r.flag();
        if (r.flag())
            m.supi = r.supi();
        if (r.flag())
            m.k_seaf = r.fixed<32>();
        out = std::move(m);
        break;
    }
    default:
        throw FormatError("unknown message type code");
    }
    r.finish();
    return out;
}

namespace {
constexpr std::string_view kRegistrationCompleteBody = "registration-complete";
}

Bytes registration_complete_plaintext()
{
    return encode_nas(RegistrationComplete{});
}

Bytes encode_nas(const NasPayload& payload)
{
    return std::visit(overloaded{
                          [](const GutiAssignment& m) { return Writer(code::nas_guti_assignment).var(m.guti).take(); },
                          [](const RegistrationComplete&) {
                              return Writer(code::nas_registration_complete)
                                  .var(to_bytes(kRegistrationCompleteBody))
                                  .take();
                          },
                      },
                      payload);
}

NasPayload decode_nas(ByteView bytes)
{
    Reader r(bytes);
    NasPayload out;
    switch (r.u8()) {
    case code::nas_guti_assignment: {
        Bytes g = r.var();
        if (g.size() != 10)
            throw FormatError("GUTI must be 10 bytes");
        out = GutiAssignment{leading<10>(g)};
        break;
    }
    case code::nas_registration_complete:
        if (to_string(r.var()) != kRegistrationCompleteBody)
            throw FormatError("malformed RegistrationComplete");
        out = RegistrationComplete{};
        break;
    default:
        throw FormatError("unknown NAS payload type");
    }
    r.finish();
    return out;
}

} // namespace pq5g
