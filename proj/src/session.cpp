#include "pq5g/session.hpp"

#include "pq5g/error.hpp"

namespace pq5g {

SessionChannel::SessionChannel(Stratum stratum, KeyPair keys)
    : stratum_(stratum)
    , keys_(std::move(keys))
{
}

namespace {

Bytes apply_keystream(ByteView key, const ProtectedPdu& header, ByteView data)
{
    Bytes out = keystream(key, header.count, header.bearer, header.direction, data.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] ^= data[i];
    return out;
}

} // namespace

ProtectedPdu protect_pdu(SessionChannel& channel, ByteView plaintext, std::uint8_t bearer, Direction direction)
{
    auto& next = channel.tx_[SessionChannel::index(direction)];
    if (next >= kCountLimit)
        throw ChannelExpired("COUNT exhausted; re-authentication required");
    if (bearer > kMaxBearer)
        throw DomainError("bearer identifier must fit in 5 bits");

    ProtectedPdu pdu;
    pdu.stratum = channel.stratum();
    pdu.count = static_cast<std::uint32_t>(next);
    pdu.bearer = bearer;
    pdu.direction = direction;

    const auto& keys = channel.keys();
    if (channel.stratum() == Stratum::Up) {
        pdu.mac = mac32(keys.integrity, pdu.count, bearer, direction, plaintext);
        pdu.payload = apply_keystream(keys.encryption, pdu, plaintext);
    } else {
        pdu.payload = apply_keystream(keys.encryption, pdu, plaintext);
        pdu.mac = mac32(keys.integrity, pdu.count, bearer, direction, pdu.payload);
    }
    ++next;
    return pdu;
}

Bytes unprotect_pdu(SessionChannel& channel, const ProtectedPdu& pdu)
{
    if (pdu.stratum != channel.stratum())
        throw IntegrityError("PDU stratum does not match channel");
    auto& last = channel.rx_[SessionChannel::index(pdu.direction)];
    if (last && pdu.count <= *last)
        throw ReplayError("stale COUNT " + std::to_string(pdu.count));

    const auto& keys = channel.keys();
    Bytes plaintext;
    if (channel.stratum() == Stratum::Up) {
        plaintext = apply_keystream(keys.encryption, pdu, pdu.payload);
        if (mac32(keys.integrity, pdu.count, pdu.bearer, pdu.direction, plaintext) != pdu.mac)
            throw IntegrityError("user-plane MAC mismatch");
    } else {
        if (mac32(keys.integrity, pdu.count, pdu.bearer, pdu.direction, pdu.payload) != pdu.mac)
            throw IntegrityError(std::string(to_string(channel.stratum())) + " MAC mismatch");
        plaintext = apply_keystream(keys.encryption, pdu, pdu.payload);
    }
    last = pdu.count;
    return plaintext;
}

} // namespace pq5g
