#include "pq5g/auth_vectors.hpp"

#include "pq5g/error.hpp"

namespace pq5g {

Block<16> Autn::serialize() const
{
    Block<16> out{};
    std::copy(sqn_xor_ak.begin(), sqn_xor_ak.end(), out.begin());
    std::copy(amf.begin(), amf.end(), out.begin() + 6);
    std::copy(mac.begin(), mac.end(), out.begin() + 8);
    return out;
}

Autn Autn::parse(ByteView bytes)
{
    if (bytes.size() != 16)
        throw FormatError("AUTN must be 16 bytes");
    Autn a;
    a.sqn_xor_ak = leading<6>(bytes);
    a.amf = leading<2>(bytes.subspan(6));
    a.mac = leading<8>(bytes.subspan(8));
    return a;
}

namespace {

Block<6> sqn6(std::uint64_t sqn)
{
    return leading<6>(be_bytes(sqn, 6));
}

Bytes ck_ik(const Block<16>& ck, const Block<16>& ik)
{
    return concat({ck, ik});
}

} // namespace

BaseAV generate_base_av(SubscriberRecord& subscriber, const Rand& rand)
{
    const std::uint64_t sqn = subscriber.sqn + subscriber.sqn_step;
    if (sqn > kSqnMax)
        throw DomainError("SQN space exhausted");

    auto out = f2345(subscriber.suite, subscriber.k, rand);
    BaseAV av;
    av.rand = rand;
    av.xres = out.xres;
    av.ck = out.ck;
    av.ik = out.ik;
    av.autn.sqn_xor_ak = xor_blocks(sqn6(sqn), out.ak);
    av.autn.amf = subscriber.amf;
    av.autn.mac = f1(subscriber.suite, subscriber.k, rand, sqn, subscriber.amf);
    subscriber.sqn = sqn;
    return av;
}

Block<16> derive_xres_star(const Block<16>& ck, const Block<16>& ik, const Rand& rand, const Block<16>& xres,
                           ByteView sn_name)
{
    KdfLabel label{fc::xres_star, {to_bytes(sn_name), to_bytes(rand), to_bytes(xres)}};
    return leading<16>(kdf(ck_ik(ck, ik), label));
}

Block<32> derive_k_ausf(const Block<16>& ck, const Block<16>& ik, const Block<6>& sqn_xor_ak, ByteView sn_name)
{
    KdfLabel label{fc::k_ausf, {to_bytes(sn_name), to_bytes(sqn_xor_ak)}};
    return kdf(ck_ik(ck, ik), label);
}

Block<32> derive_k_seaf(const Block<32>& k_ausf, ByteView sn_name)
{
    return kdf(k_ausf, {fc::k_seaf, {to_bytes(sn_name)}});
}

Block<16> hash_res_star(const Rand& rand, const Block<16>& res_star)
{
    return leading<16>(sha256(concat({rand, res_star})));
}

HeAV build_he_av(const BaseAV& base, ByteView sn_name)
{
    return {base.rand, base.autn, derive_xres_star(base.ck, base.ik, base.rand, base.xres, sn_name),
            derive_k_ausf(base.ck, base.ik, base.autn.sqn_xor_ak, sn_name)};
}

ServingAV reduce_to_serving_av(const HeAV& he_av, ByteView sn_name)
{
    return {he_av.rand, he_av.autn, hash_res_star(he_av.rand, he_av.xres_star), derive_k_seaf(he_av.k_ausf, sn_name)};
}

UsimChallengeResult usim_process_challenge(UsimState& usim, const Rand& rand, const Autn& autn)
{
    auto out = f2345(usim.suite, usim.k, rand);
    const std::uint64_t sqn = be_value(xor_blocks(autn.sqn_xor_ak, out.ak));

    if (f1(usim.suite, usim.k, rand, sqn, autn.amf) != autn.mac)
        return challenge::MacFailure{};

    const bool fresh = sqn > usim.highest_sqn && sqn - usim.highest_sqn <= usim.max_sqn_jump;
    if (!fresh) {
        challenge::SyncFailure sync;
        auto concealed = xor_blocks(sqn6(usim.highest_sqn), f5_star(usim.suite, usim.k, rand));
        auto mac_s = f1_star(usim.suite, usim.k, rand, usim.highest_sqn, kResyncAmf);
        std::copy(concealed.begin(), concealed.end(), sync.auts.begin());
        std::copy(mac_s.begin(), mac_s.end(), sync.auts.begin() + 6);
        return sync;
    }

    usim.highest_sqn = sqn;
    return challenge::Success{out.xres, out.ck, out.ik};
}

std::optional<std::uint64_t> recover_sqn_from_auts(AlgorithmSuite suite, const SecretKey& k, const Rand& rand,
                                                   const Block<14>& auts)
{
    auto concealed = leading<6>(auts);
    auto mac_s = leading<8>(ByteView(auts).subspan(6));
    const std::uint64_t sqn_ms = be_value(xor_blocks(concealed, f5_star(suite, k, rand)));
    if (f1_star(suite, k, rand, sqn_ms, kResyncAmf) != mac_s)
        return std::nullopt;
    return sqn_ms;
}

MeResponse me_compute_response(const Block<16>& ck, const Block<16>& ik, const Block<16>& res, const Rand& rand,
                               const Autn& autn, ByteView sn_name)
{
    MeResponse r;
    r.res_star = derive_xres_star(ck, ik, rand, res, sn_name);
    r.k_ausf = derive_k_ausf(ck, ik, autn.sqn_xor_ak, sn_name);
    r.k_seaf = derive_k_seaf(r.k_ausf, sn_name);
    return r;
}

} // namespace pq5g
