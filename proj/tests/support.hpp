#pragma once

#include "oracle/sha256_oracle.hpp"
#include "pq5g/bytes.hpp"
#include "pq5g/crypto.hpp"

#include <random>

namespace testutil {

class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    pq5g::Bytes bytes(std::size_t n)
    {
        pq5g::Bytes out(n);
        for (auto& b : out)
            b = static_cast<std::uint8_t>(gen_());
        return out;
    }

    template <std::size_t N>
    pq5g::Block<N> block()
    {
        pq5g::Block<N> out{};
        for (auto& b : out)
            b = static_cast<std::uint8_t>(gen_());
        return out;
    }

    pq5g::SecretKey key(int bits) { return pq5g::SecretKey(bytes(static_cast<std::size_t>(bits / 8))); }

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
    }

    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 gen_;
};

template <typename Range>
oracle::Bytes ob(const Range& r)
{
    return oracle::Bytes(std::begin(r), std::end(r));
}

inline oracle::Bytes ob(const pq5g::SecretKey& k) { return ob(k.bytes()); }

} // namespace testutil
