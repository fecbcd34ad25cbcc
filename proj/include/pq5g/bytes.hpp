#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pq5g {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

template <std::size_t N>
using Block = std::array<std::uint8_t, N>;

inline Bytes to_bytes(ByteView v) { return Bytes(v.begin(), v.end()); }

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline std::string to_string(ByteView v) { return std::string(v.begin(), v.end()); }

/// Leading N bytes of `v`. `v` must hold at least N bytes.
template <std::size_t N>
Block<N> leading(ByteView v)
{
    Block<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out[i] = v[i];
    return out;
}

template <std::size_t N>
Block<N> xor_blocks(const Block<N>& a, const Block<N>& b)
{
    Block<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out[i] = a[i] ^ b[i];
    return out;
}

/// Big-endian encoding of the low `width` bytes of `value`.
inline Bytes be_bytes(std::uint64_t value, std::size_t width)
{
    Bytes out(width);
    for (std::size_t i = 0; i < width; ++i)
        out[width - 1 - i] = static_cast<std::uint8_t>(value >> (8 * i));
    return out;
}

inline std::uint64_t be_value(ByteView v)
{
    std::uint64_t out = 0;
    for (auto b : v)
        out = (out << 8) | b;
    return out;
}

inline void append(Bytes& dst, ByteView src) { dst.insert(dst.end(), src.begin(), src.end()); }

inline Bytes concat(std::initializer_list<ByteView> parts)
{
    Bytes out;
    for (auto p : parts)
        append(out, p);
    return out;
}

std::string to_hex(ByteView v);

/// Throws pq5g::FormatError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

/// True when `needle` occurs as a contiguous run inside `haystack`.
bool contains(ByteView haystack, ByteView needle);

} // namespace pq5g
