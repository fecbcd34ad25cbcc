#pragma once

// Key-search cost model. Classical exhaustive search over b bits costs 2^b
// oracle queries; the quantum figure is the expected Grover query count
// ceil((pi/4) * 2^(b/2)). The quantum figure is reported, never executed.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pq5g {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMinCostBits = 1;
inline constexpr int kMaxCostBits = 512;

/// Throws DomainError outside 1..512.
BigInt grover_cost(int bits);
BigInt classical_cost(int bits);

std::size_t bit_length(const BigInt& v);

/// log2 of a positive value, to double precision.
double log2_of(const BigInt& v);

} // namespace pq5g
