#include "pq5g/cost.hpp"

#include "pq5g/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace pq5g {

namespace mp = boost::multiprecision;

namespace {

// 2^256 needs about 78 significant digits; leave ample headroom.
using Real = mp::number<mp::cpp_bin_float<200>>;

void check_range(int bits)
{
    if (bits < kMinCostBits || bits > kMaxCostBits)
        throw DomainError("key length must be in 1..512 bits, got " + std::to_string(bits));
}

} // namespace

BigInt grover_cost(int bits)
{
    check_range(bits);
    Real half_power = mp::ldexp(Real(1), bits / 2);
    if (bits % 2 != 0)
        half_power *= mp::sqrt(Real(2));
    const Real cost = mp::ceil(boost::math::constants::pi<Real>() / 4 * half_power);
    return cost.convert_to<BigInt>();
}

BigInt classical_cost(int bits)
{
    check_range(bits);
    return BigInt(1) << bits;
}

std::size_t bit_length(const BigInt& v)
{
    return v <= 0 ? 0 : mp::msb(v) + 1;
}

double log2_of(const BigInt& v)
{
    if (v <= 0)
        throw DomainError("log2 of a non-positive value");
    const std::size_t len = bit_length(v);
    // Keep 60 significant bits for the mantissa.
    const std::size_t shift = len > 60 ? len - 60 : 0;
    const BigInt top = v >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

} // namespace pq5g
