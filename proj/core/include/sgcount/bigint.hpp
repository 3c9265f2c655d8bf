#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgcount {

/// Exact signed integer used for every count and series coefficient.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Plain decimal rendering, never scientific notation.
std::string to_decimal(const BigInt& value);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

}  // namespace sgcount
