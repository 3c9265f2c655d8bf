#include "sgcount/bigint.hpp"

namespace sgcount {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace sgcount
