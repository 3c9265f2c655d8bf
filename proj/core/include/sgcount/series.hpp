#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgcount/bigint.hpp"
#include "sgcount/growth.hpp"

namespace sgcount {

/// Formal power series c_0 + c_1 x + ... + c_T x^T with exact coefficients.
///
/// The truncation order T is fixed at construction. Binary operations
/// require equal orders and throw ContractError otherwise.
class TruncatedSeries {
 public:
  /// The zero series of order `order`.
  explicit TruncatedSeries(std::size_t order);
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit TruncatedSeries(std::vector<BigInt> coeffs);

  /// 1 + 0x + ... + 0x^order.
  static TruncatedSeries one(std::size_t order);

  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const BigInt& operator[](std::size_t k) const { return coeffs_.at(k); }
  [[nodiscard]] BigInt& operator[](std::size_t k) { return coeffs_.at(k); }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Cauchy product truncated at the common order.
[[nodiscard]] TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
[[nodiscard]] inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

/// a^e by binary exponentiation; a^0 is the identity series of a's order.
[[nodiscard]] TruncatedSeries series_pow(const TruncatedSeries& a, std::uint64_t e);

/// (1 - x)^e truncated at order T.
[[nodiscard]] TruncatedSeries one_minus_x_pow(std::uint64_t e, std::size_t order);

/// sum_l f(l+1) x^l up to x^order. This is both G_1 and the with-duplicates
/// base series; they coincide for every growth function.
[[nodiscard]] TruncatedSeries g1_series(const GrowthSpec& g, std::size_t order);

enum class CountKind { Nested, WithDuplicates };

/// Coefficient of x^mu in G_1^d (1-x)^{d-1} (nested) or G_1^d (with
/// duplicates), computed with truncation order exactly mu.
[[nodiscard]] BigInt count_via_genfun(const GrowthSpec& g, std::uint32_t d, std::uint32_t mu,
                                      CountKind kind);

/// All coefficients 0..mu of the same generating function in one pass.
[[nodiscard]] TruncatedSeries genfun_series(const GrowthSpec& g, std::uint32_t d, std::uint32_t mu,
                                            CountKind kind);

}  // namespace sgcount
