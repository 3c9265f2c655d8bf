#include "sgcount/series.hpp"

#include <string>

#include "sgcount/counting.hpp"
#include "sgcount/errors.hpp"

namespace sgcount {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ContractError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw ContractError("series orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
  }
  const std::size_t order = a.order();
  TruncatedSeries c(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

TruncatedSeries series_pow(const TruncatedSeries& a, std::uint64_t e) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1u) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries one_minus_x_pow(std::uint64_t e, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order && k <= e; ++k) {
    s[k] = binomial(e, static_cast<std::int64_t>(k));
    if (k % 2 == 1) s[k] = -s[k];
  }
  return s;
}

TruncatedSeries g1_series(const GrowthSpec& g, std::size_t order) {
  if (const auto top = g.max_level(); top && order + 1 > *top) {
    throw RangeError("growth " + g.name() + " defines " + std::to_string(*top) +
                     " levels; series of order " + std::to_string(order) + " needs " +
                     std::to_string(order + 1));
  }
  TruncatedSeries s(order);
  for (std::size_t l = 0; l <= order; ++l) s[l] = g.eval(static_cast<std::uint32_t>(l + 1));
  return s;
}

TruncatedSeries genfun_series(const GrowthSpec& g, std::uint32_t d, std::uint32_t mu, CountKind kind) {
  if (d == 0) throw ContractError("dimension must be >= 1");
  TruncatedSeries gd = series_pow(g1_series(g, mu), d);
  if (kind == CountKind::Nested) gd = series_mul(gd, one_minus_x_pow(d - 1, mu));
  return gd;
}

BigInt count_via_genfun(const GrowthSpec& g, std::uint32_t d, std::uint32_t mu, CountKind kind) {
  return genfun_series(g, d, mu, kind)[mu];
}

}  // namespace sgcount
