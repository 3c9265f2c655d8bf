#include "sgcount/counting.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sgcount/errors.hpp"
#include "sgcount/grid.hpp"

namespace sgcount {
namespace {

BigInt pow_u(std::uint64_t base, std::uint64_t e) { return ipow(BigInt(base), e); }

// binom(a, b) for a that may be written as a signed expression; callers
// guarantee a >= 0 whenever b >= 0.
BigInt binom_s(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0) return 0;
  return binomial(static_cast<std::uint64_t>(a), b);
}

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void require_levels(const GrowthSpec& g, std::uint32_t levels) {
  if (const auto top = g.max_level(); top && levels > *top) {
    throw RangeError("growth " + g.name() + " defines " + std::to_string(*top) + " levels, " +
                     std::to_string(levels) + " needed");
  }
}

[[noreturn]] void unsupported(std::string_view what, const GrowthSpec& g, std::string_view hint) {
  throw UnsupportedError(std::string(what) + " has no closed form for growth " + g.name() +
                         "; use " + std::string(hint));
}

// N(d, 0..mu) via the dimension recursion.
std::vector<BigInt> nested_recursion_table(const GrowthSpec& g, std::uint32_t d, std::uint32_t mu) {
  require_levels(g, mu + 1);
  const std::vector<BigInt> f = g.values(mu + 1);  // f[k-1] = f(k)
  std::vector<BigInt> increments(mu + 1);          // increments[l] = f(l+1) - f(l)
  for (std::uint32_t l = 1; l <= mu; ++l) increments[l] = f[l] - f[l - 1];

  std::vector<BigInt> prev(f.begin(), f.end());
  std::vector<BigInt> next(mu + 1);
  for (std::uint32_t dim = 1; dim < d; ++dim) {
    for (std::uint32_t m = 0; m <= mu; ++m) {
      BigInt acc = f[0] * prev[m];
      for (std::uint32_t l = 1; l <= m; ++l) acc += increments[l] * prev[m - l];
      next[m] = std::move(acc);
    }
    std::swap(prev, next);
  }
  return prev;
}

std::vector<BigInt> dup_recursion_table(const GrowthSpec& g, std::uint32_t d, std::uint32_t mu) {
  require_levels(g, mu + 1);
  const std::vector<BigInt> f = g.values(mu + 1);
  std::vector<BigInt> prev(f.begin(), f.end());
  std::vector<BigInt> next(mu + 1);
  for (std::uint32_t dim = 1; dim < d; ++dim) {
    for (std::uint32_t m = 0; m <= mu; ++m) {
      BigInt acc = 0;
      for (std::uint32_t l = 1; l <= m + 1; ++l) acc += f[l - 1] * prev[m + 1 - l];
      next[m] = std::move(acc);
    }
    std::swap(prev, next);
  }
  return prev;
}

BigInt nested_power_minus_one(std::uint64_t d, std::uint64_t mu, std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= mu; ++k) sum += binom_s(i64(d + k - 1), i64(k)) * pow_u(n, k);
  return pow_u(n - 1, d) * sum;
}

BigInt nested_power(std::uint64_t d, std::uint64_t mu, std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= std::min(d - 1, mu); ++k) {
    BigInt term = binom_s(i64(d - 1), i64(k)) * binom_s(i64(d + mu - k - 1), i64(mu - k)) *
                  pow_u(n, mu - k);
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return pow_u(n, d) * sum;
}

BigInt nested_power_alt(std::uint64_t d, std::uint64_t mu, std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = d - 1 > mu ? d - 1 - mu : 0; k < d; ++k) {
    sum += binom_s(i64(d - 1), i64(k)) * binom_s(i64(mu), i64(d - 1) - i64(k)) *
           pow_u(n, mu + k + 1) * pow_u(n - 1, d - k - 1);
  }
  return sum;
}

BigInt nested_power_plus_one(std::uint64_t d, std::uint64_t mu, std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= std::min(d, mu); ++k) {
    BigInt inner = 0;
    for (std::uint64_t l = 0; l <= mu - k; ++l) inner += binom_s(i64(d + l - 1), i64(l)) * pow_u(n, l);
    BigInt term = binom_s(i64(d), i64(k)) * pow_u(2 * n, k) * pow_u(n + 1, d - k) * inner;
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

BigInt nested_odd(std::uint64_t d, std::uint64_t mu) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= std::min(d, mu); ++k) {
    sum += binom_s(i64(mu), i64(k)) * binom_s(i64(mu + d - k), i64(mu));
  }
  return sum;
}

BigInt dup_power_minus_one(std::uint64_t d, std::uint64_t mu, std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= mu; ++k) {
    sum += binom_s(i64(d + k - 1), i64(k)) * binom_s(i64(d + mu - k - 1), i64(mu - k)) * pow_u(n, k);
  }
  return pow_u(n - 1, d) * sum;
}

BigInt dup_power_plus_one(std::uint64_t d, std::uint64_t mu, std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t l = 0; l <= std::min(d, mu); ++l) {
    const BigInt outer = binom_s(i64(d), i64(l)) * pow_u(2 * n, l) * pow_u(n + 1, d - l);
    BigInt inner = 0;
    for (std::uint64_t k = 0; k <= mu - l; ++k) {
      inner += binom_s(i64(d + k - 1), i64(k)) * binom_s(i64(d + mu - l - k - 1), i64(mu - l - k)) *
               pow_u(n, k);
    }
    BigInt term = outer * inner;
    if (l % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

void CountQuery::validate() const {
  if (d == 0) throw ContractError("dimension d must be >= 1");
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  kk = std::min(kk, n - kk);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

BigInt count_nested_recursion(const CountQuery& q) {
  q.validate();
  return nested_recursion_table(q.growth, q.d, q.mu)[q.mu];
}

bool has_nested_closed(GrowthFamily family) noexcept {
  return family != GrowthFamily::ClenshawCurtis && family != GrowthFamily::Custom;
}

BigInt count_nested_closed(const CountQuery& q) {
  q.validate();
  const std::uint64_t d = q.d;
  const std::uint64_t mu = q.mu;
  const std::uint64_t n = q.growth.base();
  switch (q.growth.family()) {
    case GrowthFamily::PowerMinusOne: return nested_power_minus_one(d, mu, n);
    case GrowthFamily::Power: return nested_power(d, mu, n);
    case GrowthFamily::PowerPlusOne: return nested_power_plus_one(d, mu, n);
    case GrowthFamily::Linear: return binomial(d + mu, i64(mu));
    case GrowthFamily::Odd: return nested_odd(d, mu);
    case GrowthFamily::ClenshawCurtis:
    case GrowthFamily::Custom: break;
  }
  unsupported("N(d,mu)", q.growth, "the recursion or generating-function method");
}

bool has_nested_closed_alt(GrowthFamily family) noexcept {
  return family == GrowthFamily::Power || family == GrowthFamily::PowerPlusOne;
}

BigInt count_nested_closed_alt(const CountQuery& q) {
  q.validate();
  switch (q.growth.family()) {
    case GrowthFamily::Power: return nested_power_alt(q.d, q.mu, q.growth.base());
    case GrowthFamily::PowerPlusOne: return count_skeleton_sum(q.d, q.mu, q.growth.base());
    default: break;
  }
  throw UnsupportedError("no alternative closed form for growth " + q.growth.name());
}

BigInt count_skeleton_sum(std::uint32_t d, std::uint32_t mu, std::uint32_t n) {
  if (d == 0) throw ContractError("dimension d must be >= 1");
  if (n < 2) throw ContractError("growth base must be >= 2");
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= d; ++k) {
    // Interior points of a k-dimensional face; the 0-dimensional faces
    // (vertices) carry exactly one point.
    BigInt interior = 0;
    if (k == 0) {
      interior = 1;
    } else {
      for (std::uint64_t l = 0; l <= mu; ++l) interior += binom_s(i64(k + l - 1), i64(k - 1)) * pow_u(n, l);
    }
    sum += binom_s(d, i64(k)) * pow_u(2, d - k) * pow_u(n - 1, k) * interior;
  }
  return sum;
}

BigInt count_ullrich(std::uint32_t d, std::uint32_t mu) {
  if (d == 0) throw ContractError("dimension d must be >= 1");
  BigInt sum = 0;
  for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(d - 1, mu); ++j) {
    sum += binom_s(d - 1, i64(j)) * binom_s(mu, i64(j)) * pow_u(2, mu - j);
  }
  return sum;
}

BigInt count_bungartz(std::uint32_t d, std::uint32_t mu) { return count_skeleton_sum(d, mu, 2); }

bool has_dup_closed(GrowthFamily family) noexcept {
  return family == GrowthFamily::PowerMinusOne || family == GrowthFamily::Power ||
         family == GrowthFamily::PowerPlusOne || family == GrowthFamily::Linear;
}

BigInt count_dup_closed(const CountQuery& q) {
  q.validate();
  const std::uint64_t d = q.d;
  const std::uint64_t mu = q.mu;
  const std::uint64_t n = q.growth.base();
  switch (q.growth.family()) {
    case GrowthFamily::PowerMinusOne: return dup_power_minus_one(d, mu, n);
    case GrowthFamily::Power: return pow_u(n, d + mu) * binomial(d + mu - 1, i64(mu));
    case GrowthFamily::PowerPlusOne: return dup_power_plus_one(d, mu, n);
    case GrowthFamily::Linear: return binomial(2 * d + mu - 1, i64(mu));
    default: break;
  }
  unsupported("Ndup(d,mu)", q.growth, "the multi-index sum");
}

BigInt count_dup_sum(const CountQuery& q) {
  q.validate();
  require_levels(q.growth, q.mu + 1);
  const std::vector<BigInt> f = q.growth.values(q.mu + 1);
  BigInt total = 0;
  for (const MultiIndex& i : compositions(q.d, std::uint64_t{q.d} + q.mu)) {
    BigInt prod = 1;
    for (std::uint32_t part : i.parts()) prod *= f[part - 1];
    total += prod;
  }
  return total;
}

BigInt count_dup_recursion(const CountQuery& q) {
  q.validate();
  return dup_recursion_table(q.growth, q.d, q.mu)[q.mu];
}

BigInt count_sigma(const CountQuery& q) {
  q.validate();
  const std::uint32_t lo = q.mu + 1 > q.d ? q.mu + 1 - q.d : 0;
  const bool closed = has_dup_closed(q.growth.family());
  BigInt total = 0;
  for (std::uint32_t k = lo; k <= q.mu; ++k) {
    const CountQuery shell{q.d, k, q.growth};
    total += closed ? count_dup_closed(shell) : count_dup_sum(shell);
  }
  return total;
}

BigInt count_sigma_linear_closed(std::uint32_t d, std::uint32_t mu) {
  if (d == 0) throw ContractError("dimension d must be >= 1");
  const std::uint64_t m = mu + 1 > d ? std::uint64_t{mu} + 1 - d : 0;
  const std::uint64_t dd = d;
  const BigInt numerator = BigInt(mu + 1) * binomial(2 * dd + mu, i64(mu) + 1) -
                           BigInt(m) * binomial(2 * dd + m - 1, i64(m));
  const BigInt denominator = 2 * dd;
  if (numerator % denominator != 0) {
    throw InternalError("linear Nsigma numerator " + to_decimal(numerator) + " not divisible by " +
                        to_decimal(denominator));
  }
  return numerator / denominator;
}

BigInt combination_coefficient(std::uint32_t d, std::uint32_t mu, std::uint32_t s) {
  const std::uint64_t lo = std::max<std::uint64_t>(d, std::uint64_t{mu} + 1);
  const std::uint64_t hi = std::uint64_t{d} + mu;
  if (d == 0 || s < lo || s > hi) {
    throw ContractError("block level " + std::to_string(s) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }
  const std::uint64_t gap = hi - s;
  BigInt c = binomial(d - 1, i64(gap));
  return gap % 2 == 0 ? c : BigInt(-c);
}

bool muller_gronbach_poly_check(std::uint32_t d, std::uint32_t mu_max) {
  if (d == 0) throw ContractError("dimension d must be >= 1");
  if (mu_max < 2 * d) {
    throw ContractError("mu_max must be >= 2d to observe a degree d-1 polynomial from level d on");
  }
  const std::vector<BigInt> n = nested_recursion_table(GrowthSpec::clenshaw_curtis(), d, mu_max);

  std::vector<BigRational> diff;
  for (std::uint32_t mu = d; mu <= mu_max; ++mu) {
    diff.emplace_back(BigInt(n[mu] - 1), ipow(BigInt(2), mu));
  }
  for (std::uint32_t order = 0; order + 1 < d; ++order) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  // diff now holds the (d-1)-th differences.
  const BigRational expected(BigInt(1), ipow(BigInt(2), d - 1));
  if (!std::all_of(diff.begin(), diff.end(), [&](const BigRational& v) { return v == expected; })) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
    if (diff[i + 1] - diff[i] != 0) return false;
  }
  return true;
}

}  // namespace sgcount
