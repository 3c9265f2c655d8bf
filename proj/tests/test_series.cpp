#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgcount/counting.hpp"
#include "sgcount/errors.hpp"
#include "sgcount/series.hpp"

using namespace sgcount;

namespace {

TruncatedSeries S(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c) v.emplace_back(x);
  return TruncatedSeries(std::move(v));
}

std::vector<GrowthSpec> families() {
  return {GrowthSpec::power_minus_one(2), GrowthSpec::power_minus_one(3), GrowthSpec::power(2),
          GrowthSpec::power(3),           GrowthSpec::power_plus_one(2),  GrowthSpec::power_plus_one(3),
          GrowthSpec::linear(),           GrowthSpec::odd(),              GrowthSpec::clenshaw_curtis(),
          GrowthSpec::custom({2, 2, 3, 7, 7, 9, 12, 20, 21})};
}

}  // namespace

TEST_CASE("g1_series examples") {
  CHECK(g1_series(GrowthSpec::linear(), 3) == S({1, 2, 3, 4}));
  CHECK(g1_series(GrowthSpec::power(3), 2) == S({3, 9, 27}));
  CHECK(g1_series(GrowthSpec::clenshaw_curtis(), 3) == S({1, 3, 5, 9}));
  CHECK_THROWS_AS((void)g1_series(GrowthSpec::custom({1, 2}), 2), RangeError);
}

TEST_CASE("series_mul examples") {
  CHECK(series_mul(S({1, 1, 1}), S({1, 1, 1})) == S({1, 2, 3}));
  CHECK(series_mul(S({1, 0, 0}), S({4, -5, 6})) == S({4, -5, 6}));
  CHECK(series_mul(S({1, -1, 0}), S({1, 1, 1})) == S({1, 0, 0}));
  CHECK_THROWS_AS((void)series_mul(S({1, 1}), S({1, 1, 1})), ContractError);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<BigInt>{}), ContractError);
}

TEST_CASE("series_pow examples") {
  CHECK(series_pow(S({1, 1}), 0) == S({1, 0}));
  CHECK(series_pow(S({1, 1, 1, 1}), 2) == S({1, 2, 3, 4}));
  CHECK(series_pow(S({2, 0, 0}), 3) == S({8, 0, 0}));
}

TEST_CASE("one_minus_x_pow examples") {
  CHECK(one_minus_x_pow(2, 3) == S({1, -2, 1, 0}));
  CHECK(one_minus_x_pow(0, 2) == S({1, 0, 0}));
  CHECK(one_minus_x_pow(3, 2) == S({1, -3, 3}));
}

TEST_CASE("series_mul agrees with direct convolution on random input") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long long> coeff(-1'000'000'000LL, 1'000'000'000LL);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t order = trial % 13;
    std::vector<oracle::Int> a(order + 1), b(order + 1);
    std::vector<BigInt> sa, sb;
    for (std::size_t k = 0; k <= order; ++k) {
      a[k] = oracle::Int(coeff(rng)) * coeff(rng);
      b[k] = coeff(rng);
      sa.push_back(a[k]);
      sb.push_back(b[k]);
    }
    const auto expected = oracle::convolve(a, b);
    const auto got = series_mul(TruncatedSeries(sa), TruncatedSeries(sb));
    for (std::size_t k = 0; k <= order; ++k) REQUIRE(got[k] == expected[k]);
  }
}

TEST_CASE("series_pow matches repeated multiplication") {
  const auto base = S({3, -1, 4, 1, -5, 9});
  TruncatedSeries acc = TruncatedSeries::one(base.order());
  for (unsigned e = 0; e <= 9; ++e) {
    CHECK(series_pow(base, e) == acc);
    acc = series_mul(acc, base);
  }
}

TEST_CASE("count_via_genfun examples") {
  CHECK(count_via_genfun(GrowthSpec::power(3), 2, 1, CountKind::Nested) == 45);
  for (std::uint32_t d = 1; d <= 6; ++d) CHECK(count_via_genfun(GrowthSpec::linear(), d, 0, CountKind::Nested) == 1);
  CHECK(count_via_genfun(GrowthSpec::power(3), 2, 1, CountKind::WithDuplicates) == 54);
}

TEST_CASE("the nested and with-duplicates base series coincide") {
  for (const auto& g : families()) {
    CAPTURE(g.name());
    const auto g1 = g1_series(g, 8);
    CHECK(genfun_series(g, 1, 8, CountKind::Nested) == g1);
    CHECK(genfun_series(g, 1, 8, CountKind::WithDuplicates) == g1);
  }
}

TEST_CASE("generating functions agree with the recursion and the multi-index sum") {
  for (const auto& g : families()) {
    CAPTURE(g.name());
    std::vector<oracle::Int> f{0};
    for (std::uint32_t k = 1; k <= 9; ++k) f.push_back(g.eval(k));
    for (std::uint32_t d = 1; d <= 5; ++d) {
      const auto nested = genfun_series(g, d, 8, CountKind::Nested);
      const auto dup = genfun_series(g, d, 8, CountKind::WithDuplicates);
      for (std::uint32_t mu = 0; mu <= 8; ++mu) {
        CAPTURE(d);
        CAPTURE(mu);
        CHECK(count_via_genfun(g, d, mu, CountKind::Nested) == count_nested_recursion({d, mu, g}));
        CHECK(nested[mu] == count_nested_recursion({d, mu, g}));
        CHECK(dup[mu] == oracle::dup_sum(d, mu, f, true));
      }
    }
  }
}
