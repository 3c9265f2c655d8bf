#pragma once

#include <cstdint>

#include "sgcount/bigint.hpp"
#include "sgcount/growth.hpp"

namespace sgcount {

/// One (dimension, level, growth) cell.
struct CountQuery {
  std::uint32_t d = 1;
  std::uint32_t mu = 0;
  GrowthSpec growth = GrowthSpec::linear();

  /// Throws ContractError unless d >= 1.
  void validate() const;
};

/// Binomial coefficient; 0 when k < 0 or k > n.
[[nodiscard]] BigInt binomial(std::uint64_t n, std::int64_t k);

// --- N(d, mu, f): nodes of the nested grid -----------------------------------

/// Dimension-wise recursion
///   N(d+1, mu) = f(1) N(d, mu) + sum_{l=1}^{mu} (f(l+1) - f(l)) N(d, mu-l)
/// seeded with N(1, mu) = f(mu+1). Valid for every growth function; this is
/// the reference path for ClenshawCurtis and Custom.
[[nodiscard]] BigInt count_nested_recursion(const CountQuery& q);

[[nodiscard]] bool has_nested_closed(GrowthFamily family) noexcept;
/// Closed formula of the growth family. UnsupportedError for ClenshawCurtis
/// and Custom.
[[nodiscard]] BigInt count_nested_closed(const CountQuery& q);

[[nodiscard]] bool has_nested_closed_alt(GrowthFamily family) noexcept;
/// The equivalent second closed form for Power (binomial-product form) and
/// PowerPlusOne (hypercube skeleton sum). UnsupportedError otherwise.
[[nodiscard]] BigInt count_nested_closed_alt(const CountQuery& q);

/// Skeleton sum for f(k) = n^k + 1: boundary faces of every dimension j each
/// carry an interior grid of the n^k - 1 family.
[[nodiscard]] BigInt count_skeleton_sum(std::uint32_t d, std::uint32_t mu, std::uint32_t n);

/// Ullrich's count for f(k) = 2^{k-1}:
///   sum_j binom(d-1, j) binom(mu, j) 2^{mu-j}.
[[nodiscard]] BigInt count_ullrich(std::uint32_t d, std::uint32_t mu);

/// Bungartz-Griebel boundary grid count, f(k) = 2^k + 1.
[[nodiscard]] BigInt count_bungartz(std::uint32_t d, std::uint32_t mu);

// --- Ndup(d, mu, f): top-shell blocks counted with multiplicity --------------

[[nodiscard]] bool has_dup_closed(GrowthFamily family) noexcept;
[[nodiscard]] BigInt count_dup_closed(const CountQuery& q);

/// Brute force: sum over all compositions of d+mu into d parts of prod f(i_k).
[[nodiscard]] BigInt count_dup_sum(const CountQuery& q);

/// Ndup(d+1, mu) = sum_{l=1}^{mu+1} f(l) Ndup(d, mu+1-l).
[[nodiscard]] BigInt count_dup_recursion(const CountQuery& q);

// --- Nsigma(d, mu, f): all nodes generated before deduplication --------------

/// sum_{k=max(0, mu+1-d)}^{mu} Ndup(d, k), using count_dup_closed when the
/// family has one and count_dup_sum otherwise.
[[nodiscard]] BigInt count_sigma(const CountQuery& q);

/// Closed Nsigma for f(k) = k. Throws InternalError if the division by 2d
/// is not exact.
[[nodiscard]] BigInt count_sigma_linear_closed(std::uint32_t d, std::uint32_t mu);

// --- Combination technique ---------------------------------------------------

/// (-1)^{d+mu-s} binom(d-1, d+mu-s) for a block with |i| = s.
/// ContractError unless max(d, mu+1) <= s <= d+mu.
[[nodiscard]] BigInt combination_coefficient(std::uint32_t d, std::uint32_t mu, std::uint32_t s);

/// Checks that q(mu) = (N(d,mu) - 1) / 2^mu for ClenshawCurtis growth is a
/// polynomial of degree d-1 with leading coefficient 1/(2^{d-1} (d-1)!)
/// over mu = d..mu_max: the d-th forward difference vanishes and the
/// (d-1)-th is the constant 1/2^{d-1}. Requires mu_max >= 2d.
[[nodiscard]] bool muller_gronbach_poly_check(std::uint32_t d, std::uint32_t mu_max);

}  // namespace sgcount
