#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgcount/bigint.hpp"
#include "sgcount/node_family.hpp"

namespace sgcount {

enum class GrowthFamily {
  PowerMinusOne,   // n^k - 1
  Power,           // n^k
  PowerPlusOne,    // n^k + 1
  Linear,          // k
  Odd,             // 2k - 1
  ClenshawCurtis,  // 1, then 2^{k-1} + 1
  Custom,          // explicit finite table f(1), f(2), ...
};

/// A growth function f mapping a rule level k >= 1 to the node count |S_k|.
///
/// Immutable value type. Custom tables are validated at construction
/// (positive, non-decreasing) and levels past the end of the table are
/// range errors rather than extrapolated.
class GrowthSpec {
 public:
  static GrowthSpec power_minus_one(std::uint32_t n);
  static GrowthSpec power(std::uint32_t n);
  static GrowthSpec power_plus_one(std::uint32_t n);
  static GrowthSpec linear();
  static GrowthSpec odd();
  static GrowthSpec clenshaw_curtis();
  static GrowthSpec custom(std::vector<std::uint64_t> values);

  /// Parses "power_minus_one:n", "power:n", "power_plus_one:n", "linear",
  /// "odd", "clenshaw_curtis" or "custom:v1,v2,...".
  static GrowthSpec parse(std::string_view text);

  [[nodiscard]] GrowthFamily family() const noexcept { return family_; }
  /// Base n of the power families; 0 for the others.
  [[nodiscard]] std::uint32_t base() const noexcept { return base_; }
  [[nodiscard]] std::span<const std::uint64_t> table() const noexcept { return table_; }

  /// Largest evaluable level, or nullopt when unbounded.
  [[nodiscard]] std::optional<std::uint32_t> max_level() const noexcept;

  [[nodiscard]] BigInt eval(std::uint32_t k) const;
  /// f(1), ..., f(levels) in order.
  [[nodiscard]] std::vector<BigInt> values(std::uint32_t levels) const;
  /// f(k) as a machine integer; RangeError if it does not fit.
  [[nodiscard]] std::uint64_t eval_u64(std::uint32_t k) const;

  /// Canonical string form, accepted back by parse().
  [[nodiscard]] std::string name() const;

  bool operator==(const GrowthSpec&) const = default;

 private:
  GrowthSpec(GrowthFamily family, std::uint32_t base, std::vector<std::uint64_t> table)
      : family_(family), base_(base), table_(std::move(table)) {}

  GrowthFamily family_;
  std::uint32_t base_;
  std::vector<std::uint64_t> table_;
};

[[nodiscard]] inline BigInt eval_growth(const GrowthSpec& g, std::uint32_t k) { return g.eval(k); }

/// True exactly for the documented nested (node family, growth) pairings.
[[nodiscard]] bool is_nested_pairing(NodeFamilyId family, const GrowthSpec& g);

}  // namespace sgcount
