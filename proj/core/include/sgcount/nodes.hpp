#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sgcount/node_family.hpp"

namespace sgcount {

/// Exact identity of a univariate node.
///
/// Rational keys hold a reduced fraction p/q with q > 0. For the equidistant
/// families the fraction is the coordinate itself; for the Chebyshev
/// families it is the angle fraction t with coordinate cos(pi t), t in
/// [0, 1]. SeqIndex keys name the j-th element (1-based) of a fixed Leja
/// master sequence.
class NodeKey {
 public:
  enum class Kind : std::uint8_t { Rational, SeqIndex };

  /// Reduces p/q to lowest terms; ContractError if q == 0.
  static NodeKey rational(std::int64_t p, std::int64_t q);
  /// ContractError if j == 0.
  static NodeKey seq_index(std::uint64_t j);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }
  /// Sequence index (SeqIndex keys only).
  [[nodiscard]] std::uint64_t index() const noexcept { return static_cast<std::uint64_t>(num_); }

  auto operator<=>(const NodeKey&) const = default;

 private:
  NodeKey(Kind kind, std::int64_t num, std::int64_t den) : kind_(kind), num_(num), den_(den) {}

  Kind kind_;
  std::int64_t num_;
  std::int64_t den_;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept;
};

/// A univariate node set S with exact keys and float64 coordinates.
struct NodeSet {
  NodeFamilyId family;
  std::vector<NodeKey> keys;
  std::vector<double> coords;

  [[nodiscard]] std::size_t size() const noexcept { return keys.size(); }
};

/// Default first point of the Leja family.
inline constexpr double kLejaDefaultSeed = 1.0;
/// Largest Leja master sequence this library will compute.
inline constexpr std::size_t kLejaMaxPoints = 10'000;

/// The n nodes of `family` in their defining order. E(1) = C2(1) = {0}.
/// Leja families return prefixes of the default master sequences
/// (seed 1, or 0 for the symmetric variant). ContractError if n == 0.
[[nodiscard]] NodeSet make_nodes(NodeFamilyId family, std::size_t n);

/// First n points of the Leja sequence started at x1. With symmetric =
/// true the seed is forced to 0 and points are added as mirror pairs.
/// Sequences are computed once per (seed, symmetric) and cached.
/// RangeError if n > kLejaMaxPoints, ContractError if x1 is outside [-1, 1].
[[nodiscard]] NodeSet make_leja(std::size_t n, double x1 = kLejaDefaultSeed, bool symmetric = false);

/// Coordinates of the first n Leja points; same caching as make_leja.
[[nodiscard]] std::vector<double> leja_sequence(std::size_t n, double x1 = kLejaDefaultSeed,
                                                bool symmetric = false);

/// Float64 coordinate of a key under the family's coordinate map. Cosine
/// families map t to cos(pi t); Leja keys look up the default master
/// sequence. ContractError when the key kind does not match the family.
[[nodiscard]] double angle_key_to_coord(const NodeKey& key, NodeFamilyId family);

}  // namespace sgcount
