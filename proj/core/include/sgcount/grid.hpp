#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

#include "sgcount/bigint.hpp"
#include "sgcount/growth.hpp"
#include "sgcount/nodes.hpp"

namespace sgcount {

/// A multi-index i in N_{>=1}^d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> parts);

  [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
  [[nodiscard]] std::uint32_t operator[](std::size_t k) const { return parts_[k]; }
  [[nodiscard]] std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  /// |i| = i_1 + ... + i_d.
  [[nodiscard]] std::uint64_t norm() const noexcept;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  friend class Compositions;
  std::vector<std::uint32_t> parts_;
};

/// Lexicographically ordered range over the compositions of `total` into d
/// positive parts. Empty when total < d.
class Compositions {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MultiIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const MultiIndex*;
    using reference = const MultiIndex&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class Compositions;
    MultiIndex current_;
    bool done_ = true;
  };

  Compositions(std::uint32_t d, std::uint64_t total) : d_(d), total_(total) {}

  [[nodiscard]] iterator begin() const;
  [[nodiscard]] iterator end() const { return {}; }

 private:
  std::uint32_t d_;
  std::uint64_t total_;
};

[[nodiscard]] inline Compositions compositions(std::uint32_t d, std::uint64_t total) {
  return {d, total};
}

/// Calls fn(i) for every multi-index of the Smolyak index set, shell by
/// shell in increasing |i| and lexicographically within a shell. Nested
/// mode visits only |i| = d+mu; general mode visits
/// max(d, mu+1) <= |i| <= d+mu.
void for_each_index(std::uint32_t d, std::uint32_t mu, bool nested_mode,
                    const std::function<void(const MultiIndex&)>& fn);

[[nodiscard]] std::vector<MultiIndex> index_set(std::uint32_t d, std::uint32_t mu, bool nested_mode);

/// Tuples beyond this count are refused by build_grid.
inline constexpr std::uint64_t kGridTupleGuard = 100'000'000;

struct GridSpec {
  std::uint32_t d = 1;
  std::uint32_t mu = 0;
  NodeFamilyId family = NodeFamilyId::Chebyshev1;
  GrowthSpec growth = GrowthSpec::power(3);
  bool nested_mode = true;

  /// ContractError if d == 0 or nested_mode is set for a pairing that is
  /// not nested.
  void validate() const;
};

/// The Smolyak grid as a set of exact key tuples.
///
/// Keys are interned into a sorted dictionary; each point is a row of d
/// dictionary ids. Rows are stored sorted, so iteration order is
/// lexicographic in key order and independent of how the grid was built.
class Grid {
 public:
  Grid(GridSpec spec, std::vector<NodeKey> dictionary, std::vector<std::uint32_t> rows);

  [[nodiscard]] const GridSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] BigInt cardinality() const { return BigInt(size()); }

  [[nodiscard]] std::span<const std::uint32_t> point_ids(std::size_t i) const;
  [[nodiscard]] std::vector<NodeKey> point_keys(std::size_t i) const;
  [[nodiscard]] std::vector<double> point_coords(std::size_t i) const;
  [[nodiscard]] const std::vector<NodeKey>& dictionary() const noexcept { return dictionary_; }

 private:
  GridSpec spec_;
  std::vector<NodeKey> dictionary_;
  std::vector<double> dictionary_coords_;
  std::vector<std::uint32_t> rows_;
};

/// Builds Gamma(d, mu). ResourceGuardError when the with-duplicates tuple
/// count exceeds kGridTupleGuard.
[[nodiscard]] Grid build_grid(const GridSpec& spec);

/// |Gamma(d, mu)| by streaming deduplication without keeping coordinates.
/// ResourceGuardError when the number of distinct points exceeds the guard.
[[nodiscard]] BigInt grid_cardinality_oracle(const GridSpec& spec);

/// sum over the spec's index set of prod f(i_k): Ndup in nested mode,
/// Nsigma in general mode.
[[nodiscard]] BigInt duplicate_count_oracle(const GridSpec& spec);

}  // namespace sgcount
