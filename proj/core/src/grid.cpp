#include "sgcount/grid.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sgcount/errors.hpp"

namespace sgcount {
namespace {

// Node sets S_1..S_levels interned into one sorted key dictionary.
struct InternedLevels {
  std::vector<NodeKey> dictionary;
  std::vector<std::vector<std::uint32_t>> ids;  // ids[k-1] lists S_k
};

InternedLevels intern_levels(const GridSpec& spec, std::uint32_t levels) {
  std::vector<NodeSet> sets;
  sets.reserve(levels);
  for (std::uint32_t k = 1; k <= levels; ++k) {
    const std::uint64_t n = spec.growth.eval_u64(k);
    if (n > kGridTupleGuard) {
      throw ResourceGuardError("univariate set S_" + std::to_string(k) + " has " + std::to_string(n) +
                               " nodes, above the grid guard");
    }
    sets.push_back(make_nodes(spec.family, n));
  }
  InternedLevels out;
  for (const NodeSet& s : sets) out.dictionary.insert(out.dictionary.end(), s.keys.begin(), s.keys.end());
  std::sort(out.dictionary.begin(), out.dictionary.end());
  out.dictionary.erase(std::unique(out.dictionary.begin(), out.dictionary.end()), out.dictionary.end());
  for (const NodeSet& s : sets) {
    std::vector<std::uint32_t> level;
    level.reserve(s.size());
    for (const NodeKey& key : s.keys) {
      const auto it = std::lower_bound(out.dictionary.begin(), out.dictionary.end(), key);
      level.push_back(static_cast<std::uint32_t>(it - out.dictionary.begin()));
    }
    out.ids.push_back(std::move(level));
  }
  return out;
}

template <class Row>
void sort_unique(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Collects the distinct key-id tuples of the grid. `pack` turns the current
// odometer digits into a Row whose ordering is lexicographic in the digits.
template <class Row, class Pack>
std::vector<Row> collect_rows(const GridSpec& spec, const InternedLevels& levels, Pack pack) {
  const std::size_t d = spec.d;
  std::vector<Row> rows;
  std::size_t compacted = 0;
  std::vector<std::uint32_t> digits(d);
  std::vector<std::size_t> pos(d);

  for_each_index(spec.d, spec.mu, spec.nested_mode, [&](const MultiIndex& i) {
    std::vector<const std::vector<std::uint32_t>*> axes(d);
    for (std::size_t k = 0; k < d; ++k) {
      axes[k] = &levels.ids[i[k] - 1];
      pos[k] = 0;
      digits[k] = (*axes[k])[0];
    }
    while (true) {
      rows.push_back(pack(digits));
      std::size_t k = d;
      while (k > 0) {
        --k;
        if (++pos[k] < axes[k]->size()) {
          digits[k] = (*axes[k])[pos[k]];
          break;
        }
        pos[k] = 0;
        digits[k] = (*axes[k])[0];
        if (k == 0) {
          k = d;  // odometer wrapped
          break;
        }
      }
      if (k == d) break;
    }
    if (rows.size() > 2 * compacted + (1u << 20)) {
      sort_unique(rows);
      compacted = rows.size();
      if (compacted > kGridTupleGuard) {
        throw ResourceGuardError("grid has more than " + std::to_string(kGridTupleGuard) +
                                 " distinct points");
      }
    }
  });
  sort_unique(rows);
  if (rows.size() > kGridTupleGuard) {
    throw ResourceGuardError("grid has more than " + std::to_string(kGridTupleGuard) + " distinct points");
  }
  return rows;
}

// Distinct points as a flat row-major id array.
std::vector<std::uint32_t> distinct_points(const GridSpec& spec, const InternedLevels& levels) {
  const std::size_t d = spec.d;
  const std::size_t dict_size = levels.dictionary.size();
  const int bits = std::max(1, static_cast<int>(std::bit_width(dict_size > 0 ? dict_size - 1 : 0)));
  std::vector<std::uint32_t> flat;

  if (static_cast<std::size_t>(bits) * d <= 64) {
    const auto rows = collect_rows<std::uint64_t>(spec, levels, [&](const std::vector<std::uint32_t>& dg) {
      std::uint64_t row = 0;
      for (std::uint32_t id : dg) row = (row << bits) | id;
      return row;
    });
    flat.resize(rows.size() * d);
    const std::uint64_t mask = (1ULL << bits) - 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint64_t row = rows[r];
      for (std::size_t k = d; k-- > 0;) {
        flat[r * d + k] = static_cast<std::uint32_t>(row & mask);
        row >>= bits;
      }
    }
  } else {
    const auto rows = collect_rows<std::vector<std::uint32_t>>(
        spec, levels, [](const std::vector<std::uint32_t>& dg) { return dg; });
    flat.reserve(rows.size() * d);
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (std::uint32_t p : parts_) {
    if (p == 0) throw ContractError("multi-index parts must be >= 1");
  }
}

std::uint64_t MultiIndex::norm() const noexcept {
  std::uint64_t s = 0;
  for (std::uint32_t p : parts_) s += p;
  return s;
}

Compositions::iterator Compositions::begin() const {
  iterator it;
  if (d_ == 0 || total_ < d_) return it;
  it.current_.parts_.assign(d_, 1);
  it.current_.parts_.back() = static_cast<std::uint32_t>(total_ - (d_ - 1));
  it.done_ = false;
  return it;
}

Compositions::iterator& Compositions::iterator::operator++() {
  auto& a = current_.parts_;
  const std::size_t d = a.size();
  std::uint64_t tail = a[d - 1];
  for (std::size_t i = d - 1; i-- > 0;) {
    // tail = a[i+1] + ... + a[d-1]; it has slack if it exceeds all ones.
    if (tail > d - 1 - i) {
      ++a[i];
      for (std::size_t j = i + 1; j + 1 < d; ++j) a[j] = 1;
      a[d - 1] = static_cast<std::uint32_t>(tail - 1 - (d - 2 - i));
      return *this;
    }
    tail += a[i];
  }
  done_ = true;
  return *this;
}

void for_each_index(std::uint32_t d, std::uint32_t mu, bool nested_mode,
                    const std::function<void(const MultiIndex&)>& fn) {
  const std::uint64_t hi = std::uint64_t{d} + mu;
  const std::uint64_t lo = nested_mode ? hi : std::max<std::uint64_t>(d, std::uint64_t{mu} + 1);
  for (std::uint64_t s = lo; s <= hi; ++s) {
    for (const MultiIndex& i : compositions(d, s)) fn(i);
  }
}

std::vector<MultiIndex> index_set(std::uint32_t d, std::uint32_t mu, bool nested_mode) {
  std::vector<MultiIndex> out;
  for_each_index(d, mu, nested_mode, [&](const MultiIndex& i) { out.push_back(i); });
  return out;
}

void GridSpec::validate() const {
  if (d == 0) throw ContractError("dimension d must be >= 1");
  if (nested_mode && !is_nested_pairing(family, growth)) {
    throw ContractError("(" + std::string(family_name(family)) + ", " + growth.name() +
                        ") is not a nested pairing; use general mode");
  }
  if (const auto top = growth.max_level(); top && mu + 1 > *top) {
    throw RangeError("growth " + growth.name() + " defines " + std::to_string(*top) +
                     " levels, grid needs " + std::to_string(mu + 1));
  }
}

Grid::Grid(GridSpec spec, std::vector<NodeKey> dictionary, std::vector<std::uint32_t> rows)
    : spec_(std::move(spec)), dictionary_(std::move(dictionary)), rows_(std::move(rows)) {
  dictionary_coords_.reserve(dictionary_.size());
  const bool leja = spec_.family == NodeFamilyId::Leja || spec_.family == NodeFamilyId::SymmetricLeja;
  if (leja && !dictionary_.empty()) {
    const bool symmetric = spec_.family == NodeFamilyId::SymmetricLeja;
    const auto seq = leja_sequence(dictionary_.back().index(), symmetric ? 0.0 : kLejaDefaultSeed, symmetric);
    for (const NodeKey& key : dictionary_) dictionary_coords_.push_back(seq[key.index() - 1]);
  } else {
    for (const NodeKey& key : dictionary_) dictionary_coords_.push_back(angle_key_to_coord(key, spec_.family));
  }
}

std::size_t Grid::size() const noexcept { return spec_.d == 0 ? 0 : rows_.size() / spec_.d; }

std::span<const std::uint32_t> Grid::point_ids(std::size_t i) const {
  return std::span<const std::uint32_t>(rows_).subspan(i * spec_.d, spec_.d);
}

std::vector<NodeKey> Grid::point_keys(std::size_t i) const {
  std::vector<NodeKey> out;
  for (std::uint32_t id : point_ids(i)) out.push_back(dictionary_[id]);
  return out;
}

std::vector<double> Grid::point_coords(std::size_t i) const {
  std::vector<double> out;
  for (std::uint32_t id : point_ids(i)) out.push_back(dictionary_coords_[id]);
  return out;
}

BigInt duplicate_count_oracle(const GridSpec& spec) {
  if (spec.d == 0) throw ContractError("dimension d must be >= 1");
  if (const auto top = spec.growth.max_level(); top && spec.mu + 1 > *top) {
    throw RangeError("growth " + spec.growth.name() + " defines " + std::to_string(*top) +
                     " levels, " + std::to_string(spec.mu + 1) + " needed");
  }
  const std::vector<BigInt> f = spec.growth.values(spec.mu + 1);
  BigInt total = 0;
  for_each_index(spec.d, spec.mu, spec.nested_mode, [&](const MultiIndex& i) {
    BigInt prod = 1;
    for (std::uint32_t part : i.parts()) prod *= f[part - 1];
    total += prod;
  });
  return total;
}

Grid build_grid(const GridSpec& spec) {
  spec.validate();
  const BigInt tuples = duplicate_count_oracle(spec);
  if (tuples > kGridTupleGuard) {
    throw ResourceGuardError("grid would generate " + to_decimal(tuples) + " tuples (guard " +
                             std::to_string(kGridTupleGuard) +
                             "); use the cardinality oracle or a counting formula");
  }
  InternedLevels levels = intern_levels(spec, spec.mu + 1);
  std::vector<std::uint32_t> rows = distinct_points(spec, levels);
  return Grid(spec, std::move(levels.dictionary), std::move(rows));
}

BigInt grid_cardinality_oracle(const GridSpec& spec) {
  spec.validate();
  const InternedLevels levels = intern_levels(spec, spec.mu + 1);
  return BigInt(distinct_points(spec, levels).size() / spec.d);
}

}  // namespace sgcount
