#include "sgcount/growth.hpp"

#include <charconv>
#include <limits>
#include <string>

#include "sgcount/errors.hpp"

namespace sgcount {
namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ContractError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::uint32_t checked_base(std::uint32_t n) {
  if (n < 2) throw ContractError("growth base must be >= 2, got " + std::to_string(n));
  return n;
}

// True when table[k-1] == base^(k-1+shift) for every entry.
bool table_is_power(std::span<const std::uint64_t> table, std::uint64_t base, unsigned shift) {
  BigInt expected = ipow(BigInt(base), shift);
  for (std::uint64_t v : table) {
    if (BigInt(v) != expected) return false;
    expected *= base;
  }
  return !table.empty();
}

}  // namespace

GrowthSpec GrowthSpec::power_minus_one(std::uint32_t n) {
  return {GrowthFamily::PowerMinusOne, checked_base(n), {}};
}
GrowthSpec GrowthSpec::power(std::uint32_t n) { return {GrowthFamily::Power, checked_base(n), {}}; }
GrowthSpec GrowthSpec::power_plus_one(std::uint32_t n) {
  return {GrowthFamily::PowerPlusOne, checked_base(n), {}};
}
GrowthSpec GrowthSpec::linear() { return {GrowthFamily::Linear, 0, {}}; }
GrowthSpec GrowthSpec::odd() { return {GrowthFamily::Odd, 0, {}}; }
GrowthSpec GrowthSpec::clenshaw_curtis() { return {GrowthFamily::ClenshawCurtis, 0, {}}; }

GrowthSpec GrowthSpec::custom(std::vector<std::uint64_t> values) {
  if (values.empty()) throw ContractError("custom growth table is empty");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == 0) {
      throw ContractError("custom growth value f(" + std::to_string(k + 1) + ") must be >= 1");
    }
    if (k > 0 && values[k] < values[k - 1]) {
      throw ContractError("custom growth table decreases at level " + std::to_string(k + 1));
    }
  }
  return {GrowthFamily::Custom, 0, std::move(values)};
}

GrowthSpec GrowthSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  auto base_arg = [&]() -> std::uint32_t {
    if (!has_arg) throw ContractError("growth '" + std::string(head) + "' needs a base, e.g. " +
                                      std::string(head) + ":2");
    const std::uint64_t n = parse_u64(arg, "growth base");
    if (n > std::numeric_limits<std::uint32_t>::max()) throw ContractError("growth base too large");
    return static_cast<std::uint32_t>(n);
  };
  auto no_arg = [&]() {
    if (has_arg) throw ContractError("growth '" + std::string(head) + "' takes no argument");
  };

  if (head == "power_minus_one") return power_minus_one(base_arg());
  if (head == "power") return power(base_arg());
  if (head == "power_plus_one") return power_plus_one(base_arg());
  if (head == "linear") return no_arg(), linear();
  if (head == "odd") return no_arg(), odd();
  if (head == "clenshaw_curtis") return no_arg(), clenshaw_curtis();
  if (head == "custom") {
    if (!has_arg || arg.empty()) throw ContractError("custom growth needs values, e.g. custom:1,2,4");
    std::vector<std::uint64_t> values;
    std::size_t start = 0;
    while (start <= arg.size()) {
      const auto comma = arg.find(',', start);
      const auto piece = arg.substr(start, comma == std::string_view::npos ? arg.npos : comma - start);
      values.push_back(parse_u64(piece, "custom growth value"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return custom(std::move(values));
  }
  throw ContractError("unknown growth '" + std::string(text) + "'");
}

std::optional<std::uint32_t> GrowthSpec::max_level() const noexcept {
  if (family_ == GrowthFamily::Custom) return static_cast<std::uint32_t>(table_.size());
  return std::nullopt;
}

BigInt GrowthSpec::eval(std::uint32_t k) const {
  if (k == 0) throw ContractError("growth level must be >= 1");
  switch (family_) {
    case GrowthFamily::PowerMinusOne: return ipow(BigInt(base_), k) - 1;
    case GrowthFamily::Power: return ipow(BigInt(base_), k);
    case GrowthFamily::PowerPlusOne: return ipow(BigInt(base_), k) + 1;
    case GrowthFamily::Linear: return BigInt(k);
    case GrowthFamily::Odd: return BigInt(2) * k - 1;
    case GrowthFamily::ClenshawCurtis: return k == 1 ? BigInt(1) : ipow(BigInt(2), k - 1) + 1;
    case GrowthFamily::Custom:
      if (k > table_.size()) {
        throw RangeError("custom growth table has " + std::to_string(table_.size()) +
                         " levels, level " + std::to_string(k) + " requested");
      }
      return BigInt(table_[k - 1]);
  }
  throw InternalError("unhandled growth family");
}

std::vector<BigInt> GrowthSpec::values(std::uint32_t levels) const {
  std::vector<BigInt> out;
  out.reserve(levels);
  for (std::uint32_t k = 1; k <= levels; ++k) out.push_back(eval(k));
  return out;
}

std::uint64_t GrowthSpec::eval_u64(std::uint32_t k) const {
  const BigInt v = eval(k);
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw RangeError("f(" + std::to_string(k) + ") of " + name() + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

std::string GrowthSpec::name() const {
  switch (family_) {
    case GrowthFamily::PowerMinusOne: return "power_minus_one:" + std::to_string(base_);
    case GrowthFamily::Power: return "power:" + std::to_string(base_);
    case GrowthFamily::PowerPlusOne: return "power_plus_one:" + std::to_string(base_);
    case GrowthFamily::Linear: return "linear";
    case GrowthFamily::Odd: return "odd";
    case GrowthFamily::ClenshawCurtis: return "clenshaw_curtis";
    case GrowthFamily::Custom: {
      std::string s = "custom:";
      for (std::size_t k = 0; k < table_.size(); ++k) {
        if (k > 0) s += ',';
        s += std::to_string(table_[k]);
      }
      return s;
    }
  }
  return "?";
}

bool is_nested_pairing(NodeFamilyId family, const GrowthSpec& g) {
  switch (family) {
    case NodeFamilyId::EquidistantInterior:
      return g.family() == GrowthFamily::PowerMinusOne;
    case NodeFamilyId::EquidistantBoundary:
    case NodeFamilyId::Chebyshev2:
      return g.family() == GrowthFamily::PowerPlusOne;
    case NodeFamilyId::Chebyshev1:
      if (g.family() == GrowthFamily::Power) return g.base() == 3;
      // 3^{k-1} has no family of its own; accept it (and 3^k) as a table.
      return g.family() == GrowthFamily::Custom &&
             (table_is_power(g.table(), 3, 0) || table_is_power(g.table(), 3, 1));
    case NodeFamilyId::Leja:
      return true;
    case NodeFamilyId::SymmetricLeja:
      return g.family() == GrowthFamily::Odd;
  }
  return false;
}

}  // namespace sgcount
