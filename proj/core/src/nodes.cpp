#include "sgcount/nodes.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "sgcount/errors.hpp"

namespace sgcount {
namespace {

// cos(pi p / q) for 0 <= p <= q, exactly antisymmetric under p -> q - p and
// exactly zero at p / q = 1/2.
double cos_pi_fraction(std::int64_t p, std::int64_t q) {
  if (2 * p > q) return -cos_pi_fraction(q - p, q);
  const double pi = std::numbers::pi;
  if (4 * p <= q) return std::cos(pi * static_cast<double>(p) / static_cast<double>(q));
  return std::sin(pi * static_cast<double>(q - 2 * p) / (2.0 * static_cast<double>(q)));
}

bool is_cosine_family(NodeFamilyId f) {
  return f == NodeFamilyId::Chebyshev1 || f == NodeFamilyId::Chebyshev2;
}

bool is_leja_family(NodeFamilyId f) {
  return f == NodeFamilyId::Leja || f == NodeFamilyId::SymmetricLeja;
}

std::int64_t as_i64(std::size_t n) {
  if (n > static_cast<std::size_t>(INT64_MAX / 4)) throw RangeError("node count too large");
  return static_cast<std::int64_t>(n);
}

}  // namespace

std::string_view family_name(NodeFamilyId family) {
  switch (family) {
    case NodeFamilyId::EquidistantInterior: return "equidistant_interior";
    case NodeFamilyId::EquidistantBoundary: return "equidistant_boundary";
    case NodeFamilyId::Chebyshev1: return "chebyshev1";
    case NodeFamilyId::Chebyshev2: return "chebyshev2";
    case NodeFamilyId::Leja: return "leja";
    case NodeFamilyId::SymmetricLeja: return "symmetric_leja";
  }
  return "?";
}

NodeFamilyId parse_family(std::string_view text) {
  for (NodeFamilyId f : kAllNodeFamilies) {
    if (family_name(f) == text) return f;
  }
  throw ContractError("unknown node family '" + std::string(text) + "'");
}

NodeKey NodeKey::rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw ContractError("node key denominator is zero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  return {Kind::Rational, p / g, q / g};
}

NodeKey NodeKey::seq_index(std::uint64_t j) {
  if (j == 0) throw ContractError("sequence index must be >= 1");
  return {Kind::SeqIndex, static_cast<std::int64_t>(j), 1};
}

std::size_t NodeKeyHash::operator()(const NodeKey& k) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(k.num());
  h ^= std::hash<std::int64_t>{}(k.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(k.kind());
}

double angle_key_to_coord(const NodeKey& key, NodeFamilyId family) {
  if (is_leja_family(family)) {
    if (key.is_rational()) throw ContractError("Leja families use sequence-index keys");
    const bool symmetric = family == NodeFamilyId::SymmetricLeja;
    return leja_sequence(key.index(), symmetric ? 0.0 : kLejaDefaultSeed, symmetric).back();
  }
  if (!key.is_rational()) throw ContractError("family " + std::string(family_name(family)) +
                                              " uses rational keys");
  if (is_cosine_family(family)) {
    if (key.num() < 0 || key.num() > key.den()) throw ContractError("angle fraction outside [0, 1]");
    return cos_pi_fraction(key.num(), key.den());
  }
  return static_cast<double>(key.num()) / static_cast<double>(key.den());
}

NodeSet make_nodes(NodeFamilyId family, std::size_t n) {
  if (n == 0) throw ContractError("a node set needs at least one node");
  if (family == NodeFamilyId::Leja) return make_leja(n, kLejaDefaultSeed, false);
  if (family == NodeFamilyId::SymmetricLeja) return make_leja(n, 0.0, true);

  const std::int64_t m = as_i64(n);
  NodeSet set{family, {}, {}};
  set.keys.reserve(n);
  for (std::int64_t k = 1; k <= m; ++k) {
    switch (family) {
      case NodeFamilyId::EquidistantInterior:
        set.keys.push_back(NodeKey::rational(2 * k - (m + 1), m + 1));
        break;
      case NodeFamilyId::EquidistantBoundary:
        set.keys.push_back(m == 1 ? NodeKey::rational(0, 1)
                                  : NodeKey::rational(2 * (k - 1) - (m - 1), m - 1));
        break;
      case NodeFamilyId::Chebyshev1:
        set.keys.push_back(NodeKey::rational(2 * k - 1, 2 * m));
        break;
      case NodeFamilyId::Chebyshev2:
        set.keys.push_back(m == 1 ? NodeKey::rational(1, 2) : NodeKey::rational(k - 1, m - 1));
        break;
      case NodeFamilyId::Leja:
      case NodeFamilyId::SymmetricLeja:
        break;
    }
  }
  set.coords.reserve(n);
  for (const NodeKey& key : set.keys) set.coords.push_back(angle_key_to_coord(key, family));
  return set;
}

NodeSet make_leja(std::size_t n, double x1, bool symmetric) {
  if (n == 0) throw ContractError("a node set needs at least one node");
  NodeSet set{symmetric ? NodeFamilyId::SymmetricLeja : NodeFamilyId::Leja, {}, {}};
  set.coords = leja_sequence(n, x1, symmetric);
  set.keys.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) set.keys.push_back(NodeKey::seq_index(j));
  return set;
}

}  // namespace sgcount
