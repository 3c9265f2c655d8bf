#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "sgcount/errors.hpp"
#include "sgcount/nodes.hpp"

using namespace sgcount;

TEST_CASE("NodeKey reduces fractions and orders exactly") {
  CHECK(NodeKey::rational(2, 4) == NodeKey::rational(1, 2));
  CHECK(NodeKey::rational(3, -6) == NodeKey::rational(-1, 2));
  CHECK(NodeKey::rational(0, 7) == NodeKey::rational(0, 1));
  CHECK(NodeKey::rational(1, 3) != NodeKey::seq_index(1));
  CHECK_THROWS_AS(NodeKey::rational(1, 0), ContractError);
  CHECK_THROWS_AS(NodeKey::seq_index(0), ContractError);
  CHECK(NodeKeyHash{}(NodeKey::rational(2, 4)) == NodeKeyHash{}(NodeKey::rational(1, 2)));
}

TEST_CASE("make_nodes examples") {
  const auto c1 = make_nodes(NodeFamilyId::Chebyshev1, 1);
  REQUIRE(c1.size() == 1);
  CHECK(c1.keys[0] == NodeKey::rational(1, 2));
  CHECK(c1.coords[0] == 0.0);

  const auto c2 = make_nodes(NodeFamilyId::Chebyshev2, 3);
  CHECK(c2.keys == std::vector{NodeKey::rational(0, 1), NodeKey::rational(1, 2), NodeKey::rational(1, 1)});
  CHECK(c2.coords == std::vector{1.0, 0.0, -1.0});

  const auto ei = make_nodes(NodeFamilyId::EquidistantInterior, 3);
  CHECK(ei.coords == std::vector{-0.5, 0.0, 0.5});

  CHECK(make_nodes(NodeFamilyId::EquidistantBoundary, 1).coords == std::vector{0.0});
  CHECK(make_nodes(NodeFamilyId::Chebyshev2, 1).coords == std::vector{0.0});
  CHECK(make_nodes(NodeFamilyId::EquidistantBoundary, 5).coords == std::vector{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK_THROWS_AS((void)make_nodes(NodeFamilyId::Chebyshev1, 0), ContractError);
}

TEST_CASE("angle_key_to_coord examples") {
  CHECK(angle_key_to_coord(NodeKey::rational(1, 2), NodeFamilyId::Chebyshev1) == 0.0);
  CHECK(angle_key_to_coord(NodeKey::rational(0, 1), NodeFamilyId::Chebyshev2) == 1.0);
  CHECK(angle_key_to_coord(NodeKey::rational(1, 3), NodeFamilyId::Chebyshev1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS((void)angle_key_to_coord(NodeKey::seq_index(1), NodeFamilyId::Chebyshev1), ContractError);
  CHECK_THROWS_AS((void)angle_key_to_coord(NodeKey::rational(1, 2), NodeFamilyId::Leja), ContractError);
  CHECK(angle_key_to_coord(NodeKey::seq_index(2), NodeFamilyId::Leja) == -1.0);
}

TEST_CASE("node sets have the requested size, distinct keys and coordinates in [-1, 1]") {
  for (NodeFamilyId family : kAllNodeFamilies) {
    CAPTURE(family_name(family));
    for (std::size_t n : {1, 2, 3, 7, 64, 200}) {
      const auto s = make_nodes(family, n);
      REQUIRE(s.size() == n);
      REQUIRE(s.coords.size() == n);
      std::set<NodeKey> unique(s.keys.begin(), s.keys.end());
      CHECK(unique.size() == n);
      for (double x : s.coords) {
        CHECK(x >= -1.0);
        CHECK(x <= 1.0);
      }
    }
  }
}

TEST_CASE("closed-form families are symmetric under negation") {
  for (NodeFamilyId family : {NodeFamilyId::EquidistantInterior, NodeFamilyId::EquidistantBoundary,
                              NodeFamilyId::Chebyshev1, NodeFamilyId::Chebyshev2}) {
    const bool angle = family == NodeFamilyId::Chebyshev1 || family == NodeFamilyId::Chebyshev2;
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto s = make_nodes(family, n);
      std::set<NodeKey> keys(s.keys.begin(), s.keys.end());
      std::multiset<double> coords(s.coords.begin(), s.coords.end());
      for (const NodeKey& k : s.keys) {
        const NodeKey mirror = angle ? NodeKey::rational(k.den() - k.num(), k.den()) : NodeKey::rational(-k.num(), k.den());
        CHECK(keys.count(mirror) == 1);
      }
      for (double x : s.coords) CHECK(coords.count(-x + 0.0) >= 1);
    }
  }
}

TEST_CASE("exact nesting of the documented growth pairings") {
  auto included = [](NodeFamilyId f, std::size_t a, std::size_t b) {
    auto x = make_nodes(f, a).keys;
    auto y = make_nodes(f, b).keys;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  std::size_t p = 3;
  for (int k = 1; k <= 4; ++k, p *= 3) CHECK(included(NodeFamilyId::Chebyshev1, p, 3 * p));
  for (std::size_t m : {2u, 3u}) {
    std::size_t mk = m;
    for (int k = 1; k <= 4; ++k, mk *= m) {
      CHECK(included(NodeFamilyId::EquidistantInterior, mk - 1, mk * m - 1));
      CHECK(included(NodeFamilyId::EquidistantBoundary, mk + 1, mk * m + 1));
      CHECK(included(NodeFamilyId::Chebyshev2, mk + 1, mk * m + 1));
    }
  }
  CHECK_FALSE(included(NodeFamilyId::Chebyshev1, 2, 4));
  for (std::size_t a = 1; a <= 12; ++a) {
    CHECK(included(NodeFamilyId::Leja, a, a + 3));
    CHECK(included(NodeFamilyId::SymmetricLeja, a, a + 2));
  }
}

TEST_CASE("make_leja examples") {
  CHECK(make_leja(1, 1.0, false).coords == std::vector{1.0});
  const auto two = make_leja(2, 1.0, false);
  CHECK(two.coords == std::vector{1.0, -1.0});
  const auto three = make_leja(3, 1.0, false);
  REQUIRE(three.size() == 3);
  CHECK(three.coords[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(three.keys == std::vector{NodeKey::seq_index(1), NodeKey::seq_index(2), NodeKey::seq_index(3)});
  CHECK(make_leja(1, 0.5, false).coords == std::vector{0.5});

  // Independent dense scan for the first points.
  const auto ref = oracle::leja_dense_scan(3, 1.0, 200'001);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(three.coords[j] - ref[j]) < 1e-9);
}

TEST_CASE("symmetric Leja starts at zero and adds mirror pairs") {
  const auto s = make_leja(7, 0.3, true);
  CHECK(s.family == NodeFamilyId::SymmetricLeja);
  CHECK(s.coords[0] == 0.0);
  CHECK(s.coords[1] == -1.0);
  CHECK(s.coords[2] == 1.0);
  CHECK(s.coords[3] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
  for (std::size_t j = 1; j + 1 < 7; j += 2) CHECK(s.coords[j] == -s.coords[j + 1]);
  // Each odd-length prefix is symmetric.
  for (std::size_t n = 1; n <= 7; n += 2) {
    std::multiset<double> xs(s.coords.begin(), s.coords.begin() + n);
    for (double x : xs) CHECK(xs.count(-x + 0.0) == xs.count(x));
  }
}

TEST_CASE("Leja sequences are deterministic and prefix-stable") {
  const auto longer = leja_sequence(40, 1.0, false);
  const auto shorter = leja_sequence(15, 1.0, false);
  CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  const auto other_seed = leja_sequence(5, -0.25, false);
  CHECK(other_seed[0] == -0.25);
  std::set<double> distinct(longer.begin(), longer.end());
  CHECK(distinct.size() == longer.size());
}

TEST_CASE("Leja bounds") {
  CHECK_THROWS_AS((void)leja_sequence(kLejaMaxPoints + 1, 1.0, false), RangeError);
  CHECK_THROWS_AS((void)leja_sequence(3, 1.5, false), ContractError);
  CHECK_THROWS_AS((void)make_leja(0), ContractError);
}
