#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qmult/partition.hpp"

using namespace qmult;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(parse_lie_type(name)); }

std::vector<std::uint64_t> coeffs(const QPolynomial& p) { return p.coeffs(); }

QPolynomial poly(std::initializer_list<std::uint64_t> c) { return QPolynomial(c); }

}  // namespace

TEST_CASE("G2 worked example 2a1 + 2a2") {
  const auto rs = rs_of("G2");
  const Weight xi{2, 2};
  const auto expected = poly({0, 0, 2, 1, 1});
  CHECK(partition_tree_count(rs, xi) == expected);
  CHECK(partition_genfunc(rs, xi) == expected);
  CHECK(kostant_partition(rs, xi) == 4);
  CHECK(kostant_partition(rs, xi, Method::Tree) == 4);
}

TEST_CASE("G2 table values") {
  const auto rs = rs_of("G2");
  CHECK(partition_tree_count(rs, Weight{3, 2}) == poly({0, 1, 2, 2, 1, 1}));
  CHECK(partition_genfunc(rs, Weight{3, 2}) == poly({0, 1, 2, 2, 1, 1}));
  CHECK(partition_genfunc(rs, Weight{3, 0}) == poly({0, 0, 0, 1}));
  CHECK(kostant_partition(rs, Weight{3, 0}) == 1);
}

TEST_CASE("trivial and degenerate inputs") {
  const auto rs = rs_of("G2");
  CHECK(partition_tree_count(rs, Weight{0, 0}) == QPolynomial::one());
  CHECK(partition_genfunc(rs, Weight{0, 0}) == QPolynomial::one());
  CHECK(kostant_partition(rs, Weight{0, 0}) == 1);
  CHECK(partition_tree_count(rs, Weight{-1, 0}).is_zero());
  CHECK(partition_genfunc(rs, Weight{-1, 0}).is_zero());
  const Weight half(std::vector<Rational>{Rational(1, 2), Rational(0)});
  CHECK(partition_tree_count(rs, half).is_zero());
  CHECK(partition_genfunc(rs, half).is_zero());
  CHECK(partition_tree_list(rs, half).empty());
  CHECK_THROWS_AS(partition_genfunc(rs, Weight{1, 1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(partition_tree_count(rs, Weight{1}), DimensionMismatch);
}

TEST_CASE("F4 and E6 rows") {
  const auto f4 = rs_of("F4");
  CHECK(partition_tree_count(f4, Weight{0, 3, 2, 0}) == poly({0, 0, 0, 2, 1, 1}));
  CHECK(partition_genfunc(f4, Weight{2, 3, 4, 2}) == poly({0, 1, 7, 27, 53, 69, 59, 40, 20, 9, 3, 1}));
  const auto e6 = rs_of("E6");
  const auto row1 = poly({0, 1, 10, 45, 105, 150, 142, 97, 48, 18, 5, 1});
  CHECK(partition_genfunc(e6, Weight{1, 2, 2, 3, 2, 1}) == row1);
  CHECK(partition_tree_count(e6, Weight{1, 2, 2, 3, 2, 1}) == row1);
}

TEST_CASE("partition listing") {
  const auto rs = rs_of("G2");
  const auto zero = partition_tree_list(rs, Weight{0, 0});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].size() == 0);

  const auto simple = partition_tree_list(rs, Weight{1, 0});
  REQUIRE(simple.size() == 1);
  CHECK(simple[0].mults == std::vector<std::uint32_t>{1, 0, 0, 0, 0, 0});
  CHECK(format_partition(rs, simple[0]) == "α_1");

  const auto four = partition_tree_list(rs, Weight{2, 2});
  REQUIRE(four.size() == 4);
  for (const auto& p : four) {
    Weight sum = Weight::zero(2);
    for (std::size_t k = 0; k < p.mults.size(); ++k) sum += Rational(p.mults[k]) * rs.positive_roots[k];
    CHECK(sum == Weight{2, 2});
  }
  // The tree branches on alpha_1 first, so the leftmost leaf uses only alpha_1 + alpha_2.
  CHECK(four.front().mults == std::vector<std::uint32_t>{0, 0, 2, 0, 0, 0});
  CHECK(format_partition(rs, four.front()) == "2(α_1 + α_2)");
}

TEST_CASE("listing agrees with counting") {
  std::mt19937_64 rng(11);
  for (const char* name : {"A3", "B3", "C3", "G2", "B2"}) {
    const auto rs = rs_of(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = oracle::random_vector(rng, static_cast<std::size_t>(rs.rank()), 4);
      const Weight xi = Weight::from_integers(v);
      const auto list = partition_tree_list(rs, xi);
      QPolynomial from_list;
      for (const auto& p : list) from_list.add(p.size(), 1);
      CHECK(from_list == partition_tree_count(rs, xi));
    }
  }
}

TEST_CASE("both algorithms match the brute-force oracle on small ranks") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(name);
    const auto rs = rs_of(name);
    const auto roots = oracle::positive_roots(rs.cartan.rows());
    for (int trial = 0; trial < 15; ++trial) {
      auto v = oracle::random_vector(rng, static_cast<std::size_t>(rs.rank()), 4);
      while (oracle::height(v) > 8) v[static_cast<std::size_t>(trial) % v.size()] = 0;
      CAPTURE(v);
      const Weight xi = Weight::from_integers(v);
      const auto expected = oracle::brute_partition(roots, v);
      CHECK(coeffs(partition_tree_count(rs, xi)) == expected);
      CHECK(coeffs(partition_genfunc(rs, xi)) == expected);
    }
  }
}

TEST_CASE("box table") {
  const auto rs = rs_of("B3");
  const std::vector<std::int64_t> corner{2, 3, 4};
  const BoxTable serial(rs, corner, Kernel::Serial);
  const BoxTable parallel(rs, corner, Kernel::Parallel);
  CHECK(serial.data() == parallel.data());
  CHECK(serial.cell_count() == 3 * 4 * 5);
  CHECK(serial.contains(Weight{2, 3, 4}));
  CHECK_FALSE(serial.contains(Weight{3, 0, 0}));
  CHECK(serial.at(Weight{1, 2, 2}) == partition_tree_count(rs, Weight{1, 2, 2}));
  CHECK(serial.at(Weight{-1, 0, 0}).is_zero());
  CHECK_THROWS_AS(serial.at(Weight{3, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(BoxTable(rs, corner, Kernel::Serial, 64), BoxTooLarge);
  CHECK_THROWS_AS(BoxTable(rs, {1, 1}, Kernel::Serial), DimensionMismatch);

  const std::vector<Weight> batch{Weight{1, 0, 4}, Weight{0, 3, 1}, Weight{-1, 5, 0}};
  CHECK(BoxTable::covering_corner(batch) == std::vector<std::int64_t>{1, 3, 4});
}

TEST_CASE("method names") {
  CHECK(parse_method("tree") == Method::Tree);
  CHECK(parse_method("genfunc") == Method::GenFunc);
  CHECK(to_string(Method::Tree) == "tree");
  CHECK_THROWS_AS(parse_method("fast"), std::invalid_argument);
}
