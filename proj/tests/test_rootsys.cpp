#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qmult/rootsys.hpp"

using namespace qmult;

namespace {

oracle::Matrix matrix_of(const CartanMatrix& a) {
  oracle::Matrix m(static_cast<std::size_t>(a.rank()), std::vector<int>(static_cast<std::size_t>(a.rank())));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
  return m;
}

std::vector<oracle::IVec> library_roots(const RootSystem& rs) {
  std::vector<oracle::IVec> out;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) out.push_back(rs.positive_roots[k].integer_coeffs());
  return out;
}

}  // namespace

TEST_CASE("type parsing and admissibility") {
  CHECK(parse_lie_type("G2") == LieType{Family::G, 2});
  CHECK(parse_lie_type("e8") == LieType{Family::E, 8});
  CHECK(parse_lie_type("A10") == LieType{Family::A, 10});
  CHECK(to_string(LieType{Family::D, 5}) == "D5");
  for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "", "G", "2", "A-1", "Gx"})
    CHECK_THROWS_AS(parse_lie_type(bad), InadmissibleType);
  CHECK_THROWS_AS(build_root_system(LieType{Family::F, 5}), InadmissibleType);
}

TEST_CASE("cartan matrices") {
  using M = std::vector<std::vector<int>>;
  CHECK(cartan_matrix(parse_lie_type("G2")).rows() == M{{2, -3}, {-1, 2}});
  CHECK(cartan_matrix(parse_lie_type("A1")).rows() == M{{2}});
  CHECK(cartan_matrix(parse_lie_type("A2")).rows() == M{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(parse_lie_type("B3")).rows() == M{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(cartan_matrix(parse_lie_type("C3")).rows() == M{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(cartan_matrix(parse_lie_type("F4")).rows() == M{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
  CHECK(cartan_matrix(parse_lie_type("D4")).rows() ==
        M{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  // E6: 1-3-4-5-6 chain with 2 attached to 4.
  const auto e6 = cartan_matrix(parse_lie_type("E6"));
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (e6(i, j) != 0) edges.insert({i + 1, j + 1});
  CHECK(edges == std::set<std::pair<int, int>>{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});

  for (const auto& t : all_types_up_to_rank(8)) {
    const auto a = cartan_matrix(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) {
        if (i == j) {
          CHECK(a(i, j) == 2);
        } else {
          CHECK(a(i, j) <= 0);
          CHECK(a(i, j) >= -3);
          CHECK((a(i, j) == 0) == (a(j, i) == 0));
        }
      }
  }
}

TEST_CASE("G2 positive roots, rho and highest root") {
  const auto rs = build_root_system(parse_lie_type("G2"));
  std::vector<Weight> expected{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  CHECK(rs.positive_roots == expected);
  CHECK(rs.rho == Weight{5, 3});
  CHECK(rs.highest_root == Weight{3, 2});
}

TEST_CASE("A1 is the rank-one case") {
  const auto rs = build_root_system(parse_lie_type("A1"));
  CHECK(rs.positive_roots == std::vector<Weight>{Weight{1}});
  CHECK(rs.rho == Weight(std::vector<Rational>{Rational(1, 2)}));
  CHECK(rs.highest_root == Weight{1});
}

TEST_CASE("positive roots agree with reflection closure for every type up to rank 8") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(to_string(t));
    const auto rs = build_root_system(t);
    auto lib = library_roots(rs);
    auto ref = oracle::positive_roots(matrix_of(rs.cartan));
    CHECK(lib.size() == oracle::root_count(static_cast<char>(t.family), t.rank));
    CHECK(positive_root_count(t) == lib.size());
    // Simple roots come first, then nondecreasing height.
    for (int i = 0; i < t.rank; ++i) {
      oracle::IVec e(static_cast<std::size_t>(t.rank), 0);
      e[static_cast<std::size_t>(i)] = 1;
      CHECK(lib[static_cast<std::size_t>(i)] == e);
    }
    for (std::size_t k = 1; k < lib.size(); ++k) CHECK(oracle::height(lib[k - 1]) <= oracle::height(lib[k]));
    CHECK(lib.back() == rs.highest_root.integer_coeffs());
    std::sort(lib.begin(), lib.end());
    CHECK(lib == ref);
  }
}

TEST_CASE("highest roots") {
  CHECK(build_root_system(parse_lie_type("E8")).highest_root == Weight{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(build_root_system(parse_lie_type("E7")).highest_root == Weight{2, 2, 3, 4, 3, 2, 1});
  CHECK(build_root_system(parse_lie_type("E6")).highest_root == Weight{1, 2, 2, 3, 2, 1});
  CHECK(build_root_system(parse_lie_type("F4")).highest_root == Weight{2, 3, 4, 2});
  CHECK(build_root_system(parse_lie_type("B3")).highest_root == Weight{1, 2, 2});
  CHECK(build_root_system(parse_lie_type("C3")).highest_root == Weight{2, 2, 1});
  CHECK(build_root_system(parse_lie_type("D5")).highest_root == Weight{1, 2, 2, 1, 1});
  const auto e8 = build_root_system(parse_lie_type("E8"));
  CHECK(weight_height(e8.highest_root) == Rational(29));
}

TEST_CASE("rho is the half sum and pairs to 1 with every simple coroot") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(to_string(t));
    const auto rs = build_root_system(t);
    Weight sum = Weight::zero(t.rank);
    for (const auto& r : rs.positive_roots) sum += r;
    CHECK(Rational(1, 2) * sum == rs.rho);
    for (int i = 0; i < t.rank; ++i) CHECK(rs.coroot_pairing(rs.rho, i) == Rational(1));
  }
}

TEST_CASE("weight height and classification") {
  CHECK(weight_height(Weight{2, 2}) == Rational(4));
  CHECK(weight_height(Weight{0, 0}) == Rational(0));
  CHECK(weight_height(Weight{3, 2}) == Rational(5));
  CHECK(classify_weight(Weight{2, 2}) == WeightClass::NonnegativeIntegral);
  CHECK(classify_weight(Weight{-1, 0}) == WeightClass::HasNegative);
  CHECK(classify_weight(Weight(std::vector<Rational>{Rational(1, 2), Rational(0)})) == WeightClass::HasFraction);
  CHECK(classify_weight(Weight(std::vector<Rational>{Rational(-1, 2), Rational(0)})) == WeightClass::HasFraction);
}

TEST_CASE("weight arithmetic") {
  Weight a{1, 2};
  const Weight b{3, -1};
  CHECK(a + b == Weight{4, 1});
  CHECK(a - b == Weight{-2, 3});
  CHECK(Rational(2) * a == Weight{2, 4});
  a += b;
  CHECK(a == Weight{4, 1});
  CHECK_THROWS_AS(a += Weight{1}, DimensionMismatch);
  CHECK(Weight{0, 0}.is_zero());
  CHECK_THROWS_AS(Weight(std::vector<Rational>{Rational(1, 3)}).integer_coeffs(), std::domain_error);
}

TEST_CASE("omega basis round trip") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(to_string(t));
    const auto rs = build_root_system(t);
    const auto omega = to_omega_basis(rs, rs.highest_root);
    for (const auto& c : omega) CHECK(c.denominator() == 1);
    CHECK(from_omega_basis(rs, omega) == rs.highest_root);
    CHECK(from_omega_basis(rs, to_omega_basis(rs, rs.rho)) == rs.rho);
  }
  const auto g2 = build_root_system(parse_lie_type("G2"));
  CHECK(to_omega_basis(g2, g2.highest_root) == std::vector<Rational>{Rational(0), Rational(1)});
  const auto a2 = build_root_system(parse_lie_type("A2"));
  CHECK(from_omega_basis(a2, {Rational(1), Rational(0)}) ==
        Weight(std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
}

TEST_CASE("dominance") {
  const auto g2 = build_root_system(parse_lie_type("G2"));
  CHECK(is_dominant_integral(g2, g2.highest_root));
  CHECK(is_dominant_integral(g2, Weight{0, 0}));
  CHECK_FALSE(is_dominant_integral(g2, Weight{1, 0}));
  CHECK(dominated_by(Weight{1, 1}, Weight{3, 2}));
  CHECK_FALSE(dominated_by(Weight{4, 0}, Weight{3, 2}));
}

TEST_CASE("weight formatting") {
  CHECK(format_weight(Weight{3, 2}) == "3α_1 + 2α_2");
  CHECK(format_weight(Weight{0, 1}) == "α_2");
  CHECK(format_weight(Weight{0, 0}) == "0");
  CHECK(format_weight(Weight{1, -2}) == "α_1 - 2α_2");
  CHECK(format_weight(Weight(std::vector<Rational>{Rational(1, 2)})) == "(1/2)α_1");
  CHECK(format_weight_latex(Weight{3, 2}) == "3\\alpha_{1} + 2\\alpha_{2}");
  CHECK(format_weight_latex(Weight{0, 0, 3, 0}) == "3\\alpha_{3}");
}
