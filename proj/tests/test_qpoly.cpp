#include <doctest.h>

#include <limits>

#include "qmult/qpoly.hpp"

using namespace qmult;

TEST_CASE("q-polynomials trim and evaluate") {
  const QPolynomial p({0, 1, 2, 2, 1, 1, 0, 0});
  CHECK(p.coeffs().size() == 6);
  CHECK(p.degree() == 5);
  CHECK(p.low_degree() == 1);
  CHECK(p.at_one() == 7);
  CHECK(p[9] == 0);
  CHECK(QPolynomial({0, 0}).is_zero());
  CHECK(QPolynomial().degree() == -1);
  CHECK(QPolynomial::one().at_one() == 1);
}

TEST_CASE("checked coefficient addition") {
  QPolynomial p;
  p.add(3, 2);
  CHECK(p == QPolynomial({0, 0, 0, 2}));
  p.add(3, std::numeric_limits<std::uint64_t>::max() - 2);
  CHECK(p[3] == std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(p.add(3, 1), CoefficientOverflow);
}

TEST_CASE("signed accumulation") {
  SignedQPolynomial s;
  s.accumulate(QPolynomial({0, 1, 2, 2, 1, 1}), 1);
  s.accumulate(QPolynomial({0, 0, 2, 1, 1}), -1);
  s.accumulate(QPolynomial({0, 0, 0, 1}), -1);
  CHECK(s == SignedQPolynomial({0, 1, 0, 0, 0, 1}));
  CHECK(s.all_nonnegative());
  CHECK(s.at_one() == 2);
  s.accumulate(QPolynomial({0, 0, 0, 0, 0, 1}), -1);
  s.accumulate(QPolynomial({0, 1}), -1);
  CHECK(s.is_zero());
  s.accumulate(QPolynomial({1}), -1);
  CHECK_FALSE(s.all_nonnegative());
}

TEST_CASE("signed accumulation does not overflow 64 bits") {
  SignedQPolynomial s;
  const auto big = std::numeric_limits<std::uint64_t>::max();
  s.accumulate(QPolynomial({big}), 1);
  s.accumulate(QPolynomial({big}), 1);
  CHECK(s[0] == BigInt(big) * 2);
}

TEST_CASE("polynomial rendering") {
  const QPolynomial p({0, 1, 2, 2, 1, 1});
  CHECK(format_poly(p, PolyStyle::Table) == "q^1 + 2q^2 + 2q^3 + q^4 + q^5");
  CHECK(format_poly(p, PolyStyle::Latex) == "q^{1} + 2q^{2} + 2q^{3} + q^{4} + q^{5}");
  CHECK(format_poly(QPolynomial({0, 0, 2, 1, 1}), PolyStyle::Table) == "2q^2 + q^3 + q^4");
  CHECK(format_poly(QPolynomial::one(), PolyStyle::Table) == "1");
  CHECK(format_poly(QPolynomial(), PolyStyle::Table) == "0");
  CHECK(format_poly(QPolynomial({3, 0, 1}), PolyStyle::Compact) == "3 + q^2");

  SignedQPolynomial m({0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1});
  CHECK(format_poly(m, PolyStyle::Compact) == "q + q^5 + q^7 + q^11");
  CHECK(format_poly(m, PolyStyle::LatexCompact) == "q + q^5 + q^7 + q^{11}");
  CHECK(format_poly(SignedQPolynomial({1}), PolyStyle::Compact) == "1");
  CHECK(format_poly(SignedQPolynomial({0, -2, 1}), PolyStyle::Compact) == "-2q + q^2");
}
