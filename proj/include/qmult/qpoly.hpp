#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmult {

using BigInt = boost::multiprecision::cpp_int;

class CoefficientOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Polynomial in q with nonnegative coefficients; coeffs()[i] is the q^i coefficient.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<std::uint64_t> coeffs);
  QPolynomial(std::initializer_list<std::uint64_t> coeffs) : QPolynomial(std::vector<std::uint64_t>(coeffs)) {}

  static QPolynomial one() { return QPolynomial({1}); }

  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; -1 for zero.
  int low_degree() const;
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  /// Value at q = 1.
  BigInt at_one() const;

  /// Adds count to the q^i coefficient. Throws CoefficientOverflow past 2^64 - 1.
  void add(std::size_t i, std::uint64_t count);

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  std::vector<std::uint64_t> c_;
};

/// Integer polynomial in q for signed sums such as m_q.
class SignedQPolynomial {
 public:
  SignedQPolynomial() = default;
  explicit SignedQPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  BigInt at_one() const;
  bool all_nonnegative() const;

  /// this += sign * p
  void accumulate(const QPolynomial& p, int sign);

  friend bool operator==(const SignedQPolynomial&, const SignedQPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

enum class PolyStyle {
  /// "q^1 + 2q^2 + q^5"
  Table,
  /// "q + 2q^2 + q^11"
  Compact,
  /// "q^{1} + 2q^{2} + q^{5}"
  Latex,
  /// "q + 2q^2 + q^{11}": braces only around multi-digit exponents
  LatexCompact,
};

std::string format_poly(const QPolynomial& p, PolyStyle style = PolyStyle::Table);
std::string format_poly(const SignedQPolynomial& p, PolyStyle style = PolyStyle::Compact);

}  // namespace qmult
