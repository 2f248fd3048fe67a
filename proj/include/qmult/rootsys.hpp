#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace qmult {

using Rational = boost::rational<std::int64_t>;

/// Largest rank any admissible type can have (E8).
inline constexpr int kMaxRank = 8;

class InadmissibleType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie type such as A3 or E8.
struct LieType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Throws InadmissibleType unless (family, rank) names a simple Lie algebra.
void validate(const LieType& t);

/// Parses "G2", "e8", "A10". Throws InadmissibleType on anything else.
LieType parse_lie_type(std::string_view text);

std::string to_string(const LieType& t);

/// Coefficient vector in the simple-root basis. Exact rationals throughout.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  Weight(std::initializer_list<std::int64_t> coeffs);

  static Weight zero(int rank) { return Weight(std::vector<Rational>(static_cast<std::size_t>(rank))); }
  static Weight from_integers(const std::vector<std::int64_t>& coeffs);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_integral() const;
  /// Integer coefficients; throws std::domain_error if any coefficient is fractional.
  std::vector<std::int64_t> integer_coeffs() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& k, Weight w);
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Sum of the coefficients.
Rational weight_height(const Weight& w);

enum class WeightClass { NonnegativeIntegral, HasNegative, HasFraction };

/// HasFraction wins over HasNegative when both apply.
WeightClass classify_weight(const Weight& w);

/// Componentwise a <= b.
bool dominated_by(const Weight& a, const Weight& b);

/// Row-major square integer matrix, a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i).
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(int rank) : rank_(rank), a_(static_cast<std::size_t>(rank * rank), 0) {}

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * rank_ + j)]; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * rank_ + j)]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<int> a_;
};

/// Bourbaki numbering. E: 1-3-4-5-6-7-8 chain with 2 attached to 4.
/// D: 1-2-...-(r-2) chain with r-1 and r both attached to r-2.
/// B: alpha_r short. C: alpha_r long. F4: alpha_1, alpha_2 long. G2: alpha_1 short.
CartanMatrix cartan_matrix(const LieType& t);

/// Root-system data in the simple-root basis. Immutable after construction.
struct RootSystem {
  LieType lie_type;
  CartanMatrix cartan;
  /// Sorted by (height ascending, coefficient vector lexicographically descending),
  /// so the simple roots come first in index order and the highest root is last.
  std::vector<Weight> positive_roots;
  Weight rho;
  Weight highest_root;

  int rank() const { return lie_type.rank; }
  /// <w, alpha_i^vee> = sum_j a_ij w_j
  Rational coroot_pairing(const Weight& w, int i) const;
  /// Integer coefficients of positive root k (all nonnegative).
  std::vector<int> root_coeffs(std::size_t k) const;
};

RootSystem build_root_system(const LieType& t);

/// Number of positive roots from the classical closed forms.
std::size_t positive_root_count(const LieType& t);

/// Every simple Lie type with rank <= max_rank.
std::vector<LieType> all_types_up_to_rank(int max_rank);

/// True iff <w, alpha_i^vee> is a nonnegative integer for every i.
bool is_dominant_integral(const RootSystem& rs, const Weight& w);

/// Converts fundamental-weight coordinates to simple-root coordinates (A^{-1} m).
Weight from_omega_basis(const RootSystem& rs, const std::vector<Rational>& omega_coeffs);

/// Simple-root coordinates to fundamental-weight coordinates (A c).
std::vector<Rational> to_omega_basis(const RootSystem& rs, const Weight& w);

std::string format_rational(const Rational& r);
/// "3α_1 + 2α_2", "0" for the zero weight.
std::string format_weight(const Weight& w);
/// "3\alpha_{1} + 2\alpha_{2}"
std::string format_weight_latex(const Weight& w);

}  // namespace qmult
