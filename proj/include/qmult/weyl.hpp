#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmult/qpoly.hpp"
#include "qmult/rootsys.hpp"

namespace qmult {

class OrderExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer matrix acting on simple-root coordinate vectors.
///
/// Column j holds the image of alpha_j, which is always a root, so every entry
/// is bounded by the largest highest-root coefficient (6, in E8) and fits in int8.
class WeylMatrix {
 public:
  WeylMatrix() = default;
  static WeylMatrix identity(int rank);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * kMaxRank + j)]; }
  void set(int i, int j, int value);

  /// Image of alpha_j has a negative coefficient.
  bool column_negative(int j) const;
  /// Right multiplication by s_i, computed column-wise in O(rank^2).
  WeylMatrix times_simple(const CartanMatrix& cartan, int i) const;
  WeylMatrix operator*(const WeylMatrix& other) const;
  Weight apply(const Weight& w) const;
  std::int64_t determinant() const;
  std::size_t hash() const;
  std::vector<int> row_major() const;

  friend bool operator==(const WeylMatrix&, const WeylMatrix&) = default;

 private:
  int rank_ = 0;
  std::array<std::int8_t, kMaxRank * kMaxRank> a_{};
};

struct WeylMatrixHash {
  std::size_t operator()(const WeylMatrix& m) const { return m.hash(); }
};

/// A Weyl group element with its canonical reduced word and Coxeter length.
///
/// Word letters are 0-based simple-reflection indices; the element equals
/// s_{word[0]} s_{word[1]} ... acting on the left of column vectors.
struct WeylElement {
  WeylMatrix matrix;
  std::vector<std::uint8_t> word;
  int length = 0;

  int sign() const { return length % 2 == 0 ? 1 : -1; }
};

/// One term of the alternating sum: sigma with xi = sigma(lambda + rho) - (rho + mu).
struct AlternationRecord {
  WeylElement element;
  Weight xi;
  QPolynomial pq;
  int sign = 1;
  /// Position (in the returned list) of the member this one extends; empty for the identity.
  std::optional<std::size_t> parent;
  /// 0-based simple reflection appended to the parent; -1 for the identity.
  int generator = -1;
};

WeylElement identity_element(const RootSystem& rs);

/// i is 0-based. Throws std::out_of_range when i is not a node of the diagram.
WeylElement simple_reflection(const RootSystem& rs, int i);

/// Throws DimensionMismatch when ranks differ.
Weight apply(const WeylElement& e, const Weight& w);

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

/// Builds the element s_{word[0]} ... s_{word[n-1]} (0-based letters, need not be reduced).
WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word);

/// Number of positive roots sent to negative roots.
int coxeter_length(const RootSystem& rs, const WeylMatrix& m);

/// Reduced word obtained by repeatedly stripping the smallest right descent.
std::vector<std::uint8_t> canonical_word(const RootSystem& rs, const WeylMatrix& m);

/// Wraps a matrix with its canonical word and length.
WeylElement make_element(const RootSystem& rs, const WeylMatrix& m);

/// |W| from the classical formulas.
std::uint64_t weyl_group_order(const LieType& t);

/// Default cap for enumerate_group: large enough for every rank-6 group (E6 has 51840).
inline constexpr std::uint64_t kDefaultMaxGroupOrder = 51840;

/// Whole group in BFS (= length) order. Throws OrderExceeded when |W| > max_order.
std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::uint64_t max_order = kDefaultMaxGroupOrder);

/// xi(sigma) = sigma(lambda + rho) - (rho + mu).
Weight alternation_xi(const RootSystem& rs, const WeylMatrix& sigma, const Weight& lambda, const Weight& mu);

/// Weyl alternation set by right-extension worklist search from the identity.
/// Records are sorted by (length, canonical word); pq is left empty.
std::vector<AlternationRecord> alternation_set(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Reference filter {sigma in group : xi(sigma) nonnegative integral}, kept in group order.
std::vector<AlternationRecord> alternation_filter_serial(const RootSystem& rs, const std::vector<WeylElement>& group,
                                                         const Weight& lambda, const Weight& mu);
/// OpenMP version of alternation_filter_serial; same output.
std::vector<AlternationRecord> alternation_filter_parallel(const RootSystem& rs, const std::vector<WeylElement>& group,
                                                           const Weight& lambda, const Weight& mu);

/// "s_3s_4s_3s_1"; the identity renders as "1".
std::string format_word(const std::vector<std::uint8_t>& word);

/// Parses "s_3s_4s_3s_1", "s3s4", or "1" into 0-based letters.
std::vector<int> parse_word(const std::string& text);

}  // namespace qmult
