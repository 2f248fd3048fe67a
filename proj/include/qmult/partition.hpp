#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmult/qpoly.hpp"
#include "qmult/rootsys.hpp"

namespace qmult {

class BoxTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { Tree, GenFunc };

std::string to_string(Method m);
/// "tree" or "genfunc"; throws std::invalid_argument otherwise.
Method parse_method(const std::string& text);

/// How many times each positive root is used, indexed like RootSystem::positive_roots.
struct PartitionMultiset {
  std::vector<std::uint32_t> mults;

  /// Number of roots used, counted with multiplicity.
  std::uint64_t size() const;
  friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;
};

/// q-analog of Kostant's partition function by depth-first walk of the partition tree.
/// The walk takes the roots highest first and closes a branch as soon as only
/// simple roots remain. Zero for any weight that is not nonnegative integral.
QPolynomial partition_tree_count(const RootSystem& rs, const Weight& xi);

/// Every partition of xi, in depth-first order of the tree that branches on
/// the roots in their canonical order (simple roots first).
std::vector<PartitionMultiset> partition_tree_list(const RootSystem& rs, const Weight& xi);

/// Same value as partition_tree_count, from the truncated generating function
/// prod_k 1 / (1 - q x^{r_k}) evaluated by dynamic programming over the box [0, xi].
QPolynomial partition_genfunc(const RootSystem& rs, const Weight& xi);

/// Kostant's partition function: the chosen method evaluated at q = 1.
BigInt kostant_partition(const RootSystem& rs, const Weight& xi, Method method = Method::GenFunc);

std::string format_partition(const RootSystem& rs, const PartitionMultiset& p);

enum class Kernel { Serial, Parallel };

/// Parallel only when more than one OpenMP thread is available; the line-split
/// kernel costs more than the plain scan on a single thread.
Kernel effective_kernel(Kernel requested);

/// Default memory cap for BoxTable coefficient storage.
inline constexpr std::size_t kDefaultBoxBytes = std::size_t{1} << 30;

/// q-partition values for every exponent vector in the box prod_i [0, corner_i].
///
/// Built once, then read-only. Cell v holds the coefficient of x^v in the
/// truncated product, one q-polynomial of length height(v) + 1 per cell.
class BoxTable {
 public:
  BoxTable(const RootSystem& rs, const std::vector<std::int64_t>& corner, Kernel kernel = Kernel::Parallel,
           std::size_t max_bytes = kDefaultBoxBytes);

  /// Box corner covering every weight in the batch (componentwise max).
  static std::vector<std::int64_t> covering_corner(const std::vector<Weight>& batch);

  const std::vector<std::int64_t>& corner() const { return corner_; }
  std::size_t cell_count() const { return cells_; }
  bool contains(const Weight& xi) const;
  /// Zero for weights that are not nonnegative integral; std::out_of_range outside the box.
  QPolynomial at(const Weight& xi) const;
  /// Raw coefficients, for kernel comparisons.
  const std::vector<std::uint64_t>& data() const { return data_; }

 private:
  void fold_root_serial(const std::vector<int>& root, int root_height);
  void fold_root_parallel(const std::vector<int>& root, int root_height);
  std::size_t flat(const std::vector<std::int64_t>& v) const;

  int rank_ = 0;
  std::vector<std::int64_t> corner_;
  std::vector<std::size_t> strides_;
  std::size_t cells_ = 1;
  std::size_t width_ = 1;  // coefficients stored per cell
  std::vector<std::uint64_t> data_;
};

}  // namespace qmult
