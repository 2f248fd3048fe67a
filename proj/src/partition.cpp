#include "qmult/partition.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmult {

std::string to_string(Method m) { return m == Method::Tree ? "tree" : "genfunc"; }

Method parse_method(const std::string& text) {
  if (text == "tree") return Method::Tree;
  if (text == "genfunc") return Method::GenFunc;
  throw std::invalid_argument("unknown method '" + text + "' (expected tree or genfunc)");
}

Kernel effective_kernel(Kernel requested) {
#ifdef _OPENMP
  if (requested == Kernel::Parallel && omp_get_max_threads() > 1) return Kernel::Parallel;
#else
  (void)requested;
#endif
  return Kernel::Serial;
}

std::uint64_t PartitionMultiset::size() const { return std::accumulate(mults.begin(), mults.end(), std::uint64_t{0}); }

namespace {

using Residual = std::array<std::int64_t, kMaxRank>;

/// Depth-first walk of the partition tree. Nodes are never stored; a branch
/// whose residual hits zero is a partition, and a branch that runs out of
/// roots or cannot be completed simply contributes nothing.
class TreeWalker {
 public:
  TreeWalker(const RootSystem& rs, const Weight& xi) : rank_(rs.rank()) {
    const auto c = xi.integer_coeffs();
    for (int i = 0; i < rank_; ++i) start_[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
      Residual r{};
      const auto rc = rs.root_coeffs(k);
      for (int i = 0; i < rank_; ++i) r[static_cast<std::size_t>(i)] = rc[static_cast<std::size_t>(i)];
      roots_.push_back(r);
    }
    // support_[k]: coordinates reachable by roots k, k+1, ...
    support_.assign(roots_.size() + 1, 0u);
    for (std::size_t k = roots_.size(); k-- > 0;) {
      unsigned mask = support_[k + 1];
      for (int i = 0; i < rank_; ++i)
        if (roots_[k][static_cast<std::size_t>(i)] > 0) mask |= 1u << i;
      support_[k] = mask;
    }
  }

  template <typename Visit>
  void walk(Visit&& visit) {
    std::vector<std::uint32_t> used(roots_.size(), 0);
    descend(0, start_, 0, used, visit);
  }

 private:
  bool is_zero(const Residual& r) const {
    for (int i = 0; i < rank_; ++i)
      if (r[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  bool coverable(const Residual& r, std::size_t k) const {
    for (int i = 0; i < rank_; ++i)
      if (r[static_cast<std::size_t>(i)] > 0 && !(support_[k] & (1u << i))) return false;
    return true;
  }

  template <typename Visit>
  void descend(std::size_t k, const Residual& residual, std::uint64_t count, std::vector<std::uint32_t>& used,
               Visit& visit) {
    if (is_zero(residual)) {
      visit(count, used);
      return;
    }
    if (k == roots_.size() || !coverable(residual, k)) return;
    const Residual& root = roots_[k];
    Residual next = residual;
    for (std::uint32_t n = 0;; ++n) {
      used[k] = n;
      descend(k + 1, next, count + n, used, visit);
      bool ok = true;
      for (int i = 0; i < rank_; ++i) {
        auto& c = next[static_cast<std::size_t>(i)];
        c -= root[static_cast<std::size_t>(i)];
        ok = ok && c >= 0;
      }
      if (!ok) break;
    }
    used[k] = 0;
  }

  int rank_;
  Residual start_{};
  std::vector<Residual> roots_;
  std::vector<unsigned> support_;
};

/// Counting-only walk over the non-simple roots, highest first. Once only the
/// simple roots are left the completion is forced (one partition using
/// height(residual) roots), so every leaf is a partition and nothing is wasted
/// on dead branches.
class CountWalker {
 public:
  CountWalker(const RootSystem& rs, const Weight& xi) : rank_(rs.rank()) {
    const auto c = xi.integer_coeffs();
    for (int i = 0; i < rank_; ++i) start_[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    for (std::size_t k = rs.positive_roots.size(); k-- > static_cast<std::size_t>(rank_);) {
      Residual r{};
      const auto rc = rs.root_coeffs(k);
      int h = 0;
      for (int i = 0; i < rank_; ++i) {
        r[static_cast<std::size_t>(i)] = rc[static_cast<std::size_t>(i)];
        h += rc[static_cast<std::size_t>(i)];
      }
      roots_.push_back(r);
      heights_.push_back(h);
    }
  }

  QPolynomial count() {
    std::int64_t h = 0;
    for (int i = 0; i < rank_; ++i) h += start_[static_cast<std::size_t>(i)];
    counts_.assign(static_cast<std::size_t>(h + 1), 0);
    descend(0, start_, h, 0);
    QPolynomial out;
    for (std::size_t d = 0; d < counts_.size(); ++d)
      if (counts_[d] != 0) out.add(d, counts_[d]);
    return out;
  }

 private:
  void descend(std::size_t k, const Residual& residual, std::int64_t height, std::uint64_t used) {
    if (k == roots_.size()) {
      auto& slot = counts_[static_cast<std::size_t>(height) + used];
      if (slot == std::numeric_limits<std::uint64_t>::max()) throw CoefficientOverflow("partition count exceeds 64 bits");
      ++slot;
      return;
    }
    const Residual& root = roots_[k];
    std::int64_t most = std::numeric_limits<std::int64_t>::max();
    for (int i = 0; i < rank_; ++i) {
      const auto c = root[static_cast<std::size_t>(i)];
      if (c > 0) most = std::min(most, residual[static_cast<std::size_t>(i)] / c);
    }
    Residual next = residual;
    for (std::int64_t n = 0;; ++n) {
      descend(k + 1, next, height - n * heights_[k], used + static_cast<std::uint64_t>(n));
      if (n == most) break;
      for (int i = 0; i < rank_; ++i) next[static_cast<std::size_t>(i)] -= root[static_cast<std::size_t>(i)];
    }
  }

  int rank_;
  Residual start_{};
  std::vector<Residual> roots_;
  std::vector<std::int64_t> heights_;
  std::vector<std::uint64_t> counts_;
};

bool partitionable(const RootSystem& rs, const Weight& xi) {
  if (xi.rank() != rs.rank()) throw DimensionMismatch("weight rank does not match the root system");
  return classify_weight(xi) == WeightClass::NonnegativeIntegral;
}

}  // namespace

QPolynomial partition_tree_count(const RootSystem& rs, const Weight& xi) {
  if (!partitionable(rs, xi)) return {};
  return CountWalker(rs, xi).count();
}

std::vector<PartitionMultiset> partition_tree_list(const RootSystem& rs, const Weight& xi) {
  if (!partitionable(rs, xi)) return {};
  TreeWalker walker(rs, xi);
  std::vector<PartitionMultiset> out;
  walker.walk([&](std::uint64_t, const std::vector<std::uint32_t>& used) { out.push_back({used}); });
  return out;
}

QPolynomial partition_genfunc(const RootSystem& rs, const Weight& xi) {
  if (!partitionable(rs, xi)) return {};
  BoxTable table(rs, xi.integer_coeffs());
  return table.at(xi);
}

BigInt kostant_partition(const RootSystem& rs, const Weight& xi, Method method) {
  return (method == Method::Tree ? partition_tree_count(rs, xi) : partition_genfunc(rs, xi)).at_one();
}

std::string format_partition(const RootSystem& rs, const PartitionMultiset& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.mults.size(); ++k) {
    if (p.mults[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string root = format_weight(rs.positive_roots[k]);
    const bool compound = root.find(' ') != std::string::npos || root.rfind("α", 0) != 0;
    if (p.mults[k] != 1) os << p.mults[k];
    if (compound || p.mults[k] != 1)
      os << "(" << root << ")";
    else
      os << root;
  }
  return first ? "0" : os.str();
}

BoxTable::BoxTable(const RootSystem& rs, const std::vector<std::int64_t>& corner, Kernel kernel, std::size_t max_bytes)
    : rank_(rs.rank()), corner_(corner) {
  if (static_cast<int>(corner.size()) != rank_) throw DimensionMismatch("box corner rank does not match the root system");
  strides_.assign(static_cast<std::size_t>(rank_), 1);
  std::int64_t height = 0;
  const std::size_t limit = max_bytes / sizeof(std::uint64_t);
  for (int i = rank_ - 1; i >= 0; --i) {
    const auto extent = corner[static_cast<std::size_t>(i)];
    if (extent < 0) throw std::invalid_argument("box corner must be nonnegative");
    strides_[static_cast<std::size_t>(i)] = cells_;
    if (cells_ > limit / static_cast<std::size_t>(extent + 1)) throw BoxTooLarge("partition box is too large");
    cells_ *= static_cast<std::size_t>(extent + 1);
    height += extent;
  }
  width_ = static_cast<std::size_t>(height) + 1;
  if (cells_ > limit / width_)
    throw BoxTooLarge("partition box needs " + std::to_string(cells_) + " cells x " + std::to_string(width_) +
                      " coefficients, over the memory cap");
  data_.assign(cells_ * width_, 0);
  data_[0] = 1;

  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const auto root = rs.root_coeffs(k);
    bool fits = true;
    for (int i = 0; i < rank_; ++i) fits = fits && root[static_cast<std::size_t>(i)] <= corner_[static_cast<std::size_t>(i)];
    if (!fits) continue;
    const int h = std::accumulate(root.begin(), root.end(), 0);
    if (kernel == Kernel::Serial)
      fold_root_serial(root, h);
    else
      fold_root_parallel(root, h);
  }
}

// One factor 1 + q x^r + q^2 x^{2r} + ... folded in as an unbounded knapsack:
// cell[v] += q * cell[v - r], scanning v in increasing lexicographic order so
// cell[v - r] already includes every use of r.
void BoxTable::fold_root_serial(const std::vector<int>& root, int root_height) {
  std::size_t offset = 0;
  for (int i = 0; i < rank_; ++i) offset += static_cast<std::size_t>(root[static_cast<std::size_t>(i)]) * strides_[static_cast<std::size_t>(i)];
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank_), 0);
  std::int64_t height = 0;
  bool overflow = false;
  for (std::size_t f = 0; f < cells_; ++f) {
    bool inside = true;
    for (int i = 0; i < rank_ && inside; ++i) inside = v[static_cast<std::size_t>(i)] >= root[static_cast<std::size_t>(i)];
    if (inside) {
      std::uint64_t* dst = &data_[f * width_];
      const std::uint64_t* src = &data_[(f - offset) * width_];
      const auto top = static_cast<std::size_t>(height - root_height);
      for (std::size_t d = 0; d <= top; ++d) overflow |= __builtin_add_overflow(dst[d + 1], src[d], &dst[d + 1]);
    }
    for (int i = rank_ - 1; i >= 0; --i) {
      auto& c = v[static_cast<std::size_t>(i)];
      if (c < corner_[static_cast<std::size_t>(i)]) {
        ++c;
        ++height;
        break;
      }
      height -= c;
      c = 0;
    }
  }
  if (overflow) throw CoefficientOverflow("partition count exceeds 64 bits");
}

// Cells split into disjoint lines v0, v0 + r, v0 + 2r, ... where v0 - r lies
// outside the box. Each line is a sequential prefix recurrence; lines are
// independent, so they run in parallel.
void BoxTable::fold_root_parallel(const std::vector<int>& root, int root_height) {
  std::size_t offset = 0;
  for (int i = 0; i < rank_; ++i) offset += static_cast<std::size_t>(root[static_cast<std::size_t>(i)]) * strides_[static_cast<std::size_t>(i)];
  const auto cells = static_cast<std::int64_t>(cells_);
  int overflow = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(| : overflow)
  for (std::int64_t f = 0; f < cells; ++f) {
    std::array<std::int64_t, kMaxRank> v{};
    std::size_t rest = static_cast<std::size_t>(f);
    std::int64_t height = 0;
    bool start = false;
    for (int i = 0; i < rank_; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest / strides_[static_cast<std::size_t>(i)]);
      rest %= strides_[static_cast<std::size_t>(i)];
      height += v[static_cast<std::size_t>(i)];
      start = start || v[static_cast<std::size_t>(i)] < root[static_cast<std::size_t>(i)];
    }
    if (!start) continue;
    std::size_t cur = static_cast<std::size_t>(f);
    while (true) {
      bool fits = true;
      for (int i = 0; i < rank_ && fits; ++i)
        fits = v[static_cast<std::size_t>(i)] + root[static_cast<std::size_t>(i)] <= corner_[static_cast<std::size_t>(i)];
      if (!fits) break;
      const std::size_t next = cur + offset;
      std::uint64_t* dst = &data_[next * width_];
      const std::uint64_t* src = &data_[cur * width_];
      for (std::size_t d = 0; d <= static_cast<std::size_t>(height); ++d) {
        std::uint64_t sum;
        overflow |= __builtin_add_overflow(dst[d + 1], src[d], &sum) ? 1 : 0;
        dst[d + 1] = sum;
      }
      for (int i = 0; i < rank_; ++i) v[static_cast<std::size_t>(i)] += root[static_cast<std::size_t>(i)];
      height += root_height;
      cur = next;
    }
  }
  if (overflow) throw CoefficientOverflow("partition count exceeds 64 bits");
}

std::vector<std::int64_t> BoxTable::covering_corner(const std::vector<Weight>& batch) {
  std::vector<std::int64_t> corner;
  for (const auto& w : batch) {
    if (classify_weight(w) != WeightClass::NonnegativeIntegral) continue;
    const auto c = w.integer_coeffs();
    if (corner.empty()) corner.assign(c.size(), 0);
    if (c.size() != corner.size()) throw DimensionMismatch("batch weights of different rank");
    for (std::size_t i = 0; i < c.size(); ++i) corner[i] = std::max(corner[i], c[i]);
  }
  return corner;
}

std::size_t BoxTable::flat(const std::vector<std::int64_t>& v) const {
  std::size_t f = 0;
  for (int i = 0; i < rank_; ++i) f += static_cast<std::size_t>(v[static_cast<std::size_t>(i)]) * strides_[static_cast<std::size_t>(i)];
  return f;
}

bool BoxTable::contains(const Weight& xi) const {
  if (xi.rank() != rank_ || classify_weight(xi) != WeightClass::NonnegativeIntegral) return false;
  const auto c = xi.integer_coeffs();
  for (int i = 0; i < rank_; ++i)
    if (c[static_cast<std::size_t>(i)] > corner_[static_cast<std::size_t>(i)]) return false;
  return true;
}

QPolynomial BoxTable::at(const Weight& xi) const {
  if (xi.rank() != rank_) throw DimensionMismatch("weight rank does not match the box");
  if (classify_weight(xi) != WeightClass::NonnegativeIntegral) return {};
  if (!contains(xi)) throw std::out_of_range("weight lies outside the partition box");
  const auto c = xi.integer_coeffs();
  const auto h = static_cast<std::size_t>(std::accumulate(c.begin(), c.end(), std::int64_t{0}));
  const std::uint64_t* cell = &data_[flat(c) * width_];
  return QPolynomial(std::vector<std::uint64_t>(cell, cell + h + 1));
}

}  // namespace qmult
