#include "qmult/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace qmult {

WeylMatrix WeylMatrix::identity(int rank) {
  WeylMatrix m;
  m.rank_ = rank;
  for (int i = 0; i < rank; ++i) m.set(i, i, 1);
  return m;
}

void WeylMatrix::set(int i, int j, int value) {
  if (value < std::numeric_limits<std::int8_t>::min() || value > std::numeric_limits<std::int8_t>::max())
    throw std::out_of_range("Weyl matrix entry out of int8 range");
  a_[static_cast<std::size_t>(i * kMaxRank + j)] = static_cast<std::int8_t>(value);
}

bool WeylMatrix::column_negative(int j) const {
  for (int i = 0; i < rank_; ++i)
    if ((*this)(i, j) < 0) return true;
  return false;
}

WeylMatrix WeylMatrix::times_simple(const CartanMatrix& cartan, int i) const {
  // (M s_i) alpha_j = M alpha_j - a_ij M alpha_i
  WeylMatrix out = *this;
  for (int j = 0; j < rank_; ++j) {
    const int aij = cartan(i, j);
    if (aij == 0) continue;
    for (int k = 0; k < rank_; ++k) out.set(k, j, (*this)(k, j) - aij * (*this)(k, i));
  }
  return out;
}

WeylMatrix WeylMatrix::operator*(const WeylMatrix& other) const {
  if (rank_ != other.rank_) throw DimensionMismatch("Weyl matrices of different rank");
  WeylMatrix out;
  out.rank_ = rank_;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      int s = 0;
      for (int k = 0; k < rank_; ++k) s += (*this)(i, k) * other(k, j);
      out.set(i, j, s);
    }
  return out;
}

Weight WeylMatrix::apply(const Weight& w) const {
  if (w.rank() != rank_) throw DimensionMismatch("weight rank does not match Weyl element");
  std::vector<Rational> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    Rational s = 0;
    for (int j = 0; j < rank_; ++j) {
      const int a = (*this)(i, j);
      if (a != 0) s += Rational(a) * w[j];
    }
    out[static_cast<std::size_t>(i)] = s;
  }
  return Weight(std::move(out));
}

std::int64_t WeylMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  std::vector<std::int64_t> m(static_cast<std::size_t>(rank_ * rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[static_cast<std::size_t>(i * rank_ + j)] = (*this)(i, j);
  auto at = [&](int i, int j) -> std::int64_t& { return m[static_cast<std::size_t>(i * rank_ + j)]; };
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < rank_; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < rank_ && at(p, k) == 0) ++p;
      if (p == rank_) return 0;
      for (int j = 0; j < rank_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < rank_; ++i) {
      for (int j = k + 1; j < rank_; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return rank_ == 0 ? 1 : sign * at(rank_ - 1, rank_ - 1);
}

std::size_t WeylMatrix::hash() const {
  // FNV-1a over the used entries.
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      h ^= static_cast<std::uint8_t>((*this)(i, j));
      h *= 1099511628211ull;
    }
  return static_cast<std::size_t>(h);
}

std::vector<int> WeylMatrix::row_major() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out.push_back((*this)(i, j));
  return out;
}

WeylElement identity_element(const RootSystem& rs) { return {WeylMatrix::identity(rs.rank()), {}, 0}; }

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("simple reflection index " + std::to_string(i + 1) + " out of range");
  return {WeylMatrix::identity(rs.rank()).times_simple(rs.cartan, i), {static_cast<std::uint8_t>(i)}, 1};
}

Weight apply(const WeylElement& e, const Weight& w) { return e.matrix.apply(w); }

int coxeter_length(const RootSystem& rs, const WeylMatrix& m) {
  int count = 0;
  const int r = rs.rank();
  for (const auto& beta : rs.positive_roots) {
    // The image is a root, so one negative coefficient makes it negative.
    for (int i = 0; i < r; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < r; ++j) s += m(i, j) * beta[j].numerator();
      if (s < 0) {
        ++count;
        break;
      }
      if (s > 0) break;
    }
  }
  return count;
}

std::vector<std::uint8_t> canonical_word(const RootSystem& rs, const WeylMatrix& m) {
  std::vector<std::uint8_t> reversed;
  WeylMatrix cur = m;
  while (true) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (cur.column_negative(i)) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    reversed.push_back(static_cast<std::uint8_t>(descent));
    cur = cur.times_simple(rs.cartan, descent);
  }
  return {reversed.rbegin(), reversed.rend()};
}

WeylElement make_element(const RootSystem& rs, const WeylMatrix& m) {
  WeylElement e{m, canonical_word(rs, m), coxeter_length(rs, m)};
  return e;
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  if (a.matrix.rank() != rs.rank() || b.matrix.rank() != rs.rank())
    throw DimensionMismatch("Weyl elements from different root systems");
  return make_element(rs, a.matrix * b.matrix);
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylMatrix m = WeylMatrix::identity(rs.rank());
  for (int letter : word) {
    if (letter < 0 || letter >= rs.rank()) throw std::out_of_range("word letter out of range");
    m = m.times_simple(rs.cartan, letter);
  }
  return make_element(rs, m);
}

std::uint64_t weyl_group_order(const LieType& t) {
  validate(t);
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << r) * factorial(r);
    case Family::D: return (std::uint64_t{1} << (r - 1)) * factorial(r);
    case Family::E: return r == 6 ? 51840 : r == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

namespace {

/// Hash set of indices into a vector of matrices, with one reserved index
/// standing for a probe matrix so lookups need not insert.
class MatrixIndex {
 public:
  static constexpr std::uint32_t kProbe = std::numeric_limits<std::uint32_t>::max();

  explicit MatrixIndex(std::function<const WeylMatrix&(std::uint32_t)> at)
      : at_(std::move(at)), set_(16, Hash{this}, Eq{this}) {}

  void reserve(std::size_t n) { set_.reserve(n); }
  bool insert(std::uint32_t index) { return set_.insert(index).second; }
  std::optional<std::uint32_t> find(const WeylMatrix& m) {
    probe_ = &m;
    auto it = set_.find(kProbe);
    probe_ = nullptr;
    if (it == set_.end()) return std::nullopt;
    return *it;
  }

 private:
  const WeylMatrix& get(std::uint32_t i) const { return i == kProbe ? *probe_ : at_(i); }
  struct Hash {
    const MatrixIndex* self;
    std::size_t operator()(std::uint32_t i) const { return self->get(i).hash(); }
  };
  struct Eq {
    const MatrixIndex* self;
    bool operator()(std::uint32_t a, std::uint32_t b) const { return self->get(a) == self->get(b); }
  };

  std::function<const WeylMatrix&(std::uint32_t)> at_;
  const WeylMatrix* probe_ = nullptr;
  std::unordered_set<std::uint32_t, Hash, Eq> set_;
};

}  // namespace

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::uint64_t max_order) {
  const std::uint64_t order = weyl_group_order(rs.lie_type);
  if (order > max_order)
    throw OrderExceeded("|W(" + to_string(rs.lie_type) + ")| = " + std::to_string(order) + " exceeds the limit " +
                        std::to_string(max_order));

  std::vector<WeylElement> group;
  group.reserve(static_cast<std::size_t>(order));
  MatrixIndex index([&group](std::uint32_t i) -> const WeylMatrix& { return group[i].matrix; });
  index.reserve(static_cast<std::size_t>(order));
  group.push_back(identity_element(rs));
  index.insert(0);

  // Appending while scanning keeps the vector in breadth-first order, so
  // lengths are nondecreasing and every element of length l+1 appears after
  // all elements of length l.
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (group[k].matrix.column_negative(i)) continue;  // s_i is a descent: shorter element
      WeylElement next;
      next.matrix = group[k].matrix.times_simple(rs.cartan, i);
      next.length = group[k].length + 1;
      group.push_back(std::move(next));
      const auto idx = static_cast<std::uint32_t>(group.size() - 1);
      if (!index.insert(idx)) {
        group.pop_back();
        continue;
      }
      // Canonical word: word of (this * s_d) followed by d, d the smallest right descent.
      WeylElement& added = group.back();
      int d = 0;
      while (!added.matrix.column_negative(d)) ++d;
      std::vector<std::uint8_t> word;
      if (d == i) {
        word = group[k].word;
      } else {
        const WeylMatrix shorter = added.matrix.times_simple(rs.cartan, d);
        word = group[*index.find(shorter)].word;
      }
      word.push_back(static_cast<std::uint8_t>(d));
      group.back().word = std::move(word);
    }
  }
  if (group.size() != order) throw std::logic_error("enumerated group order disagrees with the closed form");
  return group;
}

Weight alternation_xi(const RootSystem& rs, const WeylMatrix& sigma, const Weight& lambda, const Weight& mu) {
  return sigma.apply(lambda + rs.rho) - (rs.rho + mu);
}

std::vector<AlternationRecord> alternation_set(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != rs.rank() || mu.rank() != rs.rank())
    throw DimensionMismatch("lambda/mu rank does not match the root system");
  const Weight shifted = lambda + rs.rho;
  const Weight target = rs.rho + mu;

  struct Member {
    WeylMatrix matrix;
    Weight xi;
    std::optional<std::size_t> parent;
    int generator;
  };
  std::vector<Member> members;
  Weight xi0 = shifted - target;
  if (classify_weight(xi0) != WeightClass::NonnegativeIntegral) return {};
  members.push_back({WeylMatrix::identity(rs.rank()), std::move(xi0), std::nullopt, -1});

  MatrixIndex admitted([&members](std::uint32_t i) -> const WeylMatrix& { return members[i].matrix; });
  admitted.insert(0);
  std::unordered_set<WeylMatrix, WeylMatrixHash> rejected;

  for (std::size_t k = 0; k < members.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      WeylMatrix cand = members[k].matrix.times_simple(rs.cartan, i);
      if (admitted.find(cand) || rejected.contains(cand)) continue;
      Weight xi = cand.apply(shifted) - target;
      if (classify_weight(xi) != WeightClass::NonnegativeIntegral) {
        rejected.insert(cand);
        continue;
      }
      members.push_back({cand, std::move(xi), k, i});
      admitted.insert(static_cast<std::uint32_t>(members.size() - 1));
    }
  }

  std::vector<AlternationRecord> records;
  records.reserve(members.size());
  for (auto& m : members) {
    AlternationRecord rec;
    rec.element = make_element(rs, m.matrix);
    rec.xi = std::move(m.xi);
    rec.sign = rec.element.sign();
    rec.parent = m.parent;
    rec.generator = m.generator;
    records.push_back(std::move(rec));
  }

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = records[a].element;
    const auto& eb = records[b].element;
    if (ea.length != eb.length) return ea.length < eb.length;
    return ea.word < eb.word;
  });
  std::vector<std::size_t> position(records.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p;

  std::vector<AlternationRecord> sorted;
  sorted.reserve(records.size());
  for (std::size_t p : order) {
    sorted.push_back(std::move(records[p]));
    if (sorted.back().parent) sorted.back().parent = position[*sorted.back().parent];
  }
  return sorted;
}

namespace {

AlternationRecord record_for(const WeylElement& e, Weight xi) {
  AlternationRecord rec;
  rec.element = e;
  rec.xi = std::move(xi);
  rec.sign = e.sign();
  return rec;
}

}  // namespace

std::vector<AlternationRecord> alternation_filter_serial(const RootSystem& rs, const std::vector<WeylElement>& group,
                                                         const Weight& lambda, const Weight& mu) {
  std::vector<AlternationRecord> out;
  for (const auto& e : group) {
    Weight xi = alternation_xi(rs, e.matrix, lambda, mu);
    if (classify_weight(xi) == WeightClass::NonnegativeIntegral) out.push_back(record_for(e, std::move(xi)));
  }
  return out;
}

std::vector<AlternationRecord> alternation_filter_parallel(const RootSystem& rs, const std::vector<WeylElement>& group,
                                                           const Weight& lambda, const Weight& mu) {
  const Weight shifted = lambda + rs.rho;
  const Weight target = rs.rho + mu;
  const auto n = static_cast<std::int64_t>(group.size());
  std::vector<char> keep(group.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const Weight xi = group[static_cast<std::size_t>(k)].matrix.apply(shifted) - target;
    keep[static_cast<std::size_t>(k)] = classify_weight(xi) == WeightClass::NonnegativeIntegral;
  }
  std::vector<AlternationRecord> out;
  for (std::size_t k = 0; k < group.size(); ++k)
    if (keep[k]) out.push_back(record_for(group[k], group[k].matrix.apply(shifted) - target));
  return out;
}

std::string format_word(const std::vector<std::uint8_t>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (auto letter : word) s += "s_" + std::to_string(letter + 1);
  return s;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  if (text == "1" || text.empty()) return out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 's') throw std::invalid_argument("malformed word '" + text + "'");
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("malformed word '" + text + "'");
    out.push_back(std::stoi(text.substr(start, i - start)) - 1);
  }
  return out;
}

}  // namespace qmult
