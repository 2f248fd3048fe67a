#include "qmult/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qmult {

namespace {

bool admissible(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B:
    case Family::C: return r >= 2;
    case Family::D: return r >= 3;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

void link(CartanMatrix& a, int i, int j, int aij = -1, int aji = -1) {
  a(i, j) = aij;
  a(j, i) = aji;
}

void check_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw DimensionMismatch("weight rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

}  // namespace

void validate(const LieType& t) {
  if (!admissible(t.family, t.rank)) throw InadmissibleType("inadmissible Lie type " + to_string(t));
}

LieType parse_lie_type(std::string_view text) {
  if (text.size() < 2) throw InadmissibleType("cannot parse Lie type '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (f < 'A' || f > 'G') throw InadmissibleType("unknown Lie family in '" + std::string(text) + "'");
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InadmissibleType("cannot parse rank in '" + std::string(text) + "'");
  LieType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

std::string to_string(const LieType& t) { return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank); }

Weight::Weight(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
}

Weight Weight::from_integers(const std::vector<std::int64_t>& coeffs) {
  std::vector<Rational> r(coeffs.begin(), coeffs.end());
  return Weight(std::move(r));
}

bool Weight::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.numerator() == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.denominator() == 1; });
}

std::vector<std::int64_t> Weight::integer_coeffs() const {
  std::vector<std::int64_t> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.denominator() != 1) throw std::domain_error("weight has a fractional coefficient");
    out.push_back(c.numerator());
  }
  return out;
}

Weight& Weight::operator+=(const Weight& other) {
  check_rank(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  check_rank(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Weight operator*(const Rational& k, Weight w) {
  for (auto& c : w.coeffs_) c *= k;
  return w;
}

Rational weight_height(const Weight& w) {
  Rational h = 0;
  for (const auto& c : w.coeffs()) h += c;
  return h;
}

WeightClass classify_weight(const Weight& w) {
  if (!w.is_integral()) return WeightClass::HasFraction;
  for (const auto& c : w.coeffs())
    if (c.numerator() < 0) return WeightClass::HasNegative;
  return WeightClass::NonnegativeIntegral;
}

bool dominated_by(const Weight& a, const Weight& b) {
  check_rank(a, b);
  for (int i = 0; i < a.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

CartanMatrix cartan_matrix(const LieType& t) {
  validate(t);
  const int r = t.rank;
  CartanMatrix a(r);
  for (int i = 0; i < r; ++i) a(i, i) = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 2, r - 1, -1, -2);
      break;
    case Family::C:
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 2, r - 1, -2, -1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 3, r - 1);
      break;
    case Family::E:
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case Family::F:
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      break;
    case Family::G:
      link(a, 0, 1, -3, -1);
      break;
  }
  return a;
}

Rational RootSystem::coroot_pairing(const Weight& w, int i) const {
  Rational s = 0;
  for (int j = 0; j < rank(); ++j) s += Rational(cartan(i, j)) * w[j];
  return s;
}

std::vector<int> RootSystem::root_coeffs(std::size_t k) const {
  const auto& root = positive_roots.at(k);
  std::vector<int> out(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i) out[static_cast<std::size_t>(i)] = static_cast<int>(root[i].numerator());
  return out;
}

RootSystem build_root_system(const LieType& t) {
  RootSystem rs;
  rs.lie_type = t;
  rs.cartan = cartan_matrix(t);
  const int r = t.rank;
  using Coeffs = std::vector<int>;

  std::set<Coeffs> roots;
  std::vector<Coeffs> layer;
  for (int i = 0; i < r; ++i) {
    Coeffs e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    roots.insert(e);
    layer.push_back(e);
  }

  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is the
  // length of the alpha_i-string running down from beta.
  while (!layer.empty()) {
    std::set<Coeffs> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < r; ++i) {
        int p = 0;
        Coeffs down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!roots.contains(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += rs.cartan(i, j) * beta[static_cast<std::size_t>(j)];
        if (p - pairing > 0) {
          Coeffs up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          if (!roots.contains(up)) next.insert(up);
        }
      }
    }
    roots.insert(next.begin(), next.end());
    layer.assign(next.begin(), next.end());
  }

  std::vector<Coeffs> sorted(roots.begin(), roots.end());
  auto height = [](const Coeffs& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(sorted.begin(), sorted.end(), [&](const Coeffs& a, const Coeffs& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  rs.rho = Weight::zero(r);
  for (const auto& c : sorted) {
    Weight w = Weight::from_integers(std::vector<std::int64_t>(c.begin(), c.end()));
    rs.rho += w;
    rs.positive_roots.push_back(std::move(w));
  }
  rs.rho = Rational(1, 2) * rs.rho;
  rs.highest_root = rs.positive_roots.back();
  return rs;
}

std::size_t positive_root_count(const LieType& t) {
  validate(t);
  const std::size_t r = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::vector<LieType> all_types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (char f : std::string("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r)
      if (admissible(static_cast<Family>(f), r)) out.push_back({static_cast<Family>(f), r});
  return out;
}

bool is_dominant_integral(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank()) throw DimensionMismatch("weight rank does not match root system");
  for (int i = 0; i < rs.rank(); ++i) {
    const Rational p = rs.coroot_pairing(w, i);
    if (p.denominator() != 1 || p.numerator() < 0) return false;
  }
  return true;
}

Weight from_omega_basis(const RootSystem& rs, const std::vector<Rational>& omega_coeffs) {
  const int n = rs.rank();
  if (static_cast<int>(omega_coeffs.size()) != n) throw DimensionMismatch("omega coordinate count does not match rank");
  // Gauss-Jordan on [A | m].
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = rs.cartan(i, j);
    m[i][n] = omega_coeffs[static_cast<std::size_t>(i)];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (m[pivot][col].numerator() == 0) ++pivot;
    std::swap(m[pivot], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col].numerator() == 0) continue;
      const Rational f = m[i][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = m[i][n];
  return Weight(std::move(c));
}

std::vector<Rational> to_omega_basis(const RootSystem& rs, const Weight& w) {
  std::vector<Rational> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back(rs.coroot_pairing(w, i));
  return out;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::string format_terms(const Weight& w, bool latex) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < w.rank(); ++i) {
    Rational c = w[i];
    if (c.numerator() == 0) continue;
    if (first) {
      if (c.numerator() < 0) os << "-";
    } else {
      os << (c.numerator() < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c.denominator() != 1) {
      if (latex)
        os << "\\frac{" << c.numerator() << "}{" << c.denominator() << "}";
      else
        os << "(" << format_rational(c) << ")";
    } else if (c.numerator() != 1) {
      os << c.numerator();
    }
    if (latex)
      os << "\\alpha_{" << i + 1 << "}";
    else
      os << "α_" << i + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string format_weight(const Weight& w) { return format_terms(w, false); }
std::string format_weight_latex(const Weight& w) { return format_terms(w, true); }

}  // namespace qmult
