#include "qmult/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace qmult {

QPolynomial::QPolynomial(std::vector<std::uint64_t> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPolynomial::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (auto c : c_) s += c;
  return s;
}

void QPolynomial::add(std::size_t i, std::uint64_t count) {
  if (count == 0) return;
  if (i >= c_.size()) c_.resize(i + 1, 0);
  if (__builtin_add_overflow(c_[i], count, &c_[i])) throw CoefficientOverflow("q-polynomial coefficient exceeds 64 bits");
}

SignedQPolynomial::SignedQPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void SignedQPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt SignedQPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

bool SignedQPolynomial::all_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return c >= 0; });
}

void SignedQPolynomial::accumulate(const QPolynomial& p, int sign) {
  const auto& pc = p.coeffs();
  if (pc.size() > c_.size()) c_.resize(pc.size());
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (sign >= 0)
      c_[i] += pc[i];
    else
      c_[i] -= pc[i];
  }
  trim();
}

namespace {

std::string power(std::size_t i, PolyStyle style) {
  const bool latex = style == PolyStyle::Latex || style == PolyStyle::LatexCompact;
  const bool compact = style == PolyStyle::Compact || style == PolyStyle::LatexCompact;
  if (i == 1 && compact) return "q";
  std::string e = std::to_string(i);
  if (latex && (style == PolyStyle::Latex || e.size() > 1)) e = "{" + e + "}";
  return "q^" + e;
}

template <typename Coeff>
std::string render(const std::vector<Coeff>& c, PolyStyle style) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Coeff v = c[i];
    if (v == 0) continue;
    bool negative = false;
    if constexpr (!std::is_unsigned_v<Coeff>) {
      negative = v < 0;
      if (negative) v = -v;
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << v;
      continue;
    }
    if (v != 1) os << v;
    os << power(i, style);
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string format_poly(const QPolynomial& p, PolyStyle style) { return render(p.coeffs(), style); }
std::string format_poly(const SignedQPolynomial& p, PolyStyle style) { return render(p.coeffs(), style); }

}  // namespace qmult
