#include "qmult/render.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qmult {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return format_rational(r);
}

json weight_json(const Weight& w) {
  json arr = json::array();
  for (const auto& c : w.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json signed_poly_json(const SignedQPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(bigint_json(c));
  return arr;
}

std::vector<int> one_based(const std::vector<std::uint8_t>& word) {
  std::vector<int> out;
  for (auto letter : word) out.push_back(letter + 1);
  return out;
}

json record_json(std::size_t index, const AlternationRecord& rec) {
  json j;
  j["index"] = index;
  j["word"] = format_word(rec.element.word);
  j["letters"] = one_based(rec.element.word);
  j["length"] = rec.element.length;
  j["sign"] = rec.sign;
  j["xi"] = weight_json(rec.xi);
  j["pq"] = rec.pq.coeffs();
  return j;
}

json result_json(const MultiplicityResult& r) {
  json j;
  j["type"] = to_string(r.lie_type);
  j["lambda"] = weight_json(r.lambda);
  j["mu"] = weight_json(r.mu);
  j["method"] = to_string(r.method);
  j["mq"] = signed_poly_json(r.mq);
  j["mq_text"] = format_poly(r.mq, PolyStyle::Compact);
  j["m"] = bigint_json(r.m);
  j["count"] = r.records.size();
  j["records"] = json::array();
  for (std::size_t k = 0; k < r.records.size(); ++k) j["records"].push_back(record_json(k + 1, r.records[k]));
  return j;
}

template <class Seq>
std::string join(const Seq& seq, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : seq) {
    if (!first) os << sep;
    first = false;
    os << v;
  }
  return os.str();
}

std::string semicolon_weight(const Weight& w) {
  std::vector<std::string> parts;
  for (const auto& c : w.coeffs()) parts.push_back(format_rational(c));
  return join(parts, ";");
}

bool is_adjoint_default(const MultiplicityResult& r) {
  return r.mu.is_zero() && r.lambda == build_root_system(r.lie_type).highest_root;
}

std::string latex_family(const LieType& t) {
  return std::string(1, static_cast<char>(t.family)) + "_{" + std::to_string(t.rank) + "}";
}

std::string latex_altset(const MultiplicityResult& r) {
  const bool adjoint = is_adjoint_default(r);
  const std::string xi_head = adjoint ? "\\xi = \\sigma(\\widetilde{\\alpha} + \\rho) - \\rho"
                                      : "\\xi = \\sigma(\\lambda + \\rho) - (\\rho + \\mu)";
  const std::string footer_args =
      adjoint ? "\\widetilde{\\alpha}, 0" : format_weight_latex(r.lambda) + ", " + format_weight_latex(r.mu);

  std::ostringstream os;
  os << "% " << to_string(r.lie_type) << ": alternation set, " << r.records.size() << " records\n";
  os << "\\begin{longtable}{|c|c|c|p{4cm}|p{6cm}|}\n";
  os << "\\rowcolor{lightgray}\n";
  os << "\\rowcolors{1}{}{midgray}\n";
  os << "No. \\ &$\\sigma$ \\ &$\\ell(\\sigma)$ \\ &$" << xi_head << "$ \\ &$\\wp_q(\\xi)$ \\\\\n";
  for (std::size_t k = 0; k < r.records.size(); ++k) {
    const auto& rec = r.records[k];
    os << k + 1 << " & $" << format_word(rec.element.word) << "$ & " << rec.element.length << " & $ "
       << format_weight_latex(rec.xi) << " $ & $ " << format_poly(rec.pq, PolyStyle::Latex) << " $\\\\\\hline\n";
  }
  os << "\\rowcolor{white}\\multicolumn{5}{|c|}{$m_q(" << footer_args
     << ") = " << format_poly(r.mq, PolyStyle::LatexCompact) << "$} \\\\\n";
  os << "\\hline\n";
  os << "\\end{longtable}\n";
  return os.str();
}

}  // namespace

std::string to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Latex: return "latex";
  }
  return "text";
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "latex") return Format::Latex;
  throw std::invalid_argument("unknown format '" + text + "' (expected text, json, csv or latex)");
}

std::string render_altset(const MultiplicityResult& r, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: return result_json(r).dump(2) + "\n";
    case Format::Latex: return latex_altset(r);
    case Format::Csv:
      os << "index,word,length,xi,pq,sign\n";
      for (std::size_t k = 0; k < r.records.size(); ++k) {
        const auto& rec = r.records[k];
        os << k + 1 << ',' << format_word(rec.element.word) << ',' << rec.element.length << ','
           << semicolon_weight(rec.xi) << ',' << join(rec.pq.coeffs(), ";") << ',' << rec.sign << '\n';
      }
      return os.str();
    case Format::Text:
      os << "No. | sigma | length | xi | p_q(xi)\n";
      for (std::size_t k = 0; k < r.records.size(); ++k) {
        const auto& rec = r.records[k];
        os << k + 1 << " | " << format_word(rec.element.word) << " | " << rec.element.length << " | "
           << format_weight(rec.xi) << " | " << format_poly(rec.pq, PolyStyle::Table) << '\n';
      }
      return os.str();
  }
  return {};
}

std::string render_mult(const MultiplicityResult& r, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: return result_json(r).dump(2) + "\n";
    case Format::Latex:
      os << "$m_q(" << (is_adjoint_default(r) ? "\\widetilde{\\alpha}, 0"
                                              : format_weight_latex(r.lambda) + ", " + format_weight_latex(r.mu))
         << ") = " << format_poly(r.mq, PolyStyle::LatexCompact) << "$\n";
      return os.str();
    case Format::Csv:
      os << "type,lambda,mu,mq,m,records\n";
      os << to_string(r.lie_type) << ',' << semicolon_weight(r.lambda) << ',' << semicolon_weight(r.mu) << ','
         << join(r.mq.coeffs(), ";") << ',' << r.m << ',' << r.records.size() << '\n';
      return os.str();
    case Format::Text:
      os << "m_q = " << format_poly(r.mq, PolyStyle::Compact) << "; m = " << r.m << '\n';
      return os.str();
  }
  return {};
}

std::string render_partition(const RootSystem& rs, const Weight& xi, const QPolynomial& pq,
                             const std::vector<PartitionMultiset>* partitions, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      json j;
      j["type"] = to_string(rs.lie_type);
      j["xi"] = weight_json(xi);
      j["pq"] = pq.coeffs();
      j["pq_text"] = format_poly(pq, PolyStyle::Table);
      j["p"] = bigint_json(pq.at_one());
      if (partitions) {
        j["partitions"] = json::array();
        for (const auto& p : *partitions) j["partitions"].push_back({{"mults", p.mults}, {"size", p.size()},
                                                                      {"text", format_partition(rs, p)}});
      }
      return j.dump(2) + "\n";
    }
    case Format::Latex:
      os << "$\\wp_q(" << format_weight_latex(xi) << ") = " << format_poly(pq, PolyStyle::Latex) << "$\n";
      if (partitions)
        for (const auto& p : *partitions) os << "% " << format_partition(rs, p) << '\n';
      return os.str();
    case Format::Csv:
      if (partitions) {
        os << "index,size,mults\n";
        for (std::size_t k = 0; k < partitions->size(); ++k)
          os << k + 1 << ',' << (*partitions)[k].size() << ',' << join((*partitions)[k].mults, ";") << '\n';
        return os.str();
      }
      os << "xi,pq,p\n" << semicolon_weight(xi) << ',' << join(pq.coeffs(), ";") << ',' << pq.at_one() << '\n';
      return os.str();
    case Format::Text:
      os << "p_q = " << format_poly(pq, PolyStyle::Table) << '\n';
      os << "p = " << pq.at_one() << '\n';
      if (partitions)
        for (std::size_t k = 0; k < partitions->size(); ++k)
          os << k + 1 << ": " << format_partition(rs, (*partitions)[k]) << "  [" << (*partitions)[k].size()
             << " roots]\n";
      return os.str();
  }
  return {};
}

std::string render_verify(const std::vector<ExponentReport>& reports, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json j;
      j["type"] = to_string(r.lie_type);
      j["passed"] = r.passed();
      j["mq"] = signed_poly_json(r.mq);
      j["exponents"] = r.exponents;
      j["reference"] = r.reference;
      j["multiplicity_free"] = r.multiplicity_free;
      j["term_count_ok"] = r.term_count_ok;
      j["exponents_match"] = r.exponents_match;
      j["sum_identity"] = r.sum_identity;
      j["product_identity"] = r.product_identity;
      j["alternation_size"] = r.alternation_size;
      j["weyl_order"] = r.weyl_order;
      j["enumerated_order"] = r.enumerated_order ? json(*r.enumerated_order) : json(nullptr);
      j["discrepancies"] = r.discrepancies;
      j["seconds"] = r.seconds;
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    os << "type,passed,exponents,alternation_size,weyl_order,enumerated_order,seconds\n";
    for (const auto& r : reports)
      os << to_string(r.lie_type) << ',' << (r.passed() ? "pass" : "fail") << ',' << join(r.exponents, ";") << ','
         << r.alternation_size << ',' << r.weyl_order << ','
         << (r.enumerated_order ? std::to_string(*r.enumerated_order) : "") << ',' << r.seconds << '\n';
    return os.str();
  }
  if (format == Format::Latex) {
    os << "\\begin{tabular}{|c|c|c|c|}\n\\hline\n";
    os << "Lie algebra&Exponents&$|W|$&$|\\mathcal{A}(\\tilde{\\alpha},0)|$\\\\ \\hline\n";
    for (const auto& r : reports)
      os << '$' << latex_family(r.lie_type) << "$&" << join(r.exponents, ",") << '&' << r.weyl_order << '&'
         << r.alternation_size << "\\\\\\hline\n";
    os << "\\end{tabular}\n";
    return os.str();
  }
  for (const auto& r : reports) {
    os << to_string(r.lie_type) << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    os << "  m_q(highest root, 0) = " << format_poly(r.mq, PolyStyle::Compact) << '\n';
    os << "  exponents " << join(r.exponents, ",") << " (expected " << join(r.reference, ",") << ")\n";
    os << "  |A| = " << r.alternation_size << ", |W| = " << r.weyl_order;
    if (r.enumerated_order) os << " (enumerated " << *r.enumerated_order << ")";
    os << '\n';
    if (!r.multiplicity_free) os << "  m_q has a coefficient not accounted for by repeated exponents\n";
    if (!r.term_count_ok) os << "  m_q has " << r.exponents.size() << " exponents, rank is " << r.lie_type.rank << '\n';
    if (!r.sum_identity) os << "  sum of exponents differs from the number of positive roots\n";
    if (!r.product_identity) os << "  product of (e_i + 1) differs from |W|\n";
    for (const auto& d : r.discrepancies) os << "  note: " << d << '\n';
    os << "  " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    os.unsetf(std::ios::fixed);
  }
  return os.str();
}

}  // namespace qmult
