#include "qmult/multiplicity.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>

namespace qmult {

void fill_partitions(const RootSystem& rs, std::vector<AlternationRecord>& records, const MultiplicityOptions& opts) {
  if (records.empty()) return;
  if (opts.method == Method::GenFunc) {
    std::vector<Weight> xis;
    xis.reserve(records.size());
    for (const auto& rec : records) xis.push_back(rec.xi);
    const auto corner = BoxTable::covering_corner(xis);
    if (corner.empty()) return;
    const BoxTable table(rs, corner, effective_kernel(opts.kernel), opts.max_box_bytes);
    for (auto& rec : records) rec.pq = table.at(rec.xi);
    return;
  }

  if (effective_kernel(opts.kernel) == Kernel::Serial) {
    for (auto& rec : records) rec.pq = partition_tree_count(rs, rec.xi);
    return;
  }
  const auto n = static_cast<std::int64_t>(records.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      auto& rec = records[static_cast<std::size_t>(k)];
      rec.pq = partition_tree_count(rs, rec.xi);
    } catch (...) {
#pragma omp critical(qmult_fill_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

SignedQPolynomial fold_records(const std::vector<AlternationRecord>& records) {
  SignedQPolynomial sum;
  for (const auto& rec : records) sum.accumulate(rec.pq, rec.sign);
  return sum;
}

MultiplicityResult compute_mq(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                              const MultiplicityOptions& opts) {
  MultiplicityResult result;
  result.lie_type = rs.lie_type;
  result.lambda = lambda;
  result.mu = mu;
  result.method = opts.method;
  result.records = alternation_set(rs, lambda, mu);
  fill_partitions(rs, result.records, opts);
  result.mq = fold_records(result.records);
  if (!result.mq.all_nonnegative())
    throw std::logic_error("negative coefficient in m_q(" + format_weight(lambda) + ", " + format_weight(mu) +
                           "): inputs are not dominant or the alternation set is incomplete");
  result.m = result.mq.at_one();
  return result;
}

MultiplicityResult compute_mq(const RootSystem& rs, const MultiplicityOptions& opts) {
  return compute_mq(rs, rs.highest_root, Weight::zero(rs.rank()), opts);
}

BigInt compute_m(const RootSystem& rs, const Weight& lambda, const Weight& mu, const MultiplicityOptions& opts) {
  return compute_mq(rs, lambda, mu, opts).m;
}

SignedQPolynomial full_group_mq(const RootSystem& rs, const std::vector<WeylElement>& group, const Weight& lambda,
                                const Weight& mu, Method method) {
  std::vector<AlternationRecord> terms;
  terms.reserve(group.size());
  for (const auto& e : group) {
    AlternationRecord rec;
    rec.element = e;
    rec.xi = alternation_xi(rs, e.matrix, lambda, mu);
    rec.sign = e.sign();
    terms.push_back(std::move(rec));
  }
  MultiplicityOptions opts;
  opts.method = method;
  fill_partitions(rs, terms, opts);
  return fold_records(terms);
}

std::vector<int> reference_exponents(const LieType& t) {
  validate(t);
  const int r = t.rank;
  std::vector<int> e;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= r; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= r; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i < r; ++i) e.push_back(2 * i - 1);
      e.push_back(r - 1);
      break;
    case Family::E:
      if (r == 6) e = {1, 4, 5, 7, 8, 11};
      if (r == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (r == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F: e = {1, 5, 7, 11}; break;
    case Family::G: e = {1, 5}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::optional<PublishedRow> published_row(const LieType& t) {
  switch (t.family) {
    case Family::G: return PublishedRow{{1, 5}, 12, 2};
    case Family::F: return PublishedRow{{1, 5, 7, 11}, 1152, 25};
    case Family::E:
      if (t.rank == 6) return PublishedRow{{1, 4, 5, 7, 8, 11}, 25920, 58};
      if (t.rank == 7) return PublishedRow{{1, 5, 7, 9, 11, 13, 17}, 2903040, 258};
      if (t.rank == 8) return PublishedRow{{1, 7, 11, 13, 17, 19, 23, 29}, 696729600, 2318};
      return std::nullopt;
    default: return std::nullopt;
  }
}

bool ExponentReport::passed() const {
  const bool order_ok = !enumerated_order || *enumerated_order == weyl_order;
  return multiplicity_free && term_count_ok && exponents_match && sum_identity && product_identity && order_ok;
}

ExponentReport verify_exponents(const RootSystem& rs, const MultiplicityOptions& opts, std::uint64_t max_group_order) {
  const auto start = std::chrono::steady_clock::now();
  ExponentReport report;
  report.lie_type = rs.lie_type;
  const auto result = compute_mq(rs, opts);
  report.mq = result.mq;
  report.alternation_size = result.records.size();

  // Exponents are read off with multiplicity: D_n with n even has n - 1 twice.
  report.reference = reference_exponents(rs.lie_type);
  report.multiplicity_free = true;
  for (std::size_t i = 0; i < result.mq.coeffs().size(); ++i) {
    const auto& c = result.mq.coeffs()[i];
    if (c < 0 || c > rs.rank()) {
      report.multiplicity_free = false;
      continue;
    }
    const int times = c.convert_to<int>();
    const auto expected = std::count(report.reference.begin(), report.reference.end(), static_cast<int>(i));
    if (times > 1 && times != expected) report.multiplicity_free = false;
    report.exponents.insert(report.exponents.end(), static_cast<std::size_t>(times), static_cast<int>(i));
  }
  report.term_count_ok = static_cast<int>(report.exponents.size()) == rs.rank();
  report.exponents_match = report.multiplicity_free && report.exponents == report.reference;

  report.weyl_order = weyl_group_order(rs.lie_type);
  const auto sum = std::accumulate(report.reference.begin(), report.reference.end(), std::uint64_t{0});
  report.sum_identity = sum == rs.positive_roots.size() && sum == positive_root_count(rs.lie_type);
  std::uint64_t product = 1;
  for (int e : report.reference) product *= static_cast<std::uint64_t>(e + 1);
  report.product_identity = product == report.weyl_order;

  if (report.weyl_order <= max_group_order) report.enumerated_order = enumerate_group(rs, max_group_order).size();

  if (const auto row = published_row(rs.lie_type)) {
    const std::string name = to_string(rs.lie_type);
    if (row->alternation_size != report.alternation_size)
      report.discrepancies.push_back(name + ": published |A(highest root, 0)| = " + std::to_string(row->alternation_size) +
                                     ", computed " + std::to_string(report.alternation_size));
    if (row->weyl_order != report.weyl_order)
      report.discrepancies.push_back(name + ": published |W| = " + std::to_string(row->weyl_order) + ", actual " +
                                     std::to_string(report.weyl_order));
    if (row->exponents != report.exponents)
      report.discrepancies.push_back(name + ": published exponents differ from the computed ones");
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qmult
