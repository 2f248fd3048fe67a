#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmult/partition.hpp"
#include "qmult/qpoly.hpp"
#include "qmult/rootsys.hpp"
#include "qmult/weyl.hpp"

namespace qmult {

/// m_q(lambda, mu) together with the alternation records it was summed from.
struct MultiplicityResult {
  LieType lie_type;
  Weight lambda;
  Weight mu;
  SignedQPolynomial mq;
  BigInt m;
  std::vector<AlternationRecord> records;
  Method method = Method::GenFunc;
};

struct MultiplicityOptions {
  Method method = Method::GenFunc;
  Kernel kernel = Kernel::Parallel;
  std::size_t max_box_bytes = kDefaultBoxBytes;
};

/// Fills rec.pq for every record. GenFunc builds one box table covering all
/// records; Tree evaluates records independently (in parallel for Kernel::Parallel).
void fill_partitions(const RootSystem& rs, std::vector<AlternationRecord>& records, const MultiplicityOptions& opts = {});

/// Signed fold of the records in order.
SignedQPolynomial fold_records(const std::vector<AlternationRecord>& records);

/// Lusztig's q-analog of Kostant's multiplicity formula, summed over the
/// Weyl alternation set. lambda and mu are in the simple-root basis.
/// Throws std::logic_error if the sum has a negative coefficient, which no
/// weight multiplicity can have.
MultiplicityResult compute_mq(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                              const MultiplicityOptions& opts = {});
/// lambda = highest root, mu = 0.
MultiplicityResult compute_mq(const RootSystem& rs, const MultiplicityOptions& opts = {});

BigInt compute_m(const RootSystem& rs, const Weight& lambda, const Weight& mu, const MultiplicityOptions& opts = {});

/// Same alternating sum taken over every element of `group` (reference for the pruned search).
SignedQPolynomial full_group_mq(const RootSystem& rs, const std::vector<WeylElement>& group, const Weight& lambda,
                                const Weight& mu, Method method = Method::GenFunc);

/// Exponents from the standard closed forms (classical) or the exceptional tables.
std::vector<int> reference_exponents(const LieType& t);

/// Values printed in the published table for the exceptional types.
struct PublishedRow {
  std::vector<int> exponents;
  std::uint64_t weyl_order;
  std::size_t alternation_size;
};
std::optional<PublishedRow> published_row(const LieType& t);

struct ExponentReport {
  LieType lie_type;
  SignedQPolynomial mq;
  std::vector<int> exponents;
  std::vector<int> reference;
  bool multiplicity_free = false;  // coefficients are 0 or 1, except where an exponent repeats
  bool term_count_ok = false;   // rank exponents, counted with multiplicity
  bool exponents_match = false;
  bool sum_identity = false;    // sum e_i = |Phi+|
  bool product_identity = false;  // prod (e_i + 1) = |W|
  std::size_t alternation_size = 0;
  std::uint64_t weyl_order = 0;  // closed form
  std::optional<std::uint64_t> enumerated_order;  // when the group was small enough to list
  std::vector<std::string> discrepancies;  // published values that disagree with computed ones
  double seconds = 0;

  bool passed() const;
};

ExponentReport verify_exponents(const RootSystem& rs, const MultiplicityOptions& opts = {},
                                std::uint64_t max_group_order = kDefaultMaxGroupOrder);

}  // namespace qmult
