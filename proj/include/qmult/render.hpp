#pragma once

#include <string>
#include <vector>

#include "qmult/multiplicity.hpp"
#include "qmult/partition.hpp"
#include "qmult/rootsys.hpp"

namespace qmult {

enum class Format { Text, Json, Csv, Latex };

std::string to_string(Format f);
/// "text", "json", "csv" or "latex"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);

/// Alternation table. Text rows look like "3 | s_2 | 1 | 3α_1 | q^3"; latex
/// is a longtable with the m_q footer row.
std::string render_altset(const MultiplicityResult& result, Format format);

/// "m_q = q + q^5 + q^7 + q^11; m = 4" in text; json carries every record.
std::string render_mult(const MultiplicityResult& result, Format format);

/// p_q and p for one weight, with the partitions themselves when `partitions` is non-null.
std::string render_partition(const RootSystem& rs, const Weight& xi, const QPolynomial& pq,
                             const std::vector<PartitionMultiset>* partitions, Format format);

std::string render_verify(const std::vector<ExponentReport>& reports, Format format);

}  // namespace qmult
