#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qmult/partition.hpp"
#include "qmult/render.hpp"
#include "qmult/weyl.hpp"

namespace qmult::cli {

enum class Basis { Alpha, Omega };

struct CliConfig {
  std::vector<std::string> types;
  std::vector<std::string> lambda;
  std::vector<std::string> mu;
  std::vector<std::string> xi;
  Basis basis = Basis::Alpha;
  Method method = Method::GenFunc;
  Format format = Format::Text;
  std::uint64_t max_group_order = kDefaultMaxGroupOrder;
  std::string out_path;
  bool list = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses a coefficient list such as {"3", "2"} or {"1/2", "0"} into a weight of the given rank.
/// With Basis::Omega the coefficients are fundamental-weight coordinates.
Weight parse_weight(const RootSystem& rs, const std::vector<std::string>& coeffs, Basis basis);

/// Runs one command line (without the program name). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmult::cli
