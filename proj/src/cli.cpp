#include "qmult/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmult/multiplicity.hpp"

namespace qmult::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("not a number: '" + whole + "'");
  return v;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  const auto den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0) throw UsageError("zero denominator in '" + text + "'");
  return Rational(parse_int(std::string_view(text).substr(0, slash), text), den);
}

/// Accepts "3,2" as one token as well as "3 2" as two.
std::vector<std::string> split_coeffs(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& token : raw) {
    std::stringstream ss(token);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (!piece.empty()) out.push_back(piece);
    }
  }
  return out;
}

RootSystem single_type(const CliConfig& cfg) {
  if (cfg.types.size() != 1) throw UsageError("expected exactly one Lie type, got " + std::to_string(cfg.types.size()));
  return build_root_system(parse_lie_type(cfg.types.front()));
}

Weight dominant_weight(const RootSystem& rs, const std::vector<std::string>& coeffs, Basis basis, const char* name) {
  Weight w = parse_weight(rs, coeffs, basis);
  if (!is_dominant_integral(rs, w))
    throw UsageError(std::string(name) + " = " + format_weight(w) + " is not dominant integral for " +
                     to_string(rs.lie_type));
  return w;
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw UsageError("cannot open '" + cfg.out_path + "' for writing");
  file << text;
}

MultiplicityResult run_mult(const CliConfig& cfg) {
  const RootSystem rs = single_type(cfg);
  const Weight lambda = cfg.lambda.empty() ? rs.highest_root : dominant_weight(rs, cfg.lambda, cfg.basis, "lambda");
  const Weight mu = cfg.mu.empty() ? Weight::zero(rs.rank()) : dominant_weight(rs, cfg.mu, cfg.basis, "mu");
  MultiplicityOptions opts;
  opts.method = cfg.method;
  return compute_mq(rs, lambda, mu, opts);
}

Weight xi_of(const RootSystem& rs, const CliConfig& cfg) {
  if (cfg.xi.empty()) throw UsageError("--xi is required");
  return parse_weight(rs, cfg.xi, Basis::Alpha);
}

int cmd_partition(const CliConfig& cfg, bool list, std::ostream& out) {
  const RootSystem rs = single_type(cfg);
  const Weight xi = xi_of(rs, cfg);
  const auto method = list ? Method::Tree : cfg.method;
  const QPolynomial pq = method == Method::Tree ? partition_tree_count(rs, xi) : partition_genfunc(rs, xi);
  std::vector<PartitionMultiset> parts;
  if (list) parts = partition_tree_list(rs, xi);
  emit(cfg, render_partition(rs, xi, pq, list ? &parts : nullptr, cfg.format), out);
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  std::vector<std::string> names = cfg.types;
  if (names.empty()) names = {"G2", "F4", "E6", "E7", "E8"};
  MultiplicityOptions opts;
  opts.method = cfg.method;
  std::vector<ExponentReport> reports;
  bool ok = true;
  for (const auto& name : names) {
    const RootSystem rs = build_root_system(parse_lie_type(name));
    reports.push_back(verify_exponents(rs, opts, cfg.max_group_order));
    ok = ok && reports.back().passed();
  }
  emit(cfg, render_verify(reports, cfg.format), out);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

Weight parse_weight(const RootSystem& rs, const std::vector<std::string>& raw, Basis basis) {
  const auto tokens = split_coeffs(raw);
  if (static_cast<int>(tokens.size()) != rs.rank())
    throw UsageError("expected " + std::to_string(rs.rank()) + " coefficients for " + to_string(rs.lie_type) +
                     ", got " + std::to_string(tokens.size()));
  std::vector<Rational> coeffs;
  for (const auto& t : tokens) coeffs.push_back(parse_rational(t));
  if (basis == Basis::Omega) return from_omega_basis(rs, coeffs);
  return Weight(std::move(coeffs));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kostant partition functions and q-analog weight multiplicities", "qmult"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string method = "genfunc";
  std::string format = "text";
  std::string basis = "alpha";
  std::string type_flag;

  const auto add_type = [&](CLI::App* sub, bool many) {
    if (many)
      sub->add_option("TYPES", cfg.types, "Lie types, e.g. G2 F4 E6");
    else
      sub->add_option("TYPE", cfg.types, "Lie type, e.g. G2 or E8")->expected(0, 1);
    sub->add_option("--type,-t", type_flag, "Lie type (alternative to the positional argument)");
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format,-f", format, "text, json, csv or latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    sub->add_option("--out,-o", cfg.out_path, "Write output to this file");
  };
  const auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method,-m", method, "Partition function algorithm: tree or genfunc")
        ->check(CLI::IsMember({"tree", "genfunc"}));
  };
  const auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--lambda,-l", cfg.lambda, "Highest weight coefficients, e.g. 3,2 (default: highest root)");
    sub->add_option("--mu", cfg.mu, "Weight coefficients (default: 0)");
    sub->add_option("--basis,-b", basis, "Basis of --lambda/--mu: alpha (simple roots) or omega (fundamental weights)")
        ->check(CLI::IsMember({"alpha", "omega"}));
  };

  auto* partition = app.add_subcommand("partition", "q-analog of Kostant's partition function at one weight");
  add_type(partition, false);
  partition->add_option("--xi,-x", cfg.xi, "Weight in simple-root coordinates, e.g. 2,2");
  partition->add_flag("--list", cfg.list, "Also list the partitions");
  add_method(partition);
  add_output(partition);

  auto* listp = app.add_subcommand("list-partitions", "List every partition of a weight into positive roots");
  add_type(listp, false);
  listp->add_option("--xi,-x", cfg.xi, "Weight in simple-root coordinates");
  add_output(listp);

  auto* altset = app.add_subcommand("altset", "Weyl alternation set with partition function values");
  add_type(altset, false);
  add_weights(altset);
  add_method(altset);
  add_output(altset);

  auto* mult = app.add_subcommand("mult", "q-multiplicity m_q(lambda, mu) and multiplicity m(lambda, mu)");
  add_type(mult, false);
  add_weights(mult);
  add_method(mult);
  add_output(mult);

  auto* verify = app.add_subcommand("verify", "Check m_q(highest root, 0) against the exponents");
  add_type(verify, true);
  add_method(verify);
  add_output(verify);
  verify->add_option("--max-group-order", cfg.max_group_order,
                     "Enumerate W to confirm |W| when it has at most this many elements");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!type_flag.empty()) cfg.types.insert(cfg.types.begin(), type_flag);
    cfg.method = parse_method(method);
    cfg.format = parse_format(format);
    cfg.basis = basis == "omega" ? Basis::Omega : Basis::Alpha;

    if (*partition) return cmd_partition(cfg, cfg.list, out);
    if (*listp) return cmd_partition(cfg, true, out);
    if (*altset) {
      emit(cfg, render_altset(run_mult(cfg), cfg.format), out);
      return kExitOk;
    }
    if (*mult) {
      emit(cfg, render_mult(run_mult(cfg), cfg.format), out);
      return kExitOk;
    }
    if (*verify) return cmd_verify(cfg, out);
  } catch (const std::exception& e) {
    err << "qmult: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qmult::cli
