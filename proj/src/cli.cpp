#include "pqt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pqt/json_io.hpp"
#include "pqt/multipoly.hpp"
#include "pqt/numbers.hpp"
#include "pqt/partitions.hpp"
#include "pqt/permstats.hpp"
#include "pqt/rational.hpp"
#include "pqt/touchard.hpp"
#include "pqt/verify.hpp"

namespace pqt::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFormats{"plain", "json", "csv"};

void write_poly_csv(std::ostream& os, const MultiPoly& a) {
  const auto vars = a.variables();
  for (Var var : vars) os << var_name(var) << ',';
  os << "coeff\n";
  for (const auto& [m, c] : a.sorted_terms()) {
    for (Var var : vars) os << m[static_cast<std::size_t>(var)] << ',';
    os << c << '\n';
  }
}

std::map<Var, Rational> parse_assignment(const std::string& text) {
  std::map<Var, Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected var=value in '" + item + "'");
    const auto var = parse_var(item.substr(0, eq));
    if (!var || (*var != Var::x && *var != Var::p && *var != Var::q))
      throw UsageError("--at accepts only x, p and q, got '" + item.substr(0, eq) + "'");
    values[*var] = parse_rational(item.substr(eq + 1));
  }
  return values;
}

Route parse_route(const std::string& name) {
  for (Route r : {Route::composition, Route::explicit_sum, Route::substitution})
    if (route_name(r) == name) return r;
  throw UsageError("unknown route '" + name + "'");
}

// --- subcommand state -------------------------------------------------------

struct TableArgs {
  std::string kind = "stirling2";
  int n_max = 10;
  std::string format = "plain";
};

struct ExpandArgs {
  int n = 0;
  std::string at;
  std::string route = "substitution";
  std::string format = "plain";
};

struct EvalArgs {
  int n = 0;
  std::string x = "1", p = "1", q = "1";
  bool oracle = false;
  std::string format = "plain";
};

struct EnumerateArgs {
  int n = 1, k = 1;
  std::string flavor = "LLP";
  bool stats = false;
  bool force = false;
  std::string format = "plain";
};

struct DistArgs {
  int n = 1, k = 1;
  bool oracle = false;
  bool force = false;
  std::string format = "plain";
};

struct VerifyArgs {
  std::string identity;
  int n_max = 6;
  bool force = false;
  bool verbose = false;
};

struct AvgNseArgs {
  int n = 1;
  bool oracle = false;
  std::string format = "plain";
};

struct PermStatsArgs {
  int n = 1;
};

// --- handlers ---------------------------------------------------------------

int do_table(const TableArgs& a, std::ostream& os) {
  using TriangleFn = BigInt (*)(int, int);
  static const std::map<std::string, TriangleFn> triangles{
      {"binomial", &binomial},
      {"stirling2", &stirling2},
      {"stirling1", &stirling1_unsigned},
      {"stirling1-signed", &stirling1_signed},
  };
  static const std::map<std::string, BigInt (*)(int)> sequences{{"bell", &bell}, {"factorial", &factorial}};

  if (auto it = triangles.find(a.kind); it != triangles.end()) {
    if (a.format == "csv") os << "n,k,value\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= a.n_max; ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k <= n; ++k) {
        const BigInt value = it->second(n, k);
        if (a.format == "plain")
          os << (k > 0 ? " " : "") << value;
        else if (a.format == "csv")
          os << n << ',' << k << ',' << value << '\n';
        row.push_back(value.get_str());
      }
      if (a.format == "plain") os << '\n';
      rows.push_back(std::move(row));
    }
    if (a.format == "json") os << nlohmann::json{{"kind", a.kind}, {"rows", rows}}.dump() << '\n';
    return kExitOk;
  }
  if (auto it = sequences.find(a.kind); it != sequences.end()) {
    if (a.format == "csv") os << "n,value\n";
    nlohmann::json values = nlohmann::json::array();
    for (int n = 0; n <= a.n_max; ++n) {
      const BigInt value = it->second(n);
      if (a.format == "plain") os << n << ' ' << value << '\n';
      if (a.format == "csv") os << n << ',' << value << '\n';
      values.push_back(value.get_str());
    }
    if (a.format == "json") os << nlohmann::json{{"kind", a.kind}, {"values", values}}.dump() << '\n';
    return kExitOk;
  }
  if (a.kind == "q-poly") {
    nlohmann::json values = nlohmann::json::array();
    if (a.format == "csv") os << "n,q,coeff\n";
    for (int n = 0; n <= a.n_max; ++n) {
      const MultiPoly poly = q_product_poly(n);
      if (a.format == "plain") os << "Q_" << n << " = " << poly << '\n';
      if (a.format == "csv")
        for (const auto& [m, c] : poly.sorted_terms()) os << n << ',' << m[static_cast<std::size_t>(Var::q)] << ',' << c << '\n';
      values.push_back(poly_to_json(poly));
    }
    if (a.format == "json") os << nlohmann::json{{"kind", a.kind}, {"values", values}}.dump() << '\n';
    return kExitOk;
  }
  throw UsageError("unknown table kind '" + a.kind + "'");
}

int do_expand(const ExpandArgs& a, std::ostream& os) {
  if (a.n < 0) throw UsageError("--n must be nonnegative");
  MultiPoly poly = touchard_poly(a.n, parse_route(a.route));
  if (!a.at.empty()) {
    const auto values = parse_assignment(a.at);
    if (values.size() == 3) {
      const Rational value = poly_eval(poly, Assignment(values.begin(), values.end()));
      if (a.format == "json")
        os << nlohmann::json{{"n", a.n}, {"value", to_string(value)}}.dump() << '\n';
      else if (a.format == "csv")
        os << "n,value\n" << a.n << ',' << value << '\n';
      else
        os << value << '\n';
      return kExitOk;
    }
    std::map<Var, BigInt> integers;
    for (const auto& [var, value] : values) {
      if (value.get_den() != 1)
        throw UsageError("partial --at needs integer values; give all of x, p, q for rational evaluation");
      integers[var] = value.get_num();
    }
    poly = poly_specialize(poly, integers);
  }
  if (a.format == "json")
    os << nlohmann::json{{"n", a.n}, {"route", route_name(parse_route(a.route))}, {"poly", poly_to_json(poly)}}.dump()
       << '\n';
  else if (a.format == "csv")
    write_poly_csv(os, poly);
  else
    os << poly << '\n';
  return kExitOk;
}

int do_eval(const EvalArgs& a, std::ostream& os, std::ostream& err) {
  if (a.n < 0) throw UsageError("--n must be nonnegative");
  const Rational x = parse_rational(a.x), p = parse_rational(a.p), q = parse_rational(a.q);
  const Rational value = touchard_eval(a.n, x, p, q);
  const Rational taylor = value / Rational(factorial(a.n));
  std::optional<Rational> oracle;
  if (a.oracle) {
    if (p == 1 || q == 1) throw UsageError("--oracle needs p != 1 and q != 1");
    oracle = taylor_oracle(x, p, q, static_cast<std::size_t>(a.n))[a.n];
  }
  if (a.format == "json") {
    nlohmann::json j{{"n", a.n}, {"value", to_string(value)}, {"taylor_coeff", to_string(taylor)}};
    if (oracle) {
      j["oracle"] = to_string(*oracle);
      j["equal"] = *oracle == taylor;
    }
    os << j.dump() << '\n';
  } else {
    os << "T_" << a.n << "(" << x << ";" << p << "," << q << ") = " << value << '\n';
    os << "T_" << a.n << "/" << a.n << "! = " << taylor << '\n';
    if (oracle) os << "oracle = " << *oracle << ' ' << (*oracle == taylor ? "EQUAL" : "DIFFERENT") << '\n';
  }
  if (oracle && *oracle != taylor) {
    err << "oracle disagrees with T_" << a.n << "/" << a.n << "!\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int do_enumerate(const EnumerateArgs& a, std::ostream& os) {
  const auto flavor = parse_flavor(a.flavor);
  if (!flavor) throw UsageError("unknown flavor '" + a.flavor + "'");
  if (a.format == "csv") os << (a.stats ? "partition,nsb,nse\n" : "partition\n");
  const char sep = a.format == "csv" ? ',' : ' ';
  enumerate(
      a.n, a.k, *flavor,
      [&](const OrderedPartition& pi) {
        os << to_string(pi);
        if (a.stats) os << sep << nsb(pi) << sep << nse(pi);
        os << '\n';
      },
      a.force);
  return kExitOk;
}

int do_dist(const DistArgs& a, std::ostream& os, std::ostream& err) {
  if (a.k < 1 || a.k > a.n) throw UsageError("dist needs 1 <= k <= n");
  const MultiPoly formula = s_uv(a.n, a.k);
  std::optional<DistGrid> grid;
  if (a.oracle) grid = dist_grid(a.n, a.k, a.force);
  const std::optional<MultiPoly> enumerated = grid ? std::optional(grid_to_poly(*grid)) : std::nullopt;
  const bool equal = !enumerated || *enumerated == formula;

  if (a.format == "json") {
    nlohmann::json j{{"n", a.n}, {"k", a.k}, {"formula", poly_to_json(formula)}};
    if (enumerated) {
      j["enumeration"] = poly_to_json(*enumerated);
      j["equal"] = equal;
    }
    os << j.dump() << '\n';
  } else if (a.format == "csv") {
    os << "nsb,nse,formula" << (grid ? ",enumeration" : "") << '\n';
    for (int i = 0; i < a.k; ++i) {
      for (int j = 0; j <= a.n - a.k; ++j) {
        Monomial m{};
        m[static_cast<std::size_t>(Var::u)] = i;
        m[static_cast<std::size_t>(Var::v)] = j;
        os << i << ',' << j << ',' << formula.coeff(m);
        if (grid) os << ',' << (*grid)[i][j];
        os << '\n';
      }
    }
  } else {
    os << "formula     S(" << a.n << "," << a.k << ";u,v) = " << formula << '\n';
    if (enumerated) {
      os << "enumeration S(" << a.n << "," << a.k << ";u,v) = " << *enumerated << '\n';
      os << (equal ? "EQUAL" : "DIFFERENT") << '\n';
    }
  }
  if (!equal) {
    err << "closed form and enumeration differ\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int do_verify(const VerifyArgs& a, std::ostream& os, std::ostream& err) {
  std::vector<Identity> ids;
  if (a.identity == "all") {
    ids = all_identities();
  } else {
    const auto id = parse_identity(a.identity);
    if (!id) throw UsageError("unknown identity '" + a.identity + "'");
    ids.push_back(*id);
  }
  VerifyOptions options;
  options.force = a.force;
  int status = kExitOk;
  for (Identity id : ids) {
    // "all" clamps each identity to its own budget
    const int n_max = a.identity == "all" && !a.force ? std::min(a.n_max, identity_budget(id)) : a.n_max;
    const auto report = verify_identity(id, n_max, options);
    if (a.verbose)
      for (const auto& cell : report.cells)
        os << report.identity << ' ' << cell.label << ' ' << (cell.pass ? "pass" : "FAIL") << '\n';
    os << report.identity << " nmax=" << report.n_max << ' ' << (report.passed() ? "PASS" : "FAIL") << " ("
       << report.cells.size() << " cells)\n";
    if (const auto* failure = report.first_failure()) {
      err << report.identity << ": counterexample at " << failure->label << ": " << failure->detail << '\n';
      status = kExitVerificationFailed;
    }
  }
  return status;
}

int do_avg_nse(const AvgNseArgs& a, std::ostream& os, std::ostream& err) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const Rational value = avg_nse(a.n);
  std::optional<Rational> enumerated;
  if (a.oracle) enumerated = avg_nse_enumerated(a.n);
  if (a.format == "json") {
    nlohmann::json j{{"n", a.n}, {"avg_nse", to_string(value)}};
    if (enumerated) j["enumeration"] = to_string(*enumerated);
    os << j.dump() << '\n';
  } else {
    os << value << '\n';
    if (enumerated) os << "enumeration " << *enumerated << ' ' << (*enumerated == value ? "EQUAL" : "DIFFERENT") << '\n';
  }
  if (enumerated && *enumerated != value) {
    err << "formula and enumeration differ\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int do_perm_stats(const PermStatsArgs& a, std::ostream& os) {
  if (a.n < 1 || a.n > kMaxExhaustivePermN)
    throw UsageError("perm-stats needs 1 <= n <= " + std::to_string(kMaxExhaustivePermN));
  const auto nse_counts = nse_distribution(a.n);
  const auto ltr_counts = ltr_max_distribution(a.n);
  os << "j,nse_eq_j,ltr_max_eq_n_minus_j,stirling1_n_n_minus_j\n";
  for (int j = 0; j < a.n; ++j)
    os << j << ',' << nse_counts[j] << ',' << ltr_counts[a.n - j] << ',' << stirling1_unsigned(a.n, a.n - j) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p,q-deformed Touchard polynomials and nsb/nse partition statistics", "pqt"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write results to this file instead of standard output");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a table of exact numbers");
  table_cmd->add_option("--kind", table.kind, "binomial|stirling2|stirling1|stirling1-signed|bell|factorial|q-poly")
      ->check(CLI::IsMember({"binomial", "stirling2", "stirling1", "stirling1-signed", "bell", "factorial", "q-poly"}));
  table_cmd->add_option("--nmax", table.n_max, "Last row")->check(CLI::Range(0, 100000));
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember(kFormats));

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "Expand T_n(x;p,q)");
  expand_cmd->add_option("--n", expand.n, "Degree")->required();
  expand_cmd->add_option("--at", expand.at, "Assignments such as x=1/2,p=2,q=3");
  expand_cmd->add_option("--route", expand.route, "substitution|explicit|composition")
      ->check(CLI::IsMember({"substitution", "explicit", "composition"}));
  expand_cmd->add_option("--format", expand.format)->check(CLI::IsMember(kFormats));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate T_n(x;p,q) at rationals");
  eval_cmd->add_option("--n", eval.n, "Degree")->required();
  eval_cmd->add_option("--x", eval.x);
  eval_cmd->add_option("--p", eval.p);
  eval_cmd->add_option("--q", eval.q);
  eval_cmd->add_flag("--oracle", eval.oracle, "Compare with the rational Taylor-series oracle");
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember({"plain", "json"}));

  EnumerateArgs en;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List partitions in slash notation");
  enumerate_cmd->add_option("--n", en.n)->required();
  enumerate_cmd->add_option("--k", en.k)->required();
  enumerate_cmd->add_option("--flavor", en.flavor, "SSP|LSP|SLP|LLP");
  enumerate_cmd->add_flag("--stats", en.stats, "Append nsb and nse columns");
  enumerate_cmd->add_flag("--force", en.force, "Lift the enumeration budget");
  enumerate_cmd->add_option("--format", en.format)->check(CLI::IsMember({"plain", "csv"}));

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Joint nsb/nse distribution S(n,k;u,v)");
  dist_cmd->add_option("--n", dist.n)->required();
  dist_cmd->add_option("--k", dist.k)->required();
  dist_cmd->add_flag("--oracle", dist.oracle, "Also enumerate LLP and compare");
  dist_cmd->add_flag("--force", dist.force, "Lift the enumeration budget");
  dist_cmd->add_option("--format", dist.format)->check(CLI::IsMember(kFormats));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity cell by cell");
  std::vector<std::string> identity_names{"all"};
  for (Identity id : all_identities()) identity_names.emplace_back(identity_name(id));
  verify_cmd->add_option("--identity", verify.identity)->required()->check(CLI::IsMember(identity_names));
  verify_cmd->add_option("--nmax", verify.n_max)->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--force", verify.force, "Lift the per-identity budget");
  verify_cmd->add_flag("--verbose", verify.verbose, "Print every cell");

  AvgNseArgs avg;
  auto* avg_cmd = app.add_subcommand("avg-nse", "Mean nse over sets of lists of [n]");
  avg_cmd->add_option("--n", avg.n)->required();
  avg_cmd->add_flag("--oracle", avg.oracle, "Also average over enumerated SLP objects");
  avg_cmd->add_option("--format", avg.format)->check(CLI::IsMember({"plain", "json"}));

  PermStatsArgs perm;
  auto* perm_cmd = app.add_subcommand("perm-stats", "nse and left-to-right maxima distributions over S_n");
  perm_cmd->add_option("--n", perm.n)->required();

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& os = out_path.empty() ? out : file;

  try {
    if (table_cmd->parsed()) return do_table(table, os);
    if (expand_cmd->parsed()) return do_expand(expand, os);
    if (eval_cmd->parsed()) return do_eval(eval, os, err);
    if (enumerate_cmd->parsed()) return do_enumerate(en, os);
    if (dist_cmd->parsed()) return do_dist(dist, os, err);
    if (verify_cmd->parsed()) return do_verify(verify, os, err);
    if (avg_cmd->parsed()) return do_avg_nse(avg, os, err);
    if (perm_cmd->parsed()) return do_perm_stats(perm, os);
  } catch (const EnumerationBudgetExceeded& e) {
    err << "error: " << e.what() << " (pass --force to override)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace pqt::cli
