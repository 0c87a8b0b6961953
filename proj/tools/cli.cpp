#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <variant>

#include "format.hpp"
#include "trace_census/asymptotics.hpp"
#include "trace_census/census.hpp"
#include "trace_census/errors.hpp"
#include "trace_census/quadratics.hpp"
#include "verify.hpp"

namespace trace_census::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::uint64_t, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>)
          return v;
        else if constexpr (std::is_same_v<T, double>)
          return format_double(v);
        else
          return std::to_string(v);
      },
      c);
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string s = cell_text(r[i]);
      if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        s = q + "\"";
      }
      os << (i ? "," : "") << s;
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < r.size(); ++i) std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, r[i]);
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

struct Common {
  std::string format = "csv";
  std::string out_path;
};

void emit(const Table& t, const Common& common, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + common.out_path);
    os = &file;
  }
  if (common.format == "json")
    write_json(t, *os);
  else
    write_csv(t, *os);
  os->flush();
  if (!*os) throw std::runtime_error("write failed");
}

void require_n_max(std::uint64_t n_max) {
  if (n_max < 3) throw UsageError("n-max must be ≥ 3");
}

Table census_table(std::uint64_t n_max, unsigned threads) {
  require_n_max(n_max);
  CensusOptions opts;
  opts.threads = threads;
  const auto rep = census(n_max, opts);
  Table t{{"N", "psi_ev", "psi_odd", "psi", "phi", "main_term", "residual", "residual_over_N175"}, {}};
  t.rows.reserve(rep.rows().size());
  for (const auto& r : rep.rows())
    t.rows.push_back({r.n, r.psi_ev, r.psi_odd, r.psi, r.phi, r.main_term, r.residual, r.residual_over_n175});
  return t;
}

Table figures_table(std::uint64_t n_max) {
  require_n_max(n_max);
  const TotientTable tot(n_max / 2 + 1);
  Table t{{"N", "s_n", "c_n", "s_minus_c", "fig2"}, {}};
  for (const auto& r : figure_series(n_max, tot)) t.rows.push_back({r.n, r.s_n, r.c_n, r.s_minus_c, r.fig2});
  return t;
}

Table quadratics_table(std::optional<std::uint64_t> trace_bound, std::optional<double> x_bound) {
  if (trace_bound.has_value() == x_bound.has_value())
    throw UsageError("quadratics needs exactly one of --trace-bound or --x-bound");
  std::uint64_t cut = 0;
  if (trace_bound) {
    cut = *trace_bound;
  } else {
    if (!(*x_bound > 0.0)) throw UsageError("x-bound must be positive");
    cut = trace_cut_for_length(*x_bound);
  }
  Table t{{"period", "per", "eper", "Delta", "u0", "v0", "rho"}, {}};
  if (cut < 3) return t;
  // rho is increasing in u0, so (u0, period) order is (rho, period) order.
  for (const auto& q : enumerate_reduced(cut))
    t.rows.push_back({q.period.to_string(), static_cast<std::uint64_t>(q.per), static_cast<std::uint64_t>(q.eper),
                      q.delta, q.u0, q.v0, q.rho});
  return t;
}

int verify_command(const VerifyOptions& opts, const Common& common, const std::string& format, std::ostream& out) {
  if (opts.n_max < 3) throw UsageError("n-max must be ≥ 3");
  if (!(opts.tol > 0.0)) throw UsageError("tol must be positive");
  const auto rows = run_verify(opts);
  const bool ok = all_pass(rows);
  if (format == "table") {
    std::ofstream file;
    std::ostream* os = &out;
    if (!common.out_path.empty()) {
      file.open(common.out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + common.out_path);
      os = &file;
    }
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    for (const auto& r : rows)
      *os << status_name(r.status) << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail << '\n';
    *os << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  } else {
    Table t{{"check", "status", "detail"}, {}};
    for (const auto& r : rows) t.rows.push_back({r.name, std::string(status_name(r.status)), r.detail});
    Common c = common;
    c.format = format;
    emit(t, c, out);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact trace census for products of A=[[1,0],[1,1]] and B=[[1,1],[0,1]]", "trace-census"};
  app.require_subcommand(1);

  Common common;
  std::uint64_t n_max = 0;
  unsigned threads = 1;
  std::optional<std::uint64_t> trace_bound;
  std::optional<double> x_bound;
  VerifyOptions vopts;
  std::string verify_format = "table";

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out_path, "Output path (default stdout)");
  };

  auto* census_cmd = app.add_subcommand("census", "Psi, Psi_ev, Psi_odd, Phi and main-term residuals for N=3..n-max");
  census_cmd->add_option("--n-max", n_max, "Largest trace N")->required();
  census_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_output(census_cmd);

  auto* figures_cmd = app.add_subcommand("figures", "S_N, C_N, S_N - C_N and the second figure series");
  figures_cmd->add_option("--n-max", n_max, "Largest N")->required();
  add_output(figures_cmd);

  auto* quad_cmd = app.add_subcommand("quadratics", "Reduced quadratic irrationals up to a trace or length bound");
  quad_cmd->add_option("--trace-bound", trace_bound, "Largest Tr(M~)");
  quad_cmd->add_option("--x-bound", x_bound, "Strict bound on rho = 2 log eps0");
  add_output(quad_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the desk-scale verification suite");
  verify_cmd->add_option("--n-max", vopts.n_max, "Census scale")->capture_default_str();
  verify_cmd->add_flag("--strict", vopts.strict, "Include exhaustive word enumeration");
  verify_cmd->add_option("--tol", vopts.tol, "Gauss-orbit relative tolerance")->capture_default_str();
  verify_cmd->add_option("--threads", vopts.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  verify_cmd->add_option("--out", common.out_path, "Output path (default stdout)");
  verify_cmd->add_option("--inject-c2-offset", vopts.c2_offset)->group("");

  std::vector<std::string> argv_store{"trace-census"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (census_cmd->parsed()) emit(census_table(n_max, threads), common, out);
    else if (figures_cmd->parsed()) emit(figures_table(n_max), common, out);
    else if (quad_cmd->parsed()) emit(quadratics_table(trace_bound, x_bound), common, out);
    else if (verify_cmd->parsed()) return verify_command(vopts, common, verify_format, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace trace_census::cli
