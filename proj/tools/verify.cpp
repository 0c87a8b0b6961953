#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "format.hpp"
#include "trace_census/asymptotics.hpp"
#include "trace_census/census.hpp"
#include "trace_census/cf_word.hpp"
#include "trace_census/quadratics.hpp"

namespace trace_census::cli {

namespace {

CheckRow row(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckRow info(std::string name, std::string detail) { return {std::move(name), CheckStatus::info, std::move(detail)}; }

std::string first_mismatch(std::uint64_t n) { return "first mismatch at N=" + std::to_string(n); }

void census_checks(const VerifyOptions& opts, const CensusReport& rep, std::vector<CheckRow>& out) {
  const auto& k = constants();
  const std::uint64_t n_max = opts.n_max;

  {
    const bool ok = rep.at(3).psi == 2 && (n_max < 4 || (rep.at(4).phi == 6 && rep.at(4).psi_ev == 3 &&
                                                          rep.at(4).psi_odd == 1));
    out.push_back(row("census.spot_values", ok, "Psi(3)=2, Phi(4)=6, Psi_ev(4)=3, Psi_odd(4)=1"));
  }
  {
    const std::uint64_t top = std::min<std::uint64_t>(n_max, 500);
    const InverseCache cache(top);
    std::uint64_t bad = 0;
    for (std::uint64_t n = 3; n <= top && bad == 0; ++n) {
      const auto& r = rep.at(n);
      if (psi_ev_formula(n, cache) != r.psi_ev || psi_odd_formula(n, cache) != r.psi_odd) bad = n;
    }
    out.push_back(row("census.region_formulas", bad == 0,
                      bad ? first_mismatch(bad) : "per-N region sums match the census for N<=" + std::to_string(top)));
  }
  if (opts.strict) {
    const std::uint64_t top = std::min<std::uint64_t>(n_max, 500);
    const auto brute = psi_brute(top);
    std::uint64_t bad = 0;
    WordClassCounts c;
    for (std::uint64_t n = 3; n <= top && bad == 0; ++n) {
      const auto& b = brute.by_trace[n];
      c.even_b += b.even_b;
      c.even_a += b.even_a;
      c.odd_b += b.odd_b;
      c.odd_a += b.odd_a;
      const auto& r = rep.at(n);
      if (c.even_b != r.psi_ev || c.odd_b != r.psi_odd || c.total() != r.psi || b.total() != r.phi) bad = n;
      if (c.even_a != c.even_b || c.odd_a != c.odd_b) bad = n;
    }
    out.push_back(row("census.brute_force", bad == 0,
                      bad ? first_mismatch(bad) : "word enumeration matches exactly for N<=" + std::to_string(top)));
  }
  {
    std::uint64_t bad = 0;
    for (const auto& r : rep.rows())
      if (r.psi != 2 * r.psi_ev + 2 * r.psi_odd) bad = r.n;
    out.push_back(row("census.decomposition", bad == 0, "Psi = 2 Psi_ev + 2 Psi_odd for every row"));
  }
  {
    const std::uint64_t top = std::min<std::uint64_t>(n_max, 2000);
    const InverseCache cache(top / 2 + 1);
    std::uint64_t bad = 0;
    for (std::uint64_t n = 3; n <= top && bad == 0; ++n)
      if (psi_odd_floorsum(n, cache) != rep.at(n).psi_odd) bad = n;
    out.push_back(row("census.floorsum", bad == 0,
                      bad ? first_mismatch(bad) : "floor-sum form matches for N<=" + std::to_string(top)));
  }
  {
    const double n = static_cast<double>(n_max);
    const double psi = static_cast<double>(rep.at(n_max).psi);
    auto ratio = [&](double c2) { return psi / (k.c1 * n * n * std::log(n) + c2 * n * n) - 1.0; };
    const double eff = ratio(k.c2_effective + opts.c2_offset);
    out.push_back(row("asymptotic.psi_ratio", std::abs(eff) <= 0.02,
                      "N=" + std::to_string(n_max) + " |ratio-1|=" + format_general(std::abs(eff)) +
                          " (c2_effective, limit 0.02)"));
    const double stated = ratio(k.c2 + opts.c2_offset);
    out.push_back(info("asymptotic.psi_ratio_stated_c2",
                       "|ratio-1|=" + format_general(std::abs(stated)) + " with c2=" + format_general(k.c2) +
                           "; misses the log2/zeta(2) N^2 term"));

    double fitted = 0.0;
    std::string table;
    for (std::uint64_t m : {1000, 2000, 5000, 10000, 20000}) {
      if (m > n_max) continue;
      const double v = std::abs(rep.at(m).residual) / std::pow(static_cast<double>(m), 1.75);
      fitted = std::max(fitted, v);
      table += " " + std::to_string(m) + ":" + format_general(v, 4);
    }
    if (table.empty())
      out.push_back(info("asymptotic.residual_fit", "no table point N in {1e3, 2e3, 5e3, 1e4, 2e4} is <= n-max"));
    else
      out.push_back(row("asymptotic.residual_fit", fitted <= 1.0,
                        "max |Psi_0|/N^1.75 = " + format_general(fitted, 4) + " (limit 1.0);" + table));
  }
  {
    const std::uint64_t m = std::min<std::uint64_t>(n_max, 10000);
    const double n = static_cast<double>(m);
    const double ratio = static_cast<double>(rep.at(m).psi_ev) / (n * n * k.log2 / (2.0 * k.zeta2)) - 1.0;
    out.push_back(row("asymptotic.psi_ev_ratio", std::abs(ratio) <= 0.05,
                      "N=" + std::to_string(m) + " |ratio-1|=" + format_general(std::abs(ratio)) + " (limit 0.05)"));
  }
}

void figure_checks(const VerifyOptions& opts, std::vector<CheckRow>& out) {
  {
    const auto& k = constants();
    const double dz = std::abs(static_cast<double>(zeta2_prime_series(20000)) - k.zeta2_prime);
    const double dg = std::abs(static_cast<double>(euler_gamma_series(1000)) - k.gamma);
    out.push_back(row("constants.series", dz <= 1e-10 && dg <= 1e-10,
                      "|zeta'(2) series - literal|=" + format_general(dz, 3) +
                          ", |gamma series - literal|=" + format_general(dg, 3) + " (limit 1e-10)"));
  }
  const TotientTable tot(std::max<std::uint64_t>(opts.n_max, 100000));
  {
    double worst = 0.0;
    std::uint64_t at = 3;
    for (const auto& r : figure_series(opts.n_max, tot)) {
      const double v = std::abs(r.s_minus_c) / static_cast<double>(r.n);
      if (v > worst) worst = v, at = r.n;
    }
    out.push_back(row("asymptotic.s_minus_c", worst <= 2.0,
                      "max |S_N-C_N|/N = " + format_general(worst, 4) + " at N=" + std::to_string(at) + " (limit 2)"));
  }
  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t n : {1000, 10000, 100000}) {
      const auto sums = totient_partial_sums(n, tot);
      const double err = std::abs(sums.sum_phi_over_a2 - phi_over_a2_main_term(n));
      const double scaled = err / (std::log(static_cast<double>(n)) / static_cast<double>(n));
      ok = ok && scaled <= 10.0;
      detail += std::to_string(n) + ":" + format_general(scaled, 4) + " ";
    }
    out.push_back(row("asymptotic.phi_over_a2", ok, "error/(log N/N): " + detail + "(limit 10)"));
  }
}

void quadratic_checks(const VerifyOptions& opts, const CensusReport& rep, std::vector<CheckRow>& out) {
  const std::uint64_t bound = std::max<std::uint64_t>(std::min<std::uint64_t>(opts.n_max, 2000), 4);
  const auto all = enumerate_reduced(bound);
  {
    std::uint64_t pell_bad = 0, lambda_bad = 0, gauss_bad = 0, gauss_n = 0;
    for (const auto& q : all) {
      const i128 lhs = static_cast<i128>(q.u0) * q.u0 - static_cast<i128>(q.delta) * q.v0 * q.v0;
      if (lhs != 4) ++pell_bad;
      if (!lambda_consistency(q)) ++lambda_bad;
      if (q.eper <= 20) {
        ++gauss_n;
        if (!gauss_orbit_check(q, opts.tol)) ++gauss_bad;
      }
    }
    const std::string count = std::to_string(all.size()) + " periods with trace<=" + std::to_string(bound);
    out.push_back(row("quadratics.pell", pell_bad == 0, count + ", failures " + std::to_string(pell_bad)));
    out.push_back(row("quadratics.lambda", lambda_bad == 0, count + ", failures " + std::to_string(lambda_bad)));
    out.push_back(row("quadratics.gauss_orbit", gauss_bad == 0,
                      std::to_string(gauss_n) + " periods with eper<=20, tol " + format_general(opts.tol) +
                          ", failures " + std::to_string(gauss_bad)));
  }

  const ReducedCatalog catalog(bound);
  out.push_back(row("quadratics.r_small", catalog.r(3) == 1 && catalog.r(4) == 3,
                    "r(3)=" + std::to_string(catalog.r(3)) + " r(4)=" + std::to_string(catalog.r(4))));
  {
    const std::uint64_t top = std::min<std::uint64_t>(opts.n_max, 200);
    std::uint64_t bad = 0;
    for (std::uint64_t n = 3; n <= top && bad == 0; ++n) {
      std::uint64_t count = 0;
      for (const auto& q : all) {
        if (q.u0 > n) break;
        for (unsigned k = 1;; ++k) {
          if (power_trace(q.u0, k) > n) break;
          ++count;
        }
      }
      if (count != rep.at(n).psi_ev) bad = n;
    }
    out.push_back(row("quadratics.counting_bridge", bad == 0,
                      bad ? first_mismatch(bad) : "sum_k #{Tr(m_tilde^k)<=N} = Psi_ev(N) for N<=" + std::to_string(top)));
  }
  {
    const std::uint64_t top = std::min<std::uint64_t>(bound, opts.n_max - 1);
    std::uint64_t lower_bad = 0, next_bad = 0, eq_bad = 0, strict_hits = 0, checked = 0;
    for (std::uint64_t n = 10; n <= top; ++n) {
      const auto s = sandwich_check(n, rep.at(n).psi_ev, rep.at(n + 1).psi_ev, catalog);
      ++checked;
      if (!s.lower_strict()) lower_bad = lower_bad ? lower_bad : n;
      if (!s.r_below_next()) next_bad = next_bad ? next_bad : n;
      if (!s.upper_attained()) eq_bad = eq_bad ? eq_bad : n;
      if (s.upper_strict()) ++strict_hits;
    }
    const std::string range = "10<=N<=" + std::to_string(top);
    out.push_back(row("quadratics.sandwich_lower", lower_bad == 0 && next_bad == 0,
                      lower_bad || next_bad ? first_mismatch(std::max(lower_bad, next_bad))
                                            : "lower bound and r(N)<Psi_ev(N+1) strict for " + range));
    out.push_back(row("quadratics.sandwich_upper_equality", eq_bad == 0,
                      eq_bad ? first_mismatch(eq_bad) : "Psi_ev(N) = sum_k r(N^{1/k}) for " + range));
    out.push_back(info("quadratics.sandwich_upper_strict", "strict upper bound held at " + std::to_string(strict_hits) +
                                                               " of " + std::to_string(checked) +
                                                               " N (it is an identity, so never strict)"));
  }
  {
    const std::uint64_t n = std::min<std::uint64_t>(bound, 2000);
    const auto& k = constants();
    const double nd = static_cast<double>(n);
    const double ratio = static_cast<double>(catalog.r(n)) / (nd * nd * k.log2 / (2.0 * k.zeta2)) - 1.0;
    out.push_back(row("quadratics.r_ratio", std::abs(ratio) <= 0.10,
                      "N=" + std::to_string(n) + " |r(N)/main-1|=" + format_general(std::abs(ratio)) + " (limit 0.10)"));
  }
}

void word_checks(std::vector<CheckRow>& out) {
  std::mt19937_64 rng(0x5eed'2024ULL);
  std::uniform_int_distribution<std::size_t> len(1, 20);
  std::uniform_int_distribution<std::uint64_t> digit(1, 10);
  std::uint64_t bad = 0;
  constexpr int kWords = 10000;
  for (int i = 0; i < kWords; ++i) {
    std::vector<std::uint64_t> d(len(rng));
    for (auto& x : d) x = digit(rng);
    const CFWord w(std::move(d));
    const auto m = continuant_matrix<u128>(w);
    const auto r = continuant_matrix<u128>(w.reversed());
    const int sign = w.size() % 2 == 0 ? 1 : -1;
    const bool det_ok = unit_determinant(m) == sign;
    const bool rev_ok = r.a == m.a && r.b == m.c && r.c == m.b && r.d == m.d;
    const bool trip_ok = matrix_to_word(word_to_matrix<u128>(w)) == w;
    if (!(det_ok && rev_ok && trip_ok)) ++bad;
  }
  out.push_back(row("words.round_trip", bad == 0,
                    std::to_string(kWords) + " random words (length<=20, digits<=10), failures " + std::to_string(bad)));
}

}  // namespace

std::vector<CheckRow> run_verify(const VerifyOptions& opts) {
  if (opts.n_max < 3) throw DomainError("n-max must be >= 3");
  std::vector<CheckRow> out;
  CensusOptions copts;
  copts.threads = opts.threads;
  const auto rep = census(opts.n_max, copts);
  census_checks(opts, rep, out);
  figure_checks(opts, out);
  quadratic_checks(opts, rep, out);
  word_checks(out);
  return out;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.status == CheckStatus::fail; });
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::info: return "INFO";
  }
  return "?";
}

}  // namespace trace_census::cli
