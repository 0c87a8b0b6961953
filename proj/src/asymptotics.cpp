#include "trace_census/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "trace_census/errors.hpp"

namespace trace_census {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

const Constants& constants() {
  static const Constants k = [] {
    Constants c{};
    c.gamma = 0.57721566490153286;
    c.zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    c.zeta2_prime = -0.93754825431584376;
    c.log2 = std::numbers::ln2;
    c.c1 = 1.0 / c.zeta2;
    c.c2 = (c.gamma - 1.5 - c.log2 - c.zeta2_prime / c.zeta2) / c.zeta2;
    c.c2_effective = (c.gamma - 1.5 - c.zeta2_prime / c.zeta2) / c.zeta2;
    return c;
  }();
  return k;
}

long double zeta2_prime_series(unsigned terms) {
  if (terms < 2) throw DomainError("zeta2_prime_series: need at least 2 terms");
  long double head = 0.0L;
  for (unsigned n = terms - 1; n >= 2; --n) {
    const long double x = n;
    head += std::log(x) / (x * x);
  }
  // Tail sum_{n >= M} f(n), f(x) = log x / x^2, by Euler-Maclaurin:
  // integral + f/2 - f'/12 + f'''/720 - f^(5)/30240.
  const long double m = terms;
  const long double L = std::log(m);
  const long double integral = (L + 1.0L) / m;
  const long double f = L / (m * m);
  const long double f1 = (1.0L - 2.0L * L) / std::pow(m, 3.0L);
  const long double f3 = (26.0L - 24.0L * L) / std::pow(m, 5.0L);
  const long double f5 = (1044.0L - 720.0L * L) / std::pow(m, 7.0L);
  const long double tail = integral + f / 2.0L - f1 / 12.0L + f3 / 720.0L - f5 / 30240.0L;
  return -(head + tail);
}

long double euler_gamma_series(unsigned m) {
  if (m < 1) throw DomainError("euler_gamma_series: m must be >= 1");
  long double h = 0.0L;
  for (unsigned k = m; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
  const long double x = m;
  const long double x2 = x * x;
  return h - std::log(x) - 1.0L / (2.0L * x) + 1.0L / (12.0L * x2) - 1.0L / (120.0L * x2 * x2) +
         1.0L / (252.0L * x2 * x2 * x2);
}

double s_n(std::uint64_t n, const TotientTable& tot, SumOrder order) {
  if (n < 3) throw DomainError("s_n: n must be >= 3");
  const std::uint64_t a_max = (n - 1) / 2;  // a < n/2
  if (a_max > tot.n_max()) throw DomainError("s_n: totient table too small");
  auto term = [&](std::uint64_t a) {
    const double ad = static_cast<double>(a);
    const double w = static_cast<double>(n - 2 * a);
    return static_cast<double>(tot(a)) * w * w / (2.0 * ad * ad);
  };
  CompensatedSum s;
  if (order == SumOrder::forward) {
    for (std::uint64_t a = 1; a <= a_max; ++a) s += term(a);
  } else {
    for (std::uint64_t a = a_max; a >= 1; --a) s += term(a);
  }
  return s.value();
}

double c_n(std::uint64_t n, const Constants& k) {
  if (n < 1) throw DomainError("c_n: n must be >= 1");
  const double nd = static_cast<double>(n);
  return nd * nd / (2.0 * k.zeta2) *
         (std::log(nd) + k.gamma - k.log2 - 1.5 - k.zeta2_prime / k.zeta2);
}

TotientPartialSums totient_partial_sums(std::uint64_t n, const TotientTable& tot) {
  if (n < 2) throw DomainError("totient_partial_sums: n must be >= 2");
  if (n - 1 > tot.n_max()) throw DomainError("totient_partial_sums: totient table too small");
  std::uint64_t s0 = 0;
  CompensatedSum s1, s2;
  for (std::uint64_t a = 1; a < n; ++a) {
    const auto ph = tot(a);
    const double ad = static_cast<double>(a);
    s0 += ph;
    s1 += static_cast<double>(ph) / ad;
    s2 += static_cast<double>(ph) / (ad * ad);
  }
  return {s0, s1.value(), s2.value()};
}

double phi_over_a2_main_term(std::uint64_t n, const Constants& k) {
  return (std::log(static_cast<double>(n)) + k.gamma - k.zeta2_prime / k.zeta2) / k.zeta2;
}

std::vector<FigureRow> figure_series(std::uint64_t n_max, const TotientTable& tot, const Constants& k) {
  if (n_max < 3) throw DomainError("figure_series: n_max must be >= 3");
  if ((n_max - 1) / 2 > tot.n_max()) throw DomainError("figure_series: totient table too small");
  // With P0 = sum phi(a), P1 = sum phi(a)/a, P2 = sum phi(a)/a^2 over a < N/2:
  //   S_N  = N^2/2 P2 - 2N P1 + 2 P0
  //   fig2 = N P1 - 2 P0 - N^2/(4 zeta(2))
  std::vector<FigureRow> rows;
  rows.reserve(n_max - 2);
  std::uint64_t a_done = 0;
  std::uint64_t p0 = 0;
  CompensatedSum p1, p2;
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    for (const std::uint64_t a_max = (n - 1) / 2; a_done < a_max;) {
      ++a_done;
      const auto ph = tot(a_done);
      const double ad = static_cast<double>(a_done);
      p0 += ph;
      p1 += static_cast<double>(ph) / ad;
      p2 += static_cast<double>(ph) / (ad * ad);
    }
    const double nd = static_cast<double>(n);
    CompensatedSum s;
    s += nd * nd / 2.0 * p2.value();
    s += -2.0 * nd * p1.value();
    s += 2.0 * static_cast<double>(p0);
    CompensatedSum f;
    f += nd * p1.value();
    f += -2.0 * static_cast<double>(p0);
    f += -nd * nd / (4.0 * k.zeta2);
    const double cn = c_n(n, k);
    rows.push_back({n, s.value(), cn, s.value() - cn, f.value()});
  }
  return rows;
}

}  // namespace trace_census
