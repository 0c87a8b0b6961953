#include "trace_census/quadratics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "trace_census/errors.hpp"

namespace trace_census {

namespace {

constexpr std::uint64_t kMaxTraceBound = 1'000'000;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t to_i64(u128 v, const char* what) {
  if (v > static_cast<u128>(std::numeric_limits<std::int64_t>::max())) throw OverflowError(what);
  return static_cast<std::int64_t>(v);
}

/// Depth-first walk over digit strings with q_n <= bound. Calls
/// visit(digits, trace) for each primitive word whose fundamental trace
/// Tr(m_tilde) is at most bound.
template <typename Visit>
void walk_reduced(std::uint64_t bound, Visit&& visit) {
  std::vector<std::uint64_t> digits;
  // (p_{k-1}, p_k, q_{k-1}, q_k) after k digits; k = 0 starts at (1, 0, 0, 1).
  auto go = [&](auto&& self, std::uint64_t p_prev, std::uint64_t p, std::uint64_t q_prev,
                std::uint64_t q) -> void {
    for (std::uint64_t a = 1;; ++a) {
      const std::uint64_t q_next = a * q + q_prev;
      if (q_next > bound) break;
      const std::uint64_t p_next = a * p + p_prev;
      digits.push_back(a);
      const std::uint64_t t = q_next + p;  // trace of M(a1)...M(an)
      std::uint64_t tr = t;
      bool fits = true;
      if (digits.size() % 2 == 1) {
        // Tr(m^2) = Tr(m)^2 - 2 det m = t^2 + 2.
        fits = t <= bound && t * t + 2 <= bound;
        tr = t * t + 2;
      }
      if (fits && tr <= bound && is_primitive(digits)) visit(std::span<const std::uint64_t>(digits), tr);
      self(self, p, p_next, q, q_next);
      digits.pop_back();
    }
  };
  go(go, 1, 0, 0, 1);
}

void check_bound(std::uint64_t trace_bound) {
  if (trace_bound < 3) throw DomainError("trace bound must be >= 3");
  if (trace_bound > kMaxTraceBound) throw DomainError("trace bound too large for enumeration");
}

/// t_k(u0) saturated at `cap` (returns cap + 1 once exceeded).
std::uint64_t power_trace_capped(std::uint64_t u0, unsigned k, std::uint64_t cap) {
  if (k == 0) return 2;
  u128 prev = 2, cur = u0;
  for (unsigned i = 1; i < k; ++i) {
    if (cur > cap) return cap + 1;
    const u128 next = static_cast<u128>(u0) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur > cap ? cap + 1 : static_cast<std::uint64_t>(cur);
}

}  // namespace

long double QuadIrr::omega() const {
  const long double sd = std::sqrt(static_cast<long double>(delta));
  if (B >= 0) return -2.0L * static_cast<long double>(C) / (static_cast<long double>(B) + sd);
  return (-static_cast<long double>(B) + sd) / (2.0L * static_cast<long double>(A));
}

long double QuadIrr::conjugate() const {
  return static_cast<long double>(C) / (static_cast<long double>(A) * omega());
}

long double QuadIrr::epsilon0() const {
  return (static_cast<long double>(u0) + static_cast<long double>(v0) * std::sqrt(static_cast<long double>(delta))) /
         2.0L;
}

bool is_primitive(std::span<const std::uint64_t> digits) {
  const std::size_t n = digits.size();
  if (n == 0) return false;
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && digits[i] != digits[k]) k = pi[k - 1];
    if (digits[i] == digits[k]) ++k;
    pi[i] = k;
  }
  const std::size_t shortest = n - pi[n - 1];
  return shortest == n || n % shortest != 0;
}

QuadIrr build_quad_irr(const CFWord& period) {
  if (!is_primitive(period.digits())) throw NonPrimitivePeriod("period is a power of a shorter word: " + period.to_string());

  QuadIrr q{period, period.size(), period.size() % 2 == 0 ? period.size() : 2 * period.size(), {}, {}, 0, 0, 0, 0, 0, 0, 0.0};
  q.m = continuant_matrix(period);
  q.m_tilde = q.per % 2 == 0 ? q.m : mat_mul(q.m, q.m);
  if (unit_determinant(q.m_tilde) != 1) throw InvariantViolation("m_tilde must have determinant +1");

  // omega is fixed by z -> (d z + c) / (b z + a) for m_tilde = [[a, b], [c, d]]:
  // b w^2 + (a - d) w - c = 0.
  const Mat2& mt = q.m_tilde;
  if (mt.a > (std::uint64_t{1} << 61) || mt.b > (std::uint64_t{1} << 61) || mt.c > (std::uint64_t{1} << 61))
    throw OverflowError("build_quad_irr");
  const auto a = static_cast<std::int64_t>(mt.a);
  const auto b = static_cast<std::int64_t>(mt.b);
  const auto c = static_cast<std::int64_t>(mt.c);
  const auto d = static_cast<std::int64_t>(mt.d);
  const std::int64_t g = std::gcd(std::gcd(b, a - d), c);
  if (g <= 0 || b == 0) throw InvariantViolation("degenerate fixed-point equation");
  q.A = b / g;
  q.B = (a - d) / g;
  q.C = -c / g;

  const i128 disc = static_cast<i128>(q.B) * q.B - 4 * static_cast<i128>(q.A) * q.C;
  q.delta = to_i64(static_cast<u128>(disc), "discriminant");
  if (q.delta <= 0) throw InvariantViolation("discriminant must be positive");
  const auto root = isqrt(static_cast<std::uint64_t>(q.delta));
  if (root * root == static_cast<std::uint64_t>(q.delta)) throw InvariantViolation("discriminant is a perfect square");

  q.u0 = trace(mt);
  q.v0 = static_cast<std::uint64_t>(g);
  if (static_cast<std::int64_t>(q.v0) * q.A != b) throw InvariantViolation("v0 is not integral");
  const i128 pell = static_cast<i128>(q.u0) * q.u0 - static_cast<i128>(q.delta) * q.v0 * q.v0;
  if (pell != 4) throw InvariantViolation("Pell identity u0^2 - Delta v0^2 = 4 fails");

  q.rho = static_cast<double>(2.0L * std::acosh(static_cast<long double>(q.u0) / 2.0L));
  const long double w = q.omega();
  if (!(w > 0.0L && w < 1.0L)) throw InvariantViolation("omega outside (0, 1)");
  return q;
}

GaussOrbit gauss_orbit(const QuadIrr& q) {
  long double x = q.omega();
  long double product = 1.0L;
  for (std::size_t i = 0; i < q.eper; ++i) {
    if (!(x > 0.0L && x < 1.0L)) throw NumericalInstability("Gauss orbit left (0, 1)");
    const long double inv = 1.0L / x;
    const long double digit = std::floor(inv);
    if (digit != static_cast<long double>(q.period[i % q.per]))
      throw NumericalInstability("Gauss orbit digits drift from the period at step " + std::to_string(i));
    product *= x;
    x = inv - digit;
  }
  const long double expected = 1.0L / q.epsilon0();
  return {product, expected, std::abs(product - expected) / expected};
}

bool gauss_orbit_check(const QuadIrr& q, double tol) { return gauss_orbit(q).relative_error <= tol; }

bool lambda_consistency(const QuadIrr& q) {
  const i128 u = q.u0, v = q.v0;
  const i128 lo = u - static_cast<i128>(q.B) * v;
  const i128 hi = u + static_cast<i128>(q.B) * v;
  if (lo % 2 != 0 || hi % 2 != 0) throw InvariantViolation("lambda inverse has half-integer entries");
  const i128 e00 = lo / 2, e01 = -static_cast<i128>(q.C) * v, e10 = static_cast<i128>(q.A) * v, e11 = hi / 2;
  const Mat2 target = flip(q.m_tilde);
  const bool entries = e00 == target.a && e01 == target.b && e10 == target.c && e11 == target.d;
  const bool tr = e00 + e11 == u;
  const bool det = e00 * e11 - e01 * e10 == 1;
  return entries && tr && det;
}

void for_each_reduced(std::uint64_t trace_bound, const std::function<void(const QuadIrr&)>& visit) {
  check_bound(trace_bound);
  walk_reduced(trace_bound, [&](std::span<const std::uint64_t> digits, std::uint64_t) {
    visit(build_quad_irr(CFWord(std::vector<std::uint64_t>(digits.begin(), digits.end()))));
  });
}

std::vector<QuadIrr> enumerate_reduced(std::uint64_t trace_bound) {
  std::vector<QuadIrr> out;
  for_each_reduced(trace_bound, [&](const QuadIrr& q) { out.push_back(q); });
  std::sort(out.begin(), out.end(), [](const QuadIrr& l, const QuadIrr& r) {
    return l.u0 != r.u0 ? l.u0 < r.u0 : l.period < r.period;
  });
  return out;
}

std::uint64_t power_trace(std::uint64_t u0, unsigned k) {
  const auto t = power_trace_capped(u0, k, std::numeric_limits<std::uint64_t>::max() - 1);
  if (t == std::numeric_limits<std::uint64_t>::max()) throw OverflowError("power_trace");
  return t;
}

ReducedCatalog::ReducedCatalog(std::uint64_t trace_bound) : bound_(trace_bound) {
  check_bound(trace_bound);
  std::vector<std::uint64_t> hist(trace_bound + 1, 0);
  walk_reduced(trace_bound, [&](std::span<const std::uint64_t>, std::uint64_t tr) { ++hist[tr]; });
  cumulative_.resize(trace_bound + 1);
  std::partial_sum(hist.begin(), hist.end(), cumulative_.begin());
}

std::uint64_t ReducedCatalog::count_trace_at_most(std::uint64_t t) const {
  if (t > bound_) throw DomainError("trace beyond catalog bound");
  return cumulative_[t];
}

std::uint64_t ReducedCatalog::r(std::uint64_t n) const { return r_root(n, 1, 1); }

std::uint64_t ReducedCatalog::r_root(std::uint64_t p, std::uint64_t q, unsigned k) const {
  if (q == 0 || k == 0) throw DomainError("r_root: need q > 0 and k > 0");
  if (p <= q) return 0;  // eps0^k > 1
  // eps0^k < P/Q  <=>  t_k * P * Q < P^2 + Q^2, with t_k increasing in u0.
  const u128 rhs = static_cast<u128>(p) * p + static_cast<u128>(q) * q;
  const u128 pq = static_cast<u128>(p) * q;
  const std::uint64_t cap = static_cast<std::uint64_t>(std::min<u128>(rhs / pq + 1, std::numeric_limits<std::uint64_t>::max() - 1));
  auto below = [&](std::uint64_t u0) {
    const std::uint64_t t = power_trace_capped(u0, k, cap);
    return t <= cap && static_cast<u128>(t) * pq < rhs;
  };
  if (below(bound_ + 1)) throw DomainError("r_root: catalog bound too small for this query");
  std::uint64_t lo = 2, hi = bound_ + 1;  // below(lo) holds (t_k(2) = 2), below(hi) fails
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (below(mid) ? lo : hi) = mid;
  }
  return cumulative_[lo];
}

std::uint64_t trace_cut_for_length(double x_bound) {
  if (!(x_bound > 0.0)) throw DomainError("x_bound must be positive");
  const long double y = 2.0L * std::cosh(static_cast<long double>(x_bound) / 2.0L);
  if (!(y < static_cast<long double>(kMaxTraceBound) + 2.0L)) throw DomainError("x_bound too large for enumeration");
  const long double nearest = std::round(y);
  if (std::abs(y - nearest) <= 1e-12L * y)
    throw BoundaryAmbiguity("e^{X/2} + e^{-X/2} is too close to an integer trace to decide");
  return static_cast<std::uint64_t>(std::ceil(y)) - 1;
}

std::uint64_t pi0(double x_bound, const ReducedCatalog& catalog) {
  const std::uint64_t cut = trace_cut_for_length(x_bound);
  if (cut < 3) return 0;
  return catalog.count_trace_at_most(cut);
}

std::uint64_t pi0(double x_bound) {
  const std::uint64_t cut = trace_cut_for_length(x_bound);
  if (cut < 3) return 0;
  return ReducedCatalog(cut).count_trace_at_most(cut);
}

SandwichReport sandwich_check(std::uint64_t n, std::uint64_t psi_ev, std::uint64_t psi_ev_next,
                              const ReducedCatalog& catalog) {
  if (n < 3) throw DomainError("sandwich_check: n must be >= 3");
  SandwichReport rep{n, 0, psi_ev, 0, 0, psi_ev_next};
  const auto k_max = static_cast<unsigned>(std::floor(2.0 * std::log(static_cast<double>(n))));
  for (unsigned k = 1; k <= k_max; ++k) {
    rep.lower += catalog.r_root(2 * n - 1, 2, k);  // (N - 1/2)^{1/k}
    rep.upper += catalog.r_root(n, 1, k);
  }
  rep.r_n = catalog.r(n);
  return rep;
}

}  // namespace trace_census
