#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "trace_census/cf_word.hpp"
#include "trace_census/mat2.hpp"

namespace trace_census {

/// A reduced (purely periodic) quadratic irrational omega = [a1, ..., an, a1, ...].
///
/// m = M(a1)...M(an); m_tilde = m for even n and m^2 for odd n, so that
/// det m_tilde = 1 and eps0 = (u0 + v0 sqrt(Delta)) / 2 is its spectral radius.
/// The minimal polynomial A w^2 + B w + C has A > 0 and content 1.
struct QuadIrr {
  CFWord period;
  std::size_t per;
  std::size_t eper;
  Mat2 m;
  Mat2 m_tilde;
  std::int64_t A;
  std::int64_t B;
  std::int64_t C;
  std::int64_t delta;
  std::uint64_t u0;
  std::uint64_t v0;
  double rho;  // 2 log eps0

  /// The root of the minimal polynomial in (0, 1).
  long double omega() const;
  /// The Galois conjugate, < -1 for a reduced irrational.
  long double conjugate() const;
  long double epsilon0() const;
};

/// True when the digits are not an exact power of a shorter block.
bool is_primitive(std::span<const std::uint64_t> digits);

/// Builds every field from the period. Throws NonPrimitivePeriod for powers
/// of a shorter word and InvariantViolation if the Pell or integrality
/// checks fail.
QuadIrr build_quad_irr(const CFWord& period);

struct GaussOrbit {
  long double product;   // omega T(omega) ... T^{eper-1}(omega)
  long double expected;  // 1 / eps0
  long double relative_error;
};

/// Iterates the Gauss map T(x) = 1/x - floor(1/x) from omega for eper steps.
/// Each factor lies in (0, 1), so the orbit product equals 1/eps0 (not eps0).
/// Throws NumericalInstability if the digits floor(1/x) drift from the period.
GaussOrbit gauss_orbit(const QuadIrr& q);

bool gauss_orbit_check(const QuadIrr& q, double tol);

/// Rebuilds [[(u - Bv)/2, -Cv], [Av, (u + Bv)/2]] from (u0, v0, A, B, C) and
/// checks that it equals J m_tilde J (the matrix fixing omega under
/// z -> (az + b)/(cz + d)), with trace u0 and determinant +1.
/// Throws InvariantViolation when u0 - B v0 is odd.
bool lambda_consistency(const QuadIrr& q);

/// Visits every reduced omega with Tr(m_tilde) <= trace_bound exactly once,
/// in depth-first digit order.
void for_each_reduced(std::uint64_t trace_bound, const std::function<void(const QuadIrr&)>& visit);

/// All reduced omega with Tr(m_tilde) <= trace_bound, sorted by (u0, period).
std::vector<QuadIrr> enumerate_reduced(std::uint64_t trace_bound);

/// Trace of m_tilde^k from t_k = u0 t_{k-1} - t_{k-2}, t_0 = 2. Throws
/// OverflowError past 64 bits.
std::uint64_t power_trace(std::uint64_t u0, unsigned k);

/// Number of reduced omega per fundamental-unit trace, for counting queries.
///
/// eps0 < Y is decided on the integer trace: for eps0 > 1, eps0 < Y iff
/// Tr(m_tilde) < Y + 1/Y, and for rational Y = P/Q this is the integer
/// comparison Tr * P * Q < P^2 + Q^2.
class ReducedCatalog {
 public:
  explicit ReducedCatalog(std::uint64_t trace_bound);

  std::uint64_t trace_bound() const { return bound_; }
  /// #{omega : Tr(m_tilde) <= t}.
  std::uint64_t count_trace_at_most(std::uint64_t t) const;
  /// r(N) = #{omega : eps0 < N}.
  std::uint64_t r(std::uint64_t n) const;
  /// #{omega : eps0^k < P/Q}, i.e. r((P/Q)^{1/k}).
  std::uint64_t r_root(std::uint64_t p, std::uint64_t q, unsigned k) const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint64_t> cumulative_;  // index = trace
};

/// pi0(X) = #{omega : rho(omega) < X} = #{omega : eps0 < e^{X/2}}.
/// Throws BoundaryAmbiguity when e^{X/2} + e^{-X/2} is within floating error
/// of an integer trace.
std::uint64_t pi0(double x_bound);
std::uint64_t pi0(double x_bound, const ReducedCatalog& catalog);

/// Largest integer trace T with T < e^{X/2} + e^{-X/2}; same ambiguity rule.
std::uint64_t trace_cut_for_length(double x_bound);

struct SandwichReport {
  std::uint64_t n;
  std::uint64_t lower;        // sum_{1<=k<=2 log N} r((N - 1/2)^{1/k})
  std::uint64_t psi_ev;       // Psi_ev(N)
  std::uint64_t upper;        // sum_{1<=k<=2 log N} r(N^{1/k})
  std::uint64_t r_n;          // r(N)
  std::uint64_t psi_ev_next;  // Psi_ev(N + 1)

  bool lower_strict() const { return lower < psi_ev; }
  bool upper_strict() const { return psi_ev < upper; }
  bool upper_attained() const { return psi_ev == upper; }
  bool r_below_next() const { return r_n < psi_ev_next; }
  /// Both inequalities of the sandwich and r(N) < Psi_ev(N+1), all strict.
  bool holds_as_stated() const { return lower_strict() && upper_strict() && r_below_next(); }
  /// Strict lower bound, upper bound with equality allowed.
  bool holds_nonstrict() const { return lower_strict() && psi_ev <= upper && r_below_next(); }
};

/// Evaluates the sandwich at N from exact counts. The catalog must cover
/// traces up to N; psi_ev and psi_ev_next come from the census.
SandwichReport sandwich_check(std::uint64_t n, std::uint64_t psi_ev, std::uint64_t psi_ev_next,
                              const ReducedCatalog& catalog);

}  // namespace trace_census
