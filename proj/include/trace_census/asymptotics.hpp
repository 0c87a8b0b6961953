#pragma once

#include <cstdint>
#include <vector>

#include "trace_census/number_theory.hpp"

namespace trace_census {

/// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Constants of the main terms.
///
/// gamma = 0.57721566490153286 and zeta'(2) = -0.93754825431584376 are stored
/// literals; euler_gamma_series() and zeta2_prime_series() recompute them.
struct Constants {
  double gamma;
  double zeta2;        // pi^2 / 6
  double zeta2_prime;  // zeta'(2)
  double log2;
  double c1;  // 1 / zeta(2)
  /// (gamma - 3/2 - log 2 - zeta'(2)/zeta(2)) / zeta(2), as stated for the
  /// N^2 coefficient of Psi(N).
  double c2;
  /// (gamma - 3/2 - zeta'(2)/zeta(2)) / zeta(2) = c2 + log 2 / zeta(2): the
  /// N^2 coefficient obtained by adding twice the Psi_ev main term
  /// N^2 log 2 / (2 zeta(2)) to twice C_N. The census residuals use this one;
  /// c2 as stated misses the log 2 / zeta(2) contribution of the even words.
  double c2_effective;
};

const Constants& constants();

/// Euler-Maclaurin evaluation of zeta'(2) = -sum log(n)/n^2, summing the
/// first `terms` values directly.
long double zeta2_prime_series(unsigned terms = 1000);

/// gamma = H_m - log m - 1/(2m) + 1/(12 m^2) - 1/(120 m^4) + 1/(252 m^6).
long double euler_gamma_series(unsigned m = 1000);

enum class SumOrder { forward, backward };

/// S_N = sum_{a < N/2} phi(a) (N - 2a)^2 / (2 a^2).
double s_n(std::uint64_t n, const TotientTable& tot, SumOrder order = SumOrder::forward);

/// C_N = N^2 / (2 zeta(2)) * (log N + gamma - log 2 - 3/2 - zeta'(2)/zeta(2)).
double c_n(std::uint64_t n, const Constants& k = constants());

struct TotientPartialSums {
  std::uint64_t sum_phi;         // sum_{a<n} phi(a)
  double sum_phi_over_a;         // sum_{a<n} phi(a)/a
  double sum_phi_over_a2;        // sum_{a<n} phi(a)/a^2
};

TotientPartialSums totient_partial_sums(std::uint64_t n, const TotientTable& tot);

/// (log N + gamma - zeta'(2)/zeta(2)) / zeta(2), the predicted value of
/// sum_{a<N} phi(a)/a^2.
double phi_over_a2_main_term(std::uint64_t n, const Constants& k = constants());

struct FigureRow {
  std::uint64_t n;
  double s_n;
  double c_n;
  double s_minus_c;
  /// sum_{a<N/2} phi(a)(N - 2a)/a - N^2/(4 zeta(2))
  double fig2;
};

/// Rows N = 3..n_max, built from running prefix sums over a < N/2 in
/// O(n_max) total.
std::vector<FigureRow> figure_series(std::uint64_t n_max, const TotientTable& tot,
                                     const Constants& k = constants());

}  // namespace trace_census
