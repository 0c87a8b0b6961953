#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trace_census/number_theory.hpp"

namespace trace_census {

/// One row of the trace census. Psi counts monoid elements of trace <= N,
/// Phi those of trace exactly N; Psi = 2 Psi_ev + 2 Psi_odd.
struct CensusRow {
  std::uint64_t n;
  std::uint64_t psi_ev;
  std::uint64_t psi_odd;
  std::uint64_t psi;
  std::uint64_t phi;
  double main_term = 0.0;  // c1 N^2 log N + c2 N^2
  double residual = 0.0;   // Psi - main_term
  double residual_over_n175 = 0.0;
};

/// Rows for N = 3..n_max, in order.
class CensusReport {
 public:
  CensusReport() = default;
  explicit CensusReport(std::vector<CensusRow> rows) : rows_(std::move(rows)) {}

  const std::vector<CensusRow>& rows() const { return rows_; }
  std::uint64_t n_max() const { return rows_.empty() ? 2 : rows_.back().n; }
  const CensusRow& at(std::uint64_t n) const;

  /// Fills main_term / residual columns from c1 N^2 log N + c2 N^2.
  void attach_main_terms(double c1, double c2);

 private:
  std::vector<CensusRow> rows_;
};

/// Counts of words of exact trace N by class: number of letter runs (even or
/// odd, at least two) and first letter.
struct WordClassCounts {
  std::uint64_t even_b = 0;
  std::uint64_t even_a = 0;
  std::uint64_t odd_b = 0;
  std::uint64_t odd_a = 0;

  std::uint64_t total() const { return even_b + even_a + odd_b + odd_a; }
};

/// Exhaustive enumeration of words over {A, B}.
struct BruteForceCensus {
  std::uint64_t n_max = 0;
  std::vector<WordClassCounts> by_trace;  // index = exact trace, 0..n_max

  /// Cumulative counts over traces 3..n.
  WordClassCounts cumulative(std::uint64_t n) const;
  CensusReport to_report() const;
};

/// Depth-first enumeration of every word of trace <= n_max (pure powers,
/// which all have trace 2, excluded). Intended for n_max up to a few thousand.
BruteForceCensus psi_brute(std::uint64_t n_max);

/// Psi_ev(N) = sum_{q < N} N_q(Omega_{N,q}), with the trapezoid for q <= N/2
/// and the triangle for q > N/2.
std::uint64_t psi_ev_formula(std::uint64_t n);
std::uint64_t psi_ev_formula(std::uint64_t n, const InverseCache& cache);

/// Psi_odd(N) = sum_{a < N/2} N_a(translated triangle).
std::uint64_t psi_odd_formula(std::uint64_t n);
std::uint64_t psi_odd_formula(std::uint64_t n, const InverseCache& cache);

/// Psi_odd(N) = sum_{a < N/2} sum_{a < y <= N-a} floor((N - y - x)/a), x the
/// inverse of y mod a in (0, a].
std::uint64_t psi_odd_floorsum(std::uint64_t n);
std::uint64_t psi_odd_floorsum(std::uint64_t n, const InverseCache& cache);

struct CensusOptions {
  unsigned threads = 1;
  /// N^2 coefficient of the main term; defaults to Constants::c2_effective.
  std::optional<double> c2;
};

/// Full census for N = 3..n_max in one O(n_max^2) pass.
///
/// The index sets behind psi_ev_formula ({(q,x,y): 0 < x <= q < y,
/// xy = 1 mod q}, trace x + y) and psi_odd_formula ({(a,x,y): x, y > 0,
/// xy = 1 mod a}, trace x + y + 2a) are histogrammed by trace, then
/// prefix-summed. Moduli are split across threads; the integer reduction
/// makes the result independent of the schedule.
CensusReport census(std::uint64_t n_max, const CensusOptions& opts = {});

}  // namespace trace_census
