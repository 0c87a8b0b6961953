#pragma once

#include <cstdint>
#include <variant>

#include "trace_census/number_theory.hpp"

namespace trace_census {

/// Planar regions over which modular-inverse pairs are counted. Intervals
/// are half-open on the left, (lo, hi], matching the strict/non-strict
/// inequalities of the region definitions below.
namespace region {

/// (x_lo, x_hi] x (y_lo, y_hi].
struct Rect {
  std::int64_t x_lo, x_hi, y_lo, y_hi;
};

/// {0 < x <= q < y <= N - x}; requires q <= N/2.
struct TrapezoidEv {
  std::int64_t n, q;
};

/// {0 < x < N - q, q < y <= N - x}; requires N/2 < q < N.
struct TriangleEv {
  std::int64_t n, q;
};

/// {0 < x <= N - 2a, 0 < y <= N - 2a - x}; requires a < N/2.
struct TriangleOdd {
  std::int64_t n, a;
};

}  // namespace region

using Region = std::variant<region::Rect, region::TrapezoidEv, region::TriangleEv, region::TriangleOdd>;

/// Throws DomainError when the region's parameters break its preconditions.
void validate(const Region& r);

/// Exact real area of the region.
double area(const Region& r);

/// Translate a rectangle by (dx, dy).
region::Rect translated(const region::Rect& r, std::int64_t dx, std::int64_t dy);

/// Number of integer points (x, y) in the region with x*y = 1 (mod q).
///
/// For q = 1 the congruence is vacuous and every lattice point counts.
/// Runs one extended-Euclid inversion per row of the region.
std::uint64_t count_inverse_pairs(std::uint64_t q, const Region& r);

/// Same count, reading inverses from a precomputed table for modulus q.
std::uint64_t count_inverse_pairs(const ResidueInverses& inv, const Region& r);

/// phi(q)/q^2 * Area(region), the expected count.
double main_term(std::uint64_t q, const Region& r, const TotientTable& tot);

}  // namespace trace_census
