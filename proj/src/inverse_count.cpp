#include "trace_census/inverse_count.hpp"

#include <algorithm>

#include "trace_census/checked.hpp"
#include "trace_census/errors.hpp"

namespace trace_census {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

/// Calls f(y, x_lo, x_hi) for every row y of the region, x in (x_lo, x_hi].
template <typename F>
void for_each_row(const Region& r, F&& f) {
  std::visit(overloaded{
                 [&](const region::Rect& R) {
                   for (std::int64_t y = R.y_lo + 1; y <= R.y_hi; ++y) f(y, R.x_lo, R.x_hi);
                 },
                 [&](const region::TrapezoidEv& T) {
                   for (std::int64_t y = T.q + 1; y <= T.n - 1; ++y) f(y, std::int64_t{0}, std::min(T.q, T.n - y));
                 },
                 [&](const region::TriangleEv& T) {
                   // y > q forces N - y <= N - q - 1, so x <= N - y is the binding bound.
                   for (std::int64_t y = T.q + 1; y <= T.n - 1; ++y) f(y, std::int64_t{0}, T.n - y);
                 },
                 [&](const region::TriangleOdd& T) {
                   const std::int64_t side = T.n - 2 * T.a;
                   for (std::int64_t y = 1; y <= side - 1; ++y) f(y, std::int64_t{0}, side - y);
                 },
             },
             r);
}

std::int64_t count_congruent(std::int64_t lo, std::int64_t hi, std::int64_t x0, std::int64_t q) {
  if (hi <= lo) return 0;
  if (lo == 0) {
    // x in (0, hi] with x = x0 (mod q), 0 <= x0 < q
    const auto h = static_cast<std::uint64_t>(hi), r = static_cast<std::uint64_t>(x0), m = static_cast<std::uint64_t>(q);
    if (r == 0) return static_cast<std::int64_t>(h / m);
    return h >= r ? static_cast<std::int64_t>((h - r) / m + 1) : 0;
  }
  return floor_div(hi - x0, q) - floor_div(lo - x0, q);
}

std::int64_t reduce(std::int64_t y, std::int64_t q) {
  const std::int64_t r = y % q;
  return r < 0 ? r + q : r;
}

template <typename InverseOf>
std::uint64_t count_rows(std::uint64_t q, const Region& r, InverseOf&& inverse_of) {
  validate(r);
  if (q == 0) throw DomainError("count_inverse_pairs: modulus must be >= 1");
  const auto qs = static_cast<std::int64_t>(q);
  std::int64_t total = 0;
  std::int64_t residue = -1;  // rows arrive with consecutive y
  for_each_row(r, [&](std::int64_t y, std::int64_t lo, std::int64_t hi) {
    residue = residue < 0 ? reduce(y, qs) : (residue + 1 == qs ? 0 : residue + 1);
    if (hi <= lo) return;
    if (q == 1) {
      total += hi - lo;
      return;
    }
    const auto x0 = inverse_of(static_cast<std::uint64_t>(residue));
    if (!x0) return;
    total += count_congruent(lo, hi, static_cast<std::int64_t>(*x0), qs);
  });
  return static_cast<std::uint64_t>(total);
}

}  // namespace

void validate(const Region& r) {
  std::visit(overloaded{
                 [](const region::Rect& R) {
                   if (R.x_hi < R.x_lo || R.y_hi < R.y_lo) throw DomainError("Rect: empty interval bounds reversed");
                 },
                 [](const region::TrapezoidEv& T) {
                   if (T.q < 1 || 2 * T.q > T.n) throw DomainError("TrapezoidEv: requires 1 <= q <= N/2");
                 },
                 [](const region::TriangleEv& T) {
                   if (2 * T.q <= T.n || T.q >= T.n) throw DomainError("TriangleEv: requires N/2 < q < N");
                 },
                 [](const region::TriangleOdd& T) {
                   if (T.a < 1 || 2 * T.a >= T.n) throw DomainError("TriangleOdd: requires 1 <= a < N/2");
                 },
             },
             r);
}

double area(const Region& r) {
  validate(r);
  return std::visit(overloaded{
                        [](const region::Rect& R) {
                          return static_cast<double>(R.x_hi - R.x_lo) * static_cast<double>(R.y_hi - R.y_lo);
                        },
                        [](const region::TrapezoidEv& T) {
                          return static_cast<double>(T.q) * static_cast<double>(2 * T.n - 3 * T.q) / 2.0;
                        },
                        [](const region::TriangleEv& T) {
                          const auto s = static_cast<double>(T.n - T.q);
                          return s * s / 2.0;
                        },
                        [](const region::TriangleOdd& T) {
                          const auto s = static_cast<double>(T.n - 2 * T.a);
                          return s * s / 2.0;
                        },
                    },
                    r);
}

region::Rect translated(const region::Rect& r, std::int64_t dx, std::int64_t dy) {
  return {r.x_lo + dx, r.x_hi + dx, r.y_lo + dy, r.y_hi + dy};
}

std::uint64_t count_inverse_pairs(std::uint64_t q, const Region& r) {
  return count_rows(q, r, [q](std::uint64_t y) { return mod_inverse(y, q); });
}

std::uint64_t count_inverse_pairs(const ResidueInverses& inv, const Region& r) {
  return count_rows(inv.modulus(), r, [&inv](std::uint64_t y) -> std::optional<std::uint64_t> {
    if (!inv.is_unit(y)) return std::nullopt;
    return inv.inverse(y);
  });
}

double main_term(std::uint64_t q, const Region& r, const TotientTable& tot) {
  const auto qd = static_cast<double>(q);
  return static_cast<double>(tot(q)) / (qd * qd) * area(r);
}

}  // namespace trace_census
