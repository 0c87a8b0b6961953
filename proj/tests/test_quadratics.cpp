#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "trace_census/census.hpp"
#include "trace_census/errors.hpp"
#include "trace_census/quadratics.hpp"

using namespace trace_census;

namespace {

bool naive_primitive(const std::vector<std::uint64_t>& d) {
  const std::size_t n = d.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = d[i] == d[i - p];
    if (periodic) return false;
  }
  return true;
}

/// Primitive digit strings with Tr(M~) <= bound, from oracle matrix products.
std::set<std::vector<std::uint64_t>> oracle_reduced(std::uint64_t bound) {
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  auto go = [&](auto&& self, const oracle::Mat& m) -> void {
    for (std::uint64_t a = 1;; ++a) {
      const oracle::Mat next = oracle::mul(m, oracle::Mat{a, 1, 1, 0});
      if (next.a > bound) break;  // q_n
      cur.push_back(a);
      const oracle::Mat tilde = cur.size() % 2 == 0 ? next : oracle::mul(next, next);
      if (tilde.a + tilde.d <= bound && naive_primitive(cur)) out.insert(cur);
      self(self, next);
      cur.pop_back();
    }
  };
  go(go, oracle::kI);
  return out;
}

std::vector<std::uint64_t> digits_of(const QuadIrr& q) { return {q.period.digits().begin(), q.period.digits().end()}; }

}  // namespace

TEST_CASE("examples") {
  auto q = build_quad_irr(CFWord{1});
  CHECK(q.per == 1);
  CHECK(q.eper == 2);
  CHECK(q.m_tilde == Mat2{2, 1, 1, 1});
  CHECK(q.A == 1);
  CHECK(q.B == 1);
  CHECK(q.C == -1);
  CHECK(q.delta == 5);
  CHECK(q.u0 == 3);
  CHECK(q.v0 == 1);
  CHECK(static_cast<double>(q.omega()) == doctest::Approx((std::sqrt(5.0) - 1) / 2));
  CHECK(static_cast<double>(q.epsilon0()) == doctest::Approx((3 + std::sqrt(5.0)) / 2));
  CHECK(q.rho == doctest::Approx(1.9248).epsilon(1e-4));

  q = build_quad_irr(CFWord{2});
  CHECK(q.A == 1);
  CHECK(q.B == 2);
  CHECK(q.C == -1);
  CHECK(q.delta == 8);
  CHECK(q.u0 == 6);
  CHECK(q.v0 == 2);
  CHECK(static_cast<double>(q.omega()) == doctest::Approx(std::sqrt(2.0) - 1));
  CHECK(q.rho == doctest::Approx(3.5255).epsilon(1e-4));

  q = build_quad_irr(CFWord{1, 2});
  CHECK(q.eper == 2);
  CHECK(q.m_tilde == Mat2{3, 1, 2, 1});
  CHECK(q.u0 == 4);
  CHECK(static_cast<double>(q.epsilon0()) == doctest::Approx(2 + std::sqrt(3.0)));
  CHECK(static_cast<double>(q.epsilon0() + 1 / q.epsilon0()) == doctest::Approx(4.0));
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(CFWord{1, 2}.digits()));
  CHECK(is_primitive(CFWord{1, 1, 2}.digits()));
  CHECK_FALSE(is_primitive(CFWord{1, 1}.digits()));
  CHECK_FALSE(is_primitive(CFWord{1, 2, 1, 2}.digits()));
  CHECK_FALSE(is_primitive(CFWord{3, 1, 4, 3, 1, 4, 3, 1, 4}.digits()));
  CHECK_THROWS_AS(build_quad_irr(CFWord{2, 2}), NonPrimitivePeriod);
  CHECK_THROWS_AS(build_quad_irr(CFWord{1, 2, 1, 2}), DomainError);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 3000; ++i) {
    auto d = oracle::random_digits(rng, 8, 2);
    CHECK(is_primitive(d) == naive_primitive(d));
  }
}

TEST_CASE("Gauss orbit uses the reciprocal convention") {
  for (const CFWord& w : {CFWord{1}, CFWord{2}, CFWord{1, 2}}) {
    const auto q = build_quad_irr(w);
    const auto g = gauss_orbit(q);
    CHECK(static_cast<double>(g.product) == doctest::Approx(static_cast<double>(1 / q.epsilon0())).epsilon(1e-12));
    CHECK(gauss_orbit_check(q, 1e-9));
  }
  const auto q1 = build_quad_irr(CFWord{1});
  CHECK(static_cast<double>(gauss_orbit(q1).product) == doctest::Approx(static_cast<double>(q1.omega() * q1.omega())));

  // Error grows like eps0^2 over one period, far beyond long double.
  std::vector<std::uint64_t> d(40, 1);
  d.push_back(2);
  CHECK_THROWS_AS(gauss_orbit(build_quad_irr(CFWord(d))), NumericalInstability);
}

TEST_CASE("lambda consistency") {
  const auto q = build_quad_irr(CFWord{1});
  // [[(3-1)/2, 1], [1, (3+1)/2]] is J M~ J.
  CHECK(flip(q.m_tilde) == Mat2{1, 1, 1, 2});
  CHECK(lambda_consistency(q));
  auto broken = q;
  broken.C = -2;
  CHECK_FALSE(lambda_consistency(broken));
  broken = q;
  broken.B = 2;
  CHECK_THROWS_AS(lambda_consistency(broken), InvariantViolation);
}

TEST_CASE("enumeration examples") {
  auto v = enumerate_reduced(3);
  REQUIRE(v.size() == 1);
  CHECK(v[0].period == CFWord{1});
  v = enumerate_reduced(4);
  REQUIRE(v.size() == 3);
  CHECK(v[0].period == CFWord{1});
  CHECK(v[1].period == CFWord{1, 2});
  CHECK(v[2].period == CFWord{2, 1});
  CHECK_THROWS_AS(enumerate_reduced(2), DomainError);
}

TEST_CASE("enumeration matches an oracle search and every invariant holds") {
  constexpr std::uint64_t kBound = 400;
  const auto v = enumerate_reduced(kBound);
  const auto expected = oracle_reduced(kBound);
  std::set<std::vector<std::uint64_t>> got;
  std::set<std::array<std::int64_t, 3>> polys;
  for (const auto& q : v) {
    got.insert(digits_of(q));
    polys.insert({q.A, q.B, q.C});
    CHECK(q.u0 <= kBound);
    CHECK(static_cast<i128>(q.u0) * q.u0 - static_cast<i128>(q.delta) * q.v0 * q.v0 == 4);
    CHECK(std::gcd(std::gcd(q.A, q.B), q.C) == 1);
    CHECK(q.A > 0);
    const long double w = q.omega();
    CHECK(w > 0.0L);
    CHECK(w < 1.0L);
    CHECK(q.conjugate() < -1.0L);
    CHECK(static_cast<double>(std::abs(q.A * w * w + q.B * w + q.C)) <= 1e-12 * static_cast<double>(q.A + std::abs(q.B)));
    const long double e = q.epsilon0();
    CHECK(static_cast<double>(std::abs(e + 1 / e - q.u0)) <= 1e-12 * static_cast<double>(q.u0));
    CHECK(lambda_consistency(q));
    if (q.eper <= 20) CHECK(gauss_orbit_check(q, 1e-9));
  }
  CHECK(got == expected);
  CHECK(polys.size() == v.size());
  CHECK(std::is_sorted(v.begin(), v.end(), [](const QuadIrr& l, const QuadIrr& r) {
    return l.u0 != r.u0 ? l.u0 < r.u0 : l.period < r.period;
  }));
}

TEST_CASE("oracle: brute-force Pell solutions are the fundamental units") {
  for (const auto& q : enumerate_reduced(200)) {
    const auto [u, v] = oracle::pell_fundamental(static_cast<std::uint64_t>(q.delta));
    CHECK(u == q.u0);
    CHECK(v == q.v0);
  }
}

TEST_CASE("oracle: eps0 is the spectral radius of M~") {
  for (const auto& q : enumerate_reduced(300)) {
    Eigen::Matrix2d m;
    m << static_cast<double>(q.m_tilde.a), static_cast<double>(q.m_tilde.b), static_cast<double>(q.m_tilde.c),
        static_cast<double>(q.m_tilde.d);
    const double radius = m.eigenvalues().cwiseAbs().maxCoeff();
    CHECK(radius == doctest::Approx(static_cast<double>(q.epsilon0())).epsilon(1e-12));
    CHECK(q.rho == doctest::Approx(2 * std::log(radius)).epsilon(1e-12));
  }
}

TEST_CASE("power traces") {
  for (const auto& q : enumerate_reduced(60)) {
    oracle::Mat m{q.m_tilde.a, q.m_tilde.b, q.m_tilde.c, q.m_tilde.d};
    oracle::Mat p = oracle::kI;
    for (unsigned k = 0; k <= 6; ++k) {
      CHECK(power_trace(q.u0, k) == static_cast<std::uint64_t>(p.a + p.d));
      p = oracle::mul(p, m);
    }
  }
  CHECK_THROWS_AS(power_trace(1000, 20), OverflowError);
}

TEST_CASE("catalog counts") {
  const ReducedCatalog cat(500);
  CHECK(cat.r(3) == 1);
  CHECK(cat.r(4) == 3);
  CHECK(cat.r(2) == 0);
  CHECK(cat.count_trace_at_most(500) == enumerate_reduced(500).size());
  CHECK_THROWS_AS(cat.count_trace_at_most(501), DomainError);
  CHECK_THROWS_AS(cat.r_root(600, 1, 1), DomainError);

  // r_root against floating evaluation away from boundaries.
  const auto all = enumerate_reduced(500);
  std::mt19937_64 rng(32);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t qd = std::uniform_int_distribution<std::uint64_t>(1, 9)(rng);
    const std::uint64_t pd = std::uniform_int_distribution<std::uint64_t>(qd + 1, 480 * qd)(rng);
    const unsigned k = std::uniform_int_distribution<unsigned>(1, 4)(rng);
    const long double y = static_cast<long double>(pd) / qd;
    bool near = false;
    std::uint64_t count = 0;
    for (const auto& q : all) {
      const long double ek = std::pow(q.epsilon0(), static_cast<long double>(k));
      if (std::abs(ek - y) < 1e-9L * y) near = true;
      if (ek < y) ++count;
    }
    if (near) continue;
    ++compared;
    CHECK(cat.r_root(pd, qd, k) == count);
  }
  CHECK(compared > 250);
}

TEST_CASE("pi0") {
  const double rho1 = 2 * std::log((3 + std::sqrt(5.0)) / 2);
  CHECK(pi0(rho1 + 1e-6) == 1);
  CHECK(pi0(rho1 - 1e-6) == 0);
  CHECK(pi0(2 * std::log(4.1)) == 3);
  CHECK_THROWS_AS(pi0(2 * std::acosh(2.5)), BoundaryAmbiguity);
  CHECK_THROWS_AS(pi0(0.0), DomainError);
  const ReducedCatalog cat(2000);
  CHECK(pi0(2 * std::log(1000.5), cat) == cat.r(1000));
  CHECK(trace_cut_for_length(2 * std::log(1000.5)) == 1000);
}

TEST_CASE("counting bridge and sandwich") {
  const auto rep = census(201);
  const auto all = enumerate_reduced(200);
  for (std::uint64_t n = 3; n <= 200; ++n) {
    std::uint64_t count = 0;
    for (const auto& q : all) {
      oracle::Mat m{q.m_tilde.a, q.m_tilde.b, q.m_tilde.c, q.m_tilde.d};
      for (oracle::Mat p = m; p.a + p.d <= n; p = oracle::mul(p, m)) ++count;
    }
    CHECK(count == rep.at(n).psi_ev);
  }

  const ReducedCatalog cat(200);
  auto s = sandwich_check(4, rep.at(4).psi_ev, rep.at(5).psi_ev, cat);
  CHECK(s.lower == 1);
  CHECK(s.psi_ev == 3);
  CHECK(s.upper == 3);
  CHECK(s.upper_attained());
  CHECK_FALSE(s.upper_strict());
  CHECK(s.r_below_next());

  s = sandwich_check(50, rep.at(50).psi_ev, rep.at(51).psi_ev, cat);
  CHECK(s.lower == 509);
  CHECK(s.psi_ev == 559);
  CHECK(s.upper == 559);
  CHECK(s.lower_strict());
  CHECK(s.holds_nonstrict());
  CHECK_FALSE(s.holds_as_stated());
}
