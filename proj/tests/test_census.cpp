#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "trace_census/census.hpp"
#include "trace_census/errors.hpp"

using namespace trace_census;

TEST_CASE("spot values") {
  const auto rep = census(10);
  CHECK(rep.at(3).psi == 2);
  CHECK(rep.at(3).phi == 2);
  CHECK(rep.at(4).psi == 8);
  CHECK(rep.at(4).phi == 6);
  CHECK(rep.at(4).psi_ev == 3);
  CHECK(rep.at(4).psi_odd == 1);
  CHECK(rep.at(10).psi == 124);

  CHECK(psi_ev_formula(3) == 1);
  CHECK(psi_ev_formula(4) == 3);
  CHECK(psi_odd_formula(3) == 0);
  CHECK(psi_odd_formula(4) == 1);
  CHECK(psi_odd_floorsum(3) == 0);
  CHECK(psi_odd_floorsum(4) == 1);
  CHECK(psi_odd_floorsum(10) == psi_odd_formula(10));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(census(2), DomainError);
  CHECK_THROWS_AS(psi_brute(2), DomainError);
  CHECK_THROWS_AS(psi_ev_formula(2), DomainError);
  CHECK_THROWS_AS(census(10).at(11), DomainError);
  const InverseCache small(10);
  CHECK_THROWS_AS(psi_ev_formula(50, small), DomainError);
}

TEST_CASE("oracle: letter-by-letter word enumeration") {
  constexpr std::uint64_t kN = 150;
  const auto words = oracle::enumerate_words(kN);
  const auto rep = census(kN);
  const auto brute = psi_brute(kN);
  for (std::uint64_t n = 3; n <= kN; ++n) {
    const auto& r = rep.at(n);
    CHECK(r.psi == oracle::cumulative(words.total, n));
    CHECK(r.phi == words.total[n]);
    CHECK(r.psi_ev == oracle::cumulative(words.even_b, n));
    CHECK(r.psi_odd == oracle::cumulative(words.odd_b, n));
    const auto c = brute.cumulative(n);
    CHECK(c.even_b == r.psi_ev);
    CHECK(c.odd_b == r.psi_odd);
    CHECK(c.total() == r.psi);
  }
}

TEST_CASE("word classes pair off under A <-> B") {
  const auto brute = psi_brute(400);
  for (std::uint64_t n = 3; n <= 400; ++n) {
    const auto& b = brute.by_trace[n];
    CHECK(b.even_a == b.even_b);
    CHECK(b.odd_a == b.odd_b);
  }
}

TEST_CASE("region formulas agree with the census") {
  constexpr std::uint64_t kN = 400;
  const auto rep = census(kN);
  const InverseCache cache(kN);
  for (std::uint64_t n = 3; n <= kN; ++n) {
    CHECK(psi_ev_formula(n, cache) == rep.at(n).psi_ev);
    CHECK(psi_odd_formula(n, cache) == rep.at(n).psi_odd);
    CHECK(psi_odd_floorsum(n, cache) == rep.at(n).psi_odd);
  }
  for (std::uint64_t n : {3u, 17u, 64u, 201u}) {
    CHECK(psi_ev_formula(n) == rep.at(n).psi_ev);
    CHECK(psi_odd_formula(n) == rep.at(n).psi_odd);
    CHECK(psi_odd_floorsum(n) == rep.at(n).psi_odd);
  }
}

TEST_CASE("monotone, decomposed, and independent of thread count") {
  const auto one = census(3000);
  CensusOptions opts;
  opts.threads = 3;
  const auto three = census(3000, opts);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < one.rows().size(); ++i) {
    const auto& r = one.rows()[i];
    const auto& s = three.rows()[i];
    CHECK(r.psi == 2 * r.psi_ev + 2 * r.psi_odd);
    CHECK(r.psi >= prev);
    CHECK(r.phi == r.psi - prev);
    prev = r.psi;
    CHECK(r.psi == s.psi);
    CHECK(r.psi_ev == s.psi_ev);
    CHECK(r.residual == s.residual);
  }
}

TEST_CASE("frozen values") {
  const auto rep = census(2000);
  CHECK(rep.at(1000).psi_ev == 211152);
  CHECK(rep.at(1000).psi_odd == 1783598);
  CHECK(rep.at(2000).psi == 17637660);
}

TEST_CASE("main-term columns") {
  auto rep = census(100);
  rep.attach_main_terms(1.0, 0.0);
  const auto& r = rep.at(100);
  CHECK(r.main_term == doctest::Approx(10000.0 * std::log(100.0)));
  CHECK(r.residual == doctest::Approx(static_cast<double>(r.psi) - r.main_term));
  CHECK(r.residual_over_n175 == doctest::Approx(r.residual / std::pow(100.0, 1.75)));
}
