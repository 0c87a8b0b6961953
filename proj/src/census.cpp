#include "trace_census/census.hpp"

#include <cmath>
#include <thread>

#include "trace_census/asymptotics.hpp"
#include "trace_census/errors.hpp"
#include "trace_census/inverse_count.hpp"
#include "trace_census/mat2.hpp"

namespace trace_census {

const CensusRow& CensusReport::at(std::uint64_t n) const {
  if (rows_.empty() || n < rows_.front().n || n > rows_.back().n) throw DomainError("CensusReport: N out of range");
  return rows_[n - rows_.front().n];
}

void CensusReport::attach_main_terms(double c1, double c2) {
  for (auto& r : rows_) {
    const double n = static_cast<double>(r.n);
    r.main_term = c1 * n * n * std::log(n) + c2 * n * n;
    r.residual = static_cast<double>(r.psi) - r.main_term;
    r.residual_over_n175 = r.residual / std::pow(n, 1.75);
  }
}

WordClassCounts BruteForceCensus::cumulative(std::uint64_t n) const {
  if (n > n_max) throw DomainError("BruteForceCensus: N beyond enumeration bound");
  WordClassCounts c;
  for (std::uint64_t t = 3; t <= n; ++t) {
    c.even_b += by_trace[t].even_b;
    c.even_a += by_trace[t].even_a;
    c.odd_b += by_trace[t].odd_b;
    c.odd_a += by_trace[t].odd_a;
  }
  return c;
}

CensusReport BruteForceCensus::to_report() const {
  std::vector<CensusRow> rows;
  WordClassCounts c;
  for (std::uint64_t t = 3; t <= n_max; ++t) {
    c.even_b += by_trace[t].even_b;
    c.even_a += by_trace[t].even_a;
    c.odd_b += by_trace[t].odd_b;
    c.odd_a += by_trace[t].odd_a;
    rows.push_back({t, c.even_b, c.odd_b, c.total(), by_trace[t].total()});
  }
  return CensusReport(std::move(rows));
}

BruteForceCensus psi_brute(std::uint64_t n_max) {
  if (n_max < 3) throw DomainError("psi_brute: n_max must be >= 3");
  if (n_max > 5000) throw DomainError("psi_brute: n_max too large for exhaustive enumeration");

  BruteForceCensus out;
  out.n_max = n_max;
  out.by_trace.assign(n_max + 1, {});

  enum Letter : std::uint8_t { kA, kB };
  struct Node {
    Mat2 m;
    Letter first;
    Letter last;
    std::uint32_t runs;
  };
  const Mat2 gen[2] = {generators::A(), generators::B()};

  std::vector<Node> stack;
  for (Letter first : {kA, kB}) {
    const Letter other = first == kA ? kB : kA;
    // first^k other has trace k + 2.
    Mat2 power = gen[first];
    for (std::uint64_t k = 1; k + 2 <= n_max; ++k) {
      stack.push_back({mat_mul(power, gen[other]), first, other, 2});
      power = mat_mul(power, gen[first]);
    }
  }
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    auto& bin = out.by_trace[trace(node.m)];
    const bool even = node.runs % 2 == 0;
    if (node.first == kB)
      ++(even ? bin.even_b : bin.odd_b);
    else
      ++(even ? bin.even_a : bin.odd_a);
    // Every entry is nondecreasing under right multiplication by A or B, so
    // descendants of a pruned child never come back under the bound.
    for (Letter next : {kA, kB}) {
      const Mat2 child = mat_mul(node.m, gen[next]);
      if (trace(child) > n_max) continue;
      stack.push_back({child, node.first, next, node.runs + (next != node.last ? 1u : 0u)});
    }
  }
  return out;
}

namespace {

template <typename CountFn>
std::uint64_t sum_ev_regions(std::uint64_t n, CountFn&& count) {
  if (n < 3) throw DomainError("psi_ev_formula: n must be >= 3");
  const auto N = static_cast<std::int64_t>(n);
  std::uint64_t total = 0;
  for (std::int64_t q = 1; q < N; ++q) {
    if (2 * q <= N)
      total += count(static_cast<std::uint64_t>(q), Region{region::TrapezoidEv{N, q}});
    else
      total += count(static_cast<std::uint64_t>(q), Region{region::TriangleEv{N, q}});
  }
  return total;
}

template <typename CountFn>
std::uint64_t sum_odd_regions(std::uint64_t n, CountFn&& count) {
  if (n < 3) throw DomainError("psi_odd_formula: n must be >= 3");
  const auto N = static_cast<std::int64_t>(n);
  std::uint64_t total = 0;
  for (std::int64_t a = 1; 2 * a < N; ++a)
    total += count(static_cast<std::uint64_t>(a), Region{region::TriangleOdd{N, a}});
  return total;
}

template <typename InverseOf>
std::uint64_t floorsum(std::uint64_t n, InverseOf&& inverse_of) {
  if (n < 3) throw DomainError("psi_odd_floorsum: n must be >= 3");
  std::uint64_t total = 0;
  for (std::uint64_t a = 1; 2 * a < n; ++a) {
    for (std::uint64_t y = a + 1; y <= n - a; ++y) {
      std::uint64_t x = 1;
      if (a > 1) {
        const auto inv = inverse_of(y, a);
        if (!inv) continue;
        x = *inv;
      }
      total += (n - y - x) / a;
    }
  }
  return total;
}

void check_cache(std::uint64_t n, const InverseCache& cache) {
  if (cache.q_max() + 1 < n) throw DomainError("inverse cache does not cover all moduli below N");
}

}  // namespace

std::uint64_t psi_ev_formula(std::uint64_t n) {
  return sum_ev_regions(n, [](std::uint64_t q, const Region& r) { return count_inverse_pairs(q, r); });
}

std::uint64_t psi_ev_formula(std::uint64_t n, const InverseCache& cache) {
  check_cache(n, cache);
  return sum_ev_regions(n, [&](std::uint64_t q, const Region& r) { return count_inverse_pairs(cache[q], r); });
}

std::uint64_t psi_odd_formula(std::uint64_t n) {
  return sum_odd_regions(n, [](std::uint64_t a, const Region& r) { return count_inverse_pairs(a, r); });
}

std::uint64_t psi_odd_formula(std::uint64_t n, const InverseCache& cache) {
  check_cache(n / 2 + 1, cache);
  return sum_odd_regions(n, [&](std::uint64_t a, const Region& r) { return count_inverse_pairs(cache[a], r); });
}

std::uint64_t psi_odd_floorsum(std::uint64_t n) {
  return floorsum(n, [](std::uint64_t y, std::uint64_t a) { return mod_inverse(y, a); });
}

std::uint64_t psi_odd_floorsum(std::uint64_t n, const InverseCache& cache) {
  check_cache(n / 2 + 1, cache);
  return floorsum(n, [&](std::uint64_t y, std::uint64_t a) -> std::optional<std::uint64_t> {
    const auto& t = cache[a];
    if (!t.is_unit(y)) return std::nullopt;
    return t.inverse(y);
  });
}

namespace {

struct TraceHistograms {
  std::vector<std::uint64_t> ev;
  std::vector<std::uint64_t> odd;
};

/// Adds the contributions of modulus q to the exact-trace histograms.
void accumulate_modulus(std::uint64_t q, std::uint64_t n_max, TraceHistograms& h) {
  const ResidueInverses inv(q);
  const bool odd_active = 2 * q < n_max;
  for (std::uint64_t x = 1; x <= q; ++x) {
    if (!inv.is_unit(x)) continue;
    std::uint64_t y0 = inv.inverse(x);  // representative in (0, q]
    if (y0 == 0) y0 = q;
    // Even words: y = y0 + j q > q, trace x + y.
    for (std::uint64_t s = x + y0 + q; s <= n_max; s += q) ++h.ev[s];
    // Odd words: (x + i q, y0 + j q), trace x + y0 + (i + j) q + 2q, weight
    // (k + 1) for i + j = k.
    if (odd_active) {
      std::uint64_t weight = 1;
      for (std::uint64_t s = x + y0 + 2 * q; s <= n_max; s += q, ++weight) h.odd[s] += weight;
    }
  }
}

}  // namespace

CensusReport census(std::uint64_t n_max, const CensusOptions& opts) {
  if (n_max < 3) throw DomainError("census: n_max must be >= 3");
  const unsigned threads = opts.threads == 0 ? 1 : opts.threads;

  std::vector<TraceHistograms> partial(threads);
  for (auto& h : partial) {
    h.ev.assign(n_max + 1, 0);
    h.odd.assign(n_max + 1, 0);
  }
  auto work = [&](unsigned t) {
    for (std::uint64_t q = 1 + t; q + 2 <= n_max; q += threads) accumulate_modulus(q, n_max, partial[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::vector<CensusRow> rows;
  rows.reserve(n_max - 2);
  std::uint64_t ev = 0, odd = 0, prev_psi = 0;
  for (std::uint64_t s = 0; s <= n_max; ++s) {
    for (const auto& h : partial) {
      ev += h.ev[s];
      odd += h.odd[s];
    }
    if (s < 3) continue;
    const std::uint64_t psi = 2 * ev + 2 * odd;
    rows.push_back({s, ev, odd, psi, psi - prev_psi});
    prev_psi = psi;
  }
  CensusReport report(std::move(rows));
  const auto& k = constants();
  report.attach_main_terms(k.c1, opts.c2.value_or(k.c2_effective));
  return report;
}

}  // namespace trace_census
