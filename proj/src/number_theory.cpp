#include "trace_census/number_theory.hpp"

#include <limits>

#include "trace_census/checked.hpp"

namespace trace_census {

TotientTable::TotientTable(std::uint64_t n_max) {
  if (n_max < 1) throw DomainError("totient_sieve: n_max must be >= 1");
  if (n_max > std::numeric_limits<std::uint32_t>::max()) throw DomainError("totient_sieve: n_max too large");
  phi_.assign(n_max + 1, 0);
  std::vector<std::uint32_t> primes;
  phi_[1] = 1;
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (phi_[i] == 0) {
      phi_[i] = static_cast<std::uint32_t>(i - 1);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > n_max) break;
      if (i % p == 0) {
        phi_[ip] = phi_[i] * p;
        break;
      }
      phi_[ip] = phi_[i] * (p - 1);
    }
  }
}

std::uint64_t TotientTable::operator()(std::uint64_t n) const {
  if (n == 0 || n >= phi_.size()) throw DomainError("TotientTable: argument out of range");
  return phi_[n];
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t r, std::uint64_t q) {
  if (q == 0) throw DomainError("mod_inverse: modulus must be >= 1");
  if (q == 1) return 0;
  if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw DomainError("mod_inverse: modulus too large");
  std::int64_t old_r = static_cast<std::int64_t>(q), cur_r = static_cast<std::int64_t>(r % q);
  std::int64_t old_s = 0, cur_s = 1;
  while (cur_r != 0) {
    const std::int64_t k = old_r / cur_r;
    std::int64_t t = old_r - k * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - k * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) return std::nullopt;
  std::int64_t s = old_s % static_cast<std::int64_t>(q);
  if (s < 0) s += static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(s);
}

ResidueInverses::ResidueInverses(std::uint64_t q) : q_(q) {
  if (q == 0) throw DomainError("ResidueInverses: modulus must be >= 1");
  if (q > std::numeric_limits<std::uint32_t>::max()) throw DomainError("ResidueInverses: modulus too large");
  if (q == 1) return;

  // Units are the residues not divisible by any prime factor of q.
  std::vector<std::uint8_t> unit(q, 1);
  unit[0] = 0;
  std::uint64_t rest = q;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    for (std::uint64_t m = p; m < q; m += p) unit[m] = 0;
  }
  if (rest > 1)
    for (std::uint64_t m = rest; m < q; m += rest) unit[m] = 0;

  // prefix[r] = product of units below r, then one inversion of the total.
  inv_.assign(q, 0);
  std::vector<std::uint32_t> prefix(q, 1);
  std::uint64_t acc = 1;
  for (std::uint64_t r = 1; r < q; ++r) {
    prefix[r] = static_cast<std::uint32_t>(acc);
    if (unit[r]) acc = acc * r % q;
  }
  std::uint64_t inv_acc = *mod_inverse(acc, q);
  for (std::uint64_t r = q - 1; r >= 1; --r) {
    if (!unit[r]) continue;
    inv_[r] = static_cast<std::uint32_t>(inv_acc * prefix[r] % q);
    inv_acc = inv_acc * r % q;
  }
}

InverseCache::InverseCache(std::uint64_t q_max) {
  tables_.reserve(q_max);
  for (std::uint64_t q = 1; q <= q_max; ++q) tables_.emplace_back(q);
}

const ResidueInverses& InverseCache::operator[](std::uint64_t q) const {
  if (q == 0 || q > tables_.size()) throw DomainError("InverseCache: modulus out of range");
  return tables_[q - 1];
}

}  // namespace trace_census
