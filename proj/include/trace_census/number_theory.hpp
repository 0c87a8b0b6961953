#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace trace_census {

/// Euler totients phi(1..n_max) from a linear sieve.
class TotientTable {
 public:
  explicit TotientTable(std::uint64_t n_max);

  std::uint64_t n_max() const { return phi_.size() - 1; }
  std::uint64_t operator()(std::uint64_t n) const;

 private:
  std::vector<std::uint32_t> phi_;  // phi_[0] unused
};

inline TotientTable totient_sieve(std::uint64_t n_max) { return TotientTable(n_max); }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of r modulo q in [0, q), or nullopt when gcd(r, q) != 1.
/// For q = 1 every residue is invertible and the inverse is 0.
std::optional<std::uint64_t> mod_inverse(std::uint64_t r, std::uint64_t q);

/// All inverses modulo a single q, built with one extended-Euclid call
/// (batch inversion of the coprime residues).
class ResidueInverses {
 public:
  explicit ResidueInverses(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  bool is_unit(std::uint64_t r) const { return q_ == 1 || inv_[r % q_] != 0; }
  /// Inverse of r mod q in [0, q). Only meaningful when is_unit(r).
  std::uint64_t inverse(std::uint64_t r) const { return q_ == 1 ? 0 : inv_[r % q_]; }

 private:
  std::uint64_t q_;
  std::vector<std::uint32_t> inv_;  // 0 marks a non-unit (q > 1)
};

/// ResidueInverses for every modulus 1..q_max.
class InverseCache {
 public:
  explicit InverseCache(std::uint64_t q_max);

  std::uint64_t q_max() const { return tables_.size(); }
  const ResidueInverses& operator[](std::uint64_t q) const;

 private:
  std::vector<ResidueInverses> tables_;
};

}  // namespace trace_census
