#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "trace_census/mat2.hpp"

namespace trace_census {

/// Nonempty sequence of positive integers (a1, ..., ak).
///
/// Read as a continued fraction it is [a1, ..., ak] = 1/(a1 + 1/(a2 + ...)).
/// Read as a monoid word it is B^{a1} A^{a2} B^{a3} ..., letters alternating
/// and starting with B.
class CFWord {
 public:
  using digit_type = std::uint64_t;

  explicit CFWord(std::vector<digit_type> digits);
  CFWord(std::initializer_list<digit_type> digits) : CFWord(std::vector<digit_type>(digits)) {}

  std::span<const digit_type> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  digit_type operator[](std::size_t i) const { return digits_[i]; }

  CFWord reversed() const;
  /// Digits separated by single spaces, e.g. "1 2".
  std::string to_string() const;

  friend bool operator==(const CFWord&, const CFWord&) = default;
  friend auto operator<=>(const CFWord&, const CFWord&) = default;

 private:
  std::vector<digit_type> digits_;
};

/// Convergent numerators and denominators p_0..p_k, q_0..q_k with
/// p_0 = 0, p_1 = 1, q_0 = 1, q_1 = a1 and p_n = a_n p_{n-1} + p_{n-2},
/// q_n = a_n q_{n-1} + q_{n-2}.
template <UnsignedScalar S>
struct BasicConvergentTable {
  std::vector<S> p;
  std::vector<S> q;
};

using ConvergentTable = BasicConvergentTable<std::uint64_t>;

template <UnsignedScalar S = std::uint64_t>
BasicConvergentTable<S> convergents(const CFWord& w) {
  constexpr std::string_view op = "convergents";
  BasicConvergentTable<S> t;
  t.p.reserve(w.size() + 1);
  t.q.reserve(w.size() + 1);
  t.p.push_back(0);
  t.q.push_back(1);
  S p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  for (std::size_t i = 0; i < w.size(); ++i) {
    const S a = static_cast<S>(w[i]);
    const S p = checked_add(checked_mul(a, t.p.back(), op), p_prev, op);
    const S q = checked_add(checked_mul(a, t.q.back(), op), q_prev, op);
    p_prev = t.p.back();
    q_prev = t.q.back();
    t.p.push_back(p);
    t.q.push_back(q);
  }
  return t;
}

/// M(a1) M(a2) ... M(ak) = [[q_k, q_{k-1}], [p_k, p_{k-1}]], determinant (-1)^k.
template <UnsignedScalar S = std::uint64_t>
BasicMat2<S> continuant_matrix(const CFWord& w) {
  auto m = BasicMat2<S>::identity();
  for (auto a : w.digits()) m = mat_mul(m, generators::M<S>(static_cast<S>(a)));
  return m;
}

/// The monoid element B^{a1} A^{a2} B^{a3} ... (determinant +1).
///
/// Even length: equals continuant_matrix(w) = [[q_{2m}, q_{2m-1}], [p_{2m}, p_{2m-1}]].
/// Odd length: equals continuant_matrix(w) J = [[q_{2m}, q_{2m+1}], [p_{2m}, p_{2m+1}]].
template <UnsignedScalar S = std::uint64_t>
BasicMat2<S> word_to_matrix(const CFWord& w) {
  const auto m = continuant_matrix<S>(w);
  return (w.size() % 2 == 0) ? m : swap_columns(m);
}

/// Peels factors off a continuant product M(a1)...M(ak), returning the digits.
/// Throws DomainError when m is not such a product.
template <UnsignedScalar S>
std::vector<std::uint64_t> decode_continuant(BasicMat2<S> m) {
  constexpr int kMaxDigits = 200;  // q_n grows at least like Fibonacci numbers
  std::vector<std::uint64_t> rev;
  for (int step = 0; step < kMaxDigits; ++step) {
    // Single factor [[a, 1], [1, 0]].
    if (m.d == 0) {
      if (m.b != 1 || m.c != 1 || m.a == 0) throw DomainError("matrix_to_word: not a product of M(a) factors");
      rev.push_back(static_cast<std::uint64_t>(m.a));
      return {rev.rbegin(), rev.rend()};
    }
    // [[q_j, q_{j-1}], [p_j, p_{j-1}]] with j >= 2: q_j = a_j q_{j-1} + q_{j-2},
    // 1 <= q_{j-2} <= q_{j-1}, so a_j = floor((q_j - 1) / q_{j-1}).
    if (m.b == 0 || m.a == 0) throw DomainError("matrix_to_word: not a product of M(a) factors");
    const S k = (m.a - 1) / m.b;
    if (k == 0 || k > static_cast<S>(UINT64_MAX)) throw DomainError("matrix_to_word: invalid quotient");
    const S kb = k * m.b;  // <= m.a, cannot overflow
    if (m.c / m.d < k) throw DomainError("matrix_to_word: negative remainder");
    m = BasicMat2<S>{m.b, m.a - kb, m.d, m.c - k * m.d};
    rev.push_back(static_cast<std::uint64_t>(k));
  }
  throw DomainError("matrix_to_word: too many digits");
}

/// Inverse of word_to_matrix on B-leading monoid elements.
///
/// A matrix with top-left > top-right is decoded as an even word (S_ev layout),
/// otherwise as an odd word (S_odd layout, columns swapped first). The result is
/// re-encoded and compared, so anything that is not a valid B-leading product
/// raises DomainError.
template <UnsignedScalar S = std::uint64_t>
CFWord matrix_to_word(const BasicMat2<S>& m) {
  if (unit_determinant(m) != 1) throw DomainError("matrix_to_word: determinant must be +1");
  const bool even = m.a > m.b;
  auto digits = decode_continuant(even ? m : swap_columns(m));
  if ((digits.size() % 2 == 0) != even) throw DomainError("matrix_to_word: parity does not match column order");
  CFWord w(std::move(digits));
  if (word_to_matrix<S>(w) != m) throw DomainError("matrix_to_word: matrix is not a B-leading monoid element");
  return w;
}

}  // namespace trace_census
