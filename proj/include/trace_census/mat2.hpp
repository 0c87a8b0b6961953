#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include "trace_census/checked.hpp"

namespace trace_census {

/// 2x2 matrix with nonnegative integer entries, the element type of the
/// monoid generated by A = [[1,0],[1,1]] and B = [[1,1],[0,1]].
///
/// Entries are stored row-major as [[a, b], [c, d]]. In the even-word layout
/// these are [[q', q], [p', p]]; for a continuant product M(a1)...M(an) they
/// are [[q_n, q_{n-1}], [p_n, p_{n-1}]].
///
/// All arithmetic is checked and throws OverflowError instead of wrapping.
template <UnsignedScalar Scalar>
struct BasicMat2 {
  using scalar_type = Scalar;

  Scalar a{1};
  Scalar b{0};
  Scalar c{0};
  Scalar d{1};

  static constexpr BasicMat2 identity() { return {1, 0, 0, 1}; }

  friend constexpr bool operator==(const BasicMat2&, const BasicMat2&) = default;
};

using Mat2 = BasicMat2<std::uint64_t>;
using WideMat2 = BasicMat2<u128>;

namespace generators {

template <UnsignedScalar S = std::uint64_t>
constexpr BasicMat2<S> A() {
  return {1, 0, 1, 1};
}

template <UnsignedScalar S = std::uint64_t>
constexpr BasicMat2<S> B() {
  return {1, 1, 0, 1};
}

template <UnsignedScalar S = std::uint64_t>
constexpr BasicMat2<S> J() {
  return {0, 1, 1, 0};
}

/// M(k) = [[k, 1], [1, 0]]; B^k A^l = M(k) M(l).
template <UnsignedScalar S = std::uint64_t>
constexpr BasicMat2<S> M(std::type_identity_t<S> k) {
  return {k, 1, 1, 0};
}

}  // namespace generators

template <UnsignedScalar S>
constexpr BasicMat2<S> mat_mul(const BasicMat2<S>& lhs, const BasicMat2<S>& rhs) {
  constexpr std::string_view op = "mat_mul";
  auto dot = [&](S x0, S y0, S x1, S y1) {
    return checked_add(checked_mul(x0, y0, op), checked_mul(x1, y1, op), op);
  };
  return {dot(lhs.a, rhs.a, lhs.b, rhs.c), dot(lhs.a, rhs.b, lhs.b, rhs.d),
          dot(lhs.c, rhs.a, lhs.d, rhs.c), dot(lhs.c, rhs.b, lhs.d, rhs.d)};
}

template <UnsignedScalar S>
constexpr BasicMat2<S> operator*(const BasicMat2<S>& lhs, const BasicMat2<S>& rhs) {
  return mat_mul(lhs, rhs);
}

template <UnsignedScalar S>
constexpr S trace(const BasicMat2<S>& m) {
  return checked_add(m.a, m.d, "trace");
}

/// Sign of the determinant for matrices with |det| <= 1, as -1, 0 or +1.
/// Throws DomainError when |det| > 1.
template <UnsignedScalar S>
constexpr int unit_determinant(const BasicMat2<S>& m) {
  // a*d and b*c may each need twice the scalar width; compare via the
  // product of the wider type when S is 64-bit, and via division otherwise.
  if constexpr (sizeof(S) <= sizeof(std::uint64_t)) {
    const u128 ad = static_cast<u128>(m.a) * m.d;
    const u128 bc = static_cast<u128>(m.b) * m.c;
    if (ad == bc) return 0;
    if (ad == bc + 1) return 1;
    if (bc == ad + 1) return -1;
  } else {
    S ad{}, bc{};
    if (__builtin_mul_overflow(m.a, m.d, &ad) || __builtin_mul_overflow(m.b, m.c, &bc))
      throw OverflowError("unit_determinant");
    if (ad == bc) return 0;
    if (ad == bc + 1) return 1;
    if (bc == ad + 1) return -1;
  }
  throw DomainError("determinant is not in {-1, 0, 1}");
}

/// J m J: swaps both rows and columns.
template <UnsignedScalar S>
constexpr BasicMat2<S> flip(const BasicMat2<S>& m) {
  return {m.d, m.c, m.b, m.a};
}

/// m J: swaps the two columns.
template <UnsignedScalar S>
constexpr BasicMat2<S> swap_columns(const BasicMat2<S>& m) {
  return {m.b, m.a, m.d, m.c};
}

template <UnsignedScalar S>
std::string to_string(const BasicMat2<S>& m) {
  auto str = [](S v) {
    if constexpr (sizeof(S) <= sizeof(std::uint64_t)) {
      return std::to_string(v);
    } else {
      if (v == 0) return std::string("0");
      std::string s;
      while (v != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      }
      return s;
    }
  };
  return "[[" + str(m.a) + "," + str(m.b) + "],[" + str(m.c) + "," + str(m.d) + "]]";
}

template <UnsignedScalar S>
std::ostream& operator<<(std::ostream& os, const BasicMat2<S>& m) {
  return os << to_string(m);
}

}  // namespace trace_census
