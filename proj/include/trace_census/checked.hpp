#pragma once

#include <concepts>
#include <cstdint>
#include <string_view>

#include "trace_census/errors.hpp"

namespace trace_census {

using u128 = unsigned __int128;
using i128 = __int128;

template <typename T>
concept UnsignedScalar = std::same_as<T, std::uint32_t> || std::same_as<T, std::uint64_t> ||
                         std::same_as<T, u128>;

template <UnsignedScalar T>
constexpr T checked_add(T a, T b, std::string_view op) {
  T r{};
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(op));
  return r;
}

template <UnsignedScalar T>
constexpr T checked_mul(T a, T b, std::string_view op) {
  T r{};
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(op));
  return r;
}

/// Floor division for signed operands (C++ `/` truncates toward zero).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace trace_census
