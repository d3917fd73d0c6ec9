#pragma once

#include <compare>

namespace ordprod {

using Ordering = std::strong_ordering;

inline constexpr int ordering_sign(Ordering o) {
  if (o == Ordering::less) return -1;
  if (o == Ordering::greater) return 1;
  return 0;
}

inline constexpr Ordering ordering_from_sign(int s) {
  if (s < 0) return Ordering::less;
  if (s > 0) return Ordering::greater;
  return Ordering::equal;
}

/// '<', '=' or '>'.
inline constexpr char ordering_symbol(Ordering o) {
  if (o == Ordering::less) return '<';
  if (o == Ordering::greater) return '>';
  return '=';
}

inline constexpr Ordering reversed(Ordering o) {
  return ordering_from_sign(-ordering_sign(o));
}

}  // namespace ordprod
