#pragma once

#include <cstdint>
#include <optional>

namespace neumaier {

// Exact square root of a non-negative integer, if it is a perfect square.
inline std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  std::int64_t lo = 0, hi = 3037000499;  // floor(sqrt(INT64_MAX))
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid <= v / mid)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (lo * lo != v) return std::nullopt;
  return lo;
}

// Integer roots of x^2 - trace*x + det, larger root first.
struct IntegerRoots {
  std::int64_t larger;
  std::int64_t smaller;
  friend bool operator==(const IntegerRoots&, const IntegerRoots&) = default;
};

inline std::optional<IntegerRoots> integer_quadratic_roots(std::int64_t trace, std::int64_t det) {
  auto root = exact_sqrt(trace * trace - 4 * det);
  if (!root) return std::nullopt;
  if ((trace + *root) % 2 != 0) return std::nullopt;
  return IntegerRoots{(trace + *root) / 2, (trace - *root) / 2};
}

}  // namespace neumaier
