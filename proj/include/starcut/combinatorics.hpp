#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace starcut {

/// Advances `idx` (strictly increasing indices into [0, n)) to the next
/// k-combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Calls f(indices) for every k-subset of [0, n) in lexicographic order.
/// f returns false to stop early. Returns false iff stopped early.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return false;
  } while (next_combination(idx, n));
  return true;
}

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  __extension__ typedef unsigned __int128 u128;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace starcut
