#pragma once
// Independent reference implementations used only by the tests. None of
// these touch the generator-mask representation in the library.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Q_n: labels differ in exactly one position.
inline bool q_adjacent(int /*n*/, std::uint32_t a, std::uint32_t b) {
  return std::popcount(a ^ b) == 1;
}

/// FQ_n: Q_n plus every vertex joined to its bitwise complement.
inline bool fq_adjacent(int n, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  return a != b && (std::popcount(a ^ b) == 1 || (a ^ b) == full);
}

/// AQ_n by the recursive two-copy definition: AQ_1 = K_2; in AQ_n the copy
/// index is bit n, and across copies a_{n-1..1} must be all equal or all
/// different.
inline bool aq_adjacent(int n, std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  if (n == 1) return true;
  const std::uint32_t top = std::uint32_t{1} << (n - 1);
  const std::uint32_t low = top - 1;
  if ((a & top) == (b & top)) return aq_adjacent(n - 1, a & low, b & low);
  const std::uint32_t diff = (a ^ b) & low;
  return diff == 0 || diff == low;
}

using Adjacency = std::function<bool(std::uint32_t, std::uint32_t)>;

inline std::vector<std::uint32_t> common_neighbors(std::uint32_t count, const Adjacency& adj,
                                                   std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < count; ++c) {
    if (adj(a, c) && adj(b, c)) out.push_back(c);
  }
  return out;
}

/// Connectivity of the graph with `removed` (bitmask over <= 32 vertices) deleted.
inline bool connected_without(std::uint32_t count, const Adjacency& adj, std::uint64_t removed) {
  std::vector<char> seen(count, 0);
  std::uint32_t start = count;
  std::uint32_t remaining = 0;
  for (std::uint32_t v = 0; v < count; ++v) {
    if (!((removed >> v) & 1)) {
      ++remaining;
      if (start == count) start = v;
    }
  }
  if (remaining == 0) return true;
  std::vector<std::uint32_t> stack = {start};
  seen[start] = 1;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (std::uint32_t y = 0; y < count; ++y) {
      if (!seen[y] && !((removed >> y) & 1) && adj(x, y)) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == remaining;
}

/// Smallest vertex set whose removal disconnects the graph or leaves one
/// vertex, by subset enumeration in increasing size.
inline int brute_vertex_connectivity(std::uint32_t count, const Adjacency& adj) {
  for (int size = 0; size < static_cast<int>(count); ++size) {
    bool found = false;
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    while (!found) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      if (count - static_cast<std::uint32_t>(size) == 1 || !connected_without(count, adj, mask)) {
        found = true;
        break;
      }
      int k = size - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] == count - static_cast<std::uint32_t>(size) +
                                                                static_cast<std::uint32_t>(k)) {
        --k;
      }
      if (k < 0) break;
      ++idx[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < size; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    if (found) return size;
  }
  return static_cast<int>(count) - 1;
}

/// f(k) and 2 g(k) in exact integer arithmetic.
inline long f_twice(long n, long k) { return k * (2 * n - 1 - k) + 2; }
inline long g_twice(long n, long k) { return -k * k + (4 * n - 3) * k + 4 - 2 * n * n; }

}  // namespace oracle
