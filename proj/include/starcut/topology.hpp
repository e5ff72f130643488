#pragma once

// Hypercube Q_n, folded hypercube FQ_n and augmented cube AQ_n.
//
// All three are Cayley graphs on (Z_2)^n: two labels are adjacent iff their
// XOR is one of a fixed set of generator masks. Bit 1 is the least
// significant bit, so a label printed as x_n ... x_1 reads left to right.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace starcut {

enum class Kind { Hypercube, FoldedHypercube, AugmentedCube };

/// "q", "fq", "aq".
std::string_view kind_name(Kind kind);
Kind parse_kind(std::string_view name);

struct Vertex {
  std::uint32_t bits = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// x^i: flip bit i (1-indexed).
constexpr Vertex flip(Vertex v, int i) { return Vertex{v.bits ^ (std::uint32_t{1} << (i - 1))}; }

/// x^{i,j}
constexpr Vertex flip(Vertex v, int i, int j) { return flip(flip(v, i), j); }

/// ū^i: flip bits i, i-1, ..., 1.
constexpr Vertex flip_low(Vertex v, int i) {
  return Vertex{v.bits ^ ((std::uint32_t{1} << i) - 1)};
}

inline constexpr int kMaxDimension = 20;

class Topology {
 public:
  Topology(Kind kind, int n);

  Kind kind() const { return kind_; }
  int dimension() const { return n_; }
  std::uint32_t vertex_count() const { return std::uint32_t{1} << n_; }
  int degree() const { return static_cast<int>(generators_.size()); }

  bool contains(Vertex v) const { return v.bits < vertex_count(); }
  /// Throws InvalidVertex if `v` is out of range.
  void require(Vertex v) const;

  bool adjacent(Vertex a, Vertex b) const;

  /// Ascending by label.
  std::vector<Vertex> neighbors(Vertex v) const;

  /// x̄: all n bits flipped.
  Vertex complement(Vertex v) const { return Vertex{v.bits ^ (vertex_count() - 1)}; }

  /// XOR masks that generate the edge set, ascending.
  const std::vector<std::uint32_t>& generators() const { return generators_; }

  std::string name() const;

 private:
  Kind kind_;
  int n_;
  std::vector<std::uint32_t> generators_;
};

/// neighbors(u) ∩ neighbors(v), ascending. Throws InvalidPair when u == v.
std::vector<Vertex> common_neighbors(const Topology& t, Vertex u, Vertex v);

/// Edge classes of the augmented cube: u—u^i (hypercube) and u—ū^i, i >= 2
/// (complement). A pair differing only in bit 1 is always a hypercube edge.
struct EdgeKindAQ {
  enum class Type { Hypercube, Complement, NotAnEdge };
  Type type = Type::NotAnEdge;
  int dim = 0;

  friend bool operator==(const EdgeKindAQ&, const EdgeKindAQ&) = default;
};

EdgeKindAQ classify_edge_aq(const Topology& t, Vertex u, Vertex v);

/// "x_n...x_1" with the leftmost character being bit n.
Vertex parse_vertex(std::string_view s, int n);
std::string format_vertex(Vertex v, int n);
std::string format_vertex(Vertex v, const Topology& t);
std::vector<std::string> format_vertices(const std::vector<Vertex>& vs, int n);

}  // namespace starcut
