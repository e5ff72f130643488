#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starcut/topology.hpp"

namespace starcut {

/// K_{1,m}: a center plus m leaves. Leaves are kept sorted ascending.
struct Star {
  Vertex center;
  std::vector<Vertex> leaves;

  Star() = default;
  Star(Vertex c, std::vector<Vertex> ls);

  int leaf_count() const { return static_cast<int>(leaves.size()); }
  /// Center first, then leaves.
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Star&, const Star&) = default;
};

nlohmann::json star_to_json(const Star& s, int n);
/// Throws ParseError on a malformed object.
Star star_from_json(const nlohmann::json& j, int n);

struct StarEnumeration {
  std::vector<Star> stars;
  bool exceeds_degree = false;
};

/// Every star with exactly m leaves (or, with include_substars, every star
/// with 0..m leaves). Order: leaf count ascending, then center ascending, then
/// leaf subsets in lexicographic order.
StarEnumeration enumerate_stars(const Topology& t, int m, bool include_substars);

/// Every leaf adjacent to the center, leaves distinct, center not a leaf.
bool is_star_subgraph(const Topology& t, const Star& s);
/// is_star_subgraph plus no edge between two leaves.
bool induced_exact(const Topology& t, const Star& s);

// ---------------------------------------------------------------------------
// Common-neighbor classification in AQ_n.

/// A vertex described relative to a base vertex u: u itself, u^i or ū^i.
struct NeighborSpec {
  enum class Type { Self, Hypercube, Complement };
  Type type = Type::Self;
  int dim = 0;

  static constexpr NeighborSpec self() { return {}; }
  static constexpr NeighborSpec hypercube(int i) { return {Type::Hypercube, i}; }
  static constexpr NeighborSpec complement(int i) { return {Type::Complement, i}; }

  friend bool operator==(const NeighborSpec&, const NeighborSpec&) = default;
};

Vertex resolve(Vertex u, NeighborSpec spec);
std::string describe(NeighborSpec spec);

struct LemmaPrediction {
  std::vector<Vertex> vertices;  // ascending, duplicates removed
  std::string lemma;
  std::string case_label;
};

/// Closed-form N(a) ∩ N(b) for a, b ∈ {u, u^i, ū^i} as given by the AQ
/// classification rules:
///   hypercube-edge        (u, u^i)
///   complement-edge       (u, ū^i)
///   two-hypercube-edges   (u^i, u^j)
///   two-complement-edges  (ū^i, ū^j)
///   mixed-edges           (u^i, ū^j)
/// Argument order does not matter. Throws RangeError (source = lemma name)
/// when a dimension is outside the rule's stated range.
LemmaPrediction predicted_common_neighbors_aq(const Topology& t, Vertex u, NeighborSpec a,
                                              NeighborSpec b);

/// Every in-range (a, b) argument pair for the five rules at dimension n.
std::vector<std::pair<NeighborSpec, NeighborSpec>> classification_cases(int n);

// ---------------------------------------------------------------------------
// Forbidden patterns T and H.

template <class G>
concept GraphLike = requires(const G& g, Vertex a, Vertex b) {
  { g.vertex_count() } -> std::convertible_to<std::uint32_t>;
  { g.adjacent(a, b) } -> std::convertible_to<bool>;
  { g.neighbors(a) } -> std::convertible_to<std::vector<Vertex>>;
};

/// Small adjacency-list graph on vertices 0..count-1, for exercising the
/// pattern searcher on hand-built inputs.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(std::uint32_t count) : adj_(count) {}

  void add_edge(std::uint32_t a, std::uint32_t b);
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adj_.size()); }
  bool adjacent(Vertex a, Vertex b) const;
  std::vector<Vertex> neighbors(Vertex v) const { return adj_.at(v.bits); }

 private:
  std::vector<std::vector<Vertex>> adj_;
};

enum class Pattern { T, H };

std::string_view pattern_name(Pattern p);
/// T: x, u, v, x1..x8.  H: x, u, v, x1..x7.
std::vector<std::string> pattern_roles(Pattern p);
/// Edges as pairs of role indices.
std::vector<std::pair<int, int>> pattern_edges(Pattern p);

struct PatternEmbedding {
  Pattern pattern = Pattern::T;
  std::vector<Vertex> image;  // indexed like pattern_roles()
};

nlohmann::json embedding_to_json(const PatternEmbedding& e, int n);

template <GraphLike G>
bool is_valid_embedding(const G& g, const PatternEmbedding& e) {
  const auto roles = pattern_roles(e.pattern);
  if (e.image.size() != roles.size()) return false;
  auto sorted = e.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (auto [a, b] : pattern_edges(e.pattern)) {
    if (!g.adjacent(e.image[static_cast<std::size_t>(a)], e.image[static_cast<std::size_t>(b)])) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a,
                                            const std::vector<Vertex>& b, Vertex drop) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  std::erase(out, drop);
  return out;
}

}  // namespace detail

/// Searches for a (not necessarily induced) subgraph isomorphic to T or H.
///
/// Both patterns hang off an edge uv and a vertex x: T needs four x–v common
/// neighbors and four further x–u common neighbors; H additionally has the
/// edge vx and needs four x–v and three x–u common neighbors. Disjoint sets of
/// sizes a and b exist inside P and Q iff |P| >= a, |Q| >= b and
/// |P ∪ Q| >= a + b, so no subset enumeration is needed. Candidates for x are
/// restricted to N(v) (H) or N(N(v)) (T), which is exact for any graph.
template <GraphLike G>
std::optional<PatternEmbedding> find_forbidden_pattern(const G& g, Pattern which) {
  const std::size_t need_v = 4;
  const std::size_t need_u = which == Pattern::T ? 4 : 3;
  const std::uint32_t count = g.vertex_count();

  std::vector<std::vector<Vertex>> nbrs(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    nbrs[i] = g.neighbors(Vertex{i});
    std::sort(nbrs[i].begin(), nbrs[i].end());
  }

  std::vector<Vertex> candidates;
  for (std::uint32_t ui = 0; ui < count; ++ui) {
    const Vertex u{ui};
    for (Vertex v : nbrs[ui]) {
      candidates.clear();
      if (which == Pattern::H) {
        candidates = nbrs[v.bits];
      } else {
        for (Vertex y : nbrs[v.bits]) {
          candidates.insert(candidates.end(), nbrs[y.bits].begin(), nbrs[y.bits].end());
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      }
      for (Vertex x : candidates) {
        if (x == u || x == v) continue;
        auto p = detail::intersect_sorted(nbrs[x.bits], nbrs[v.bits], u);
        if (p.size() < need_v) continue;
        auto q = detail::intersect_sorted(nbrs[x.bits], nbrs[ui], v);
        if (q.size() < need_u) continue;
        std::vector<Vertex> shared, p_only, q_only;
        std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(shared));
        std::set_difference(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(p_only));
        std::set_difference(q.begin(), q.end(), p.begin(), p.end(), std::back_inserter(q_only));
        if (p_only.size() + q_only.size() + shared.size() < need_v + need_u) continue;

        std::vector<Vertex> to_v, to_u;
        std::size_t next_shared = 0;
        for (std::size_t i = 0; i < need_v; ++i) {
          to_v.push_back(i < p_only.size() ? p_only[i] : shared[next_shared++]);
        }
        for (std::size_t i = 0; i < need_u; ++i) {
          to_u.push_back(i < q_only.size() ? q_only[i] : shared[next_shared++]);
        }
        std::sort(to_v.begin(), to_v.end());
        std::sort(to_u.begin(), to_u.end());

        PatternEmbedding e;
        e.pattern = which;
        e.image = {x, u, v};
        e.image.insert(e.image.end(), to_v.begin(), to_v.end());
        e.image.insert(e.image.end(), to_u.begin(), to_u.end());
        return e;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Star intersection bounds.

struct StarBound {
  int best = 0;
  /// Best over centers inside N(seed) / outside it.
  int best_adjacent_center = 0;
  int best_nonadjacent_center = 0;
  /// A star attaining `best`, when any disjoint star with m leaves exists.
  std::optional<Star> witness;
};

/// max |N(seed) ∩ V(K_{1,m})| over stars K_{1,m} vertex-disjoint from seed.
/// For a center x the optimum is [x ∈ N(seed)] + min(m, |N(seed) ∩ (N(x) \ seed)|)
/// provided x has at least m neighbors outside the seed.
StarBound star_intersection_bound(const Topology& t, std::span<const Vertex> seed, int m);

/// star_intersection_bound(...).best for every m in [0, max_m]; -1 where no
/// disjoint star with m leaves exists.
std::vector<int> star_intersection_profile(const Topology& t, std::span<const Vertex> seed,
                                           int max_m);

/// All vertex sets of size k inducing a connected subgraph, each sorted, in
/// lexicographic order.
std::vector<std::vector<Vertex>> connected_vertex_sets(const Topology& t, int k);

}  // namespace starcut
