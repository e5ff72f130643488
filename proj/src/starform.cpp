#include "starcut/starform.hpp"

#include <set>

#include "starcut/combinatorics.hpp"
#include "starcut/errors.hpp"

namespace starcut {

Star::Star(Vertex c, std::vector<Vertex> ls) : center(c), leaves(std::move(ls)) {
  std::sort(leaves.begin(), leaves.end());
}

std::vector<Vertex> Star::vertices() const {
  std::vector<Vertex> out;
  out.reserve(leaves.size() + 1);
  out.push_back(center);
  out.insert(out.end(), leaves.begin(), leaves.end());
  return out;
}

nlohmann::json star_to_json(const Star& s, int n) {
  return {{"center", format_vertex(s.center, n)}, {"leaves", format_vertices(s.leaves, n)}};
}

Star star_from_json(const nlohmann::json& j, int n) {
  if (!j.is_object() || !j.contains("center") || !j.contains("leaves") ||
      !j.at("center").is_string() || !j.at("leaves").is_array()) {
    throw ParseError("star must be an object with a 'center' string and a 'leaves' array");
  }
  std::vector<Vertex> leaves;
  for (const auto& l : j.at("leaves")) {
    if (!l.is_string()) throw ParseError("star leaves must be binary strings");
    leaves.push_back(parse_vertex(l.get<std::string>(), n));
  }
  return Star(parse_vertex(j.at("center").get<std::string>(), n), std::move(leaves));
}

StarEnumeration enumerate_stars(const Topology& t, int m, bool include_substars) {
  StarEnumeration out;
  if (m < 0) throw RangeError("enumerate_stars", "negative leaf count");
  if (m > t.degree()) {
    out.exceeds_degree = true;
    return out;
  }
  const int first = include_substars ? 0 : m;
  for (int size = first; size <= m; ++size) {
    for (std::uint32_t c = 0; c < t.vertex_count(); ++c) {
      const Vertex center{c};
      const auto nbrs = t.neighbors(center);
      for_each_combination(nbrs.size(), static_cast<std::size_t>(size),
                           [&](const std::vector<std::size_t>& idx) {
                             std::vector<Vertex> leaves;
                             leaves.reserve(idx.size());
                             for (auto i : idx) leaves.push_back(nbrs[i]);
                             out.stars.emplace_back(center, std::move(leaves));
                             return true;
                           });
    }
  }
  return out;
}

bool is_star_subgraph(const Topology& t, const Star& s) {
  if (!t.contains(s.center)) return false;
  for (std::size_t i = 0; i < s.leaves.size(); ++i) {
    const Vertex l = s.leaves[i];
    if (!t.contains(l) || l == s.center || !t.adjacent(s.center, l)) return false;
    if (i > 0 && s.leaves[i - 1] == l) return false;
  }
  return true;
}

bool induced_exact(const Topology& t, const Star& s) {
  if (!is_star_subgraph(t, s)) return false;
  for (std::size_t i = 0; i < s.leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < s.leaves.size(); ++j) {
      if (t.adjacent(s.leaves[i], s.leaves[j])) return false;
    }
  }
  return true;
}

Vertex resolve(Vertex u, NeighborSpec spec) {
  switch (spec.type) {
    case NeighborSpec::Type::Self:
      return u;
    case NeighborSpec::Type::Hypercube:
      return flip(u, spec.dim);
    case NeighborSpec::Type::Complement:
      return flip_low(u, spec.dim);
  }
  return u;
}

std::string describe(NeighborSpec spec) {
  switch (spec.type) {
    case NeighborSpec::Type::Self:
      return "u";
    case NeighborSpec::Type::Hypercube:
      return "u^" + std::to_string(spec.dim);
    case NeighborSpec::Type::Complement:
      return "~u^" + std::to_string(spec.dim);
  }
  return "?";
}

namespace {

int rank(NeighborSpec s) {
  switch (s.type) {
    case NeighborSpec::Type::Self:
      return 0;
    case NeighborSpec::Type::Hypercube:
      return 1;
    case NeighborSpec::Type::Complement:
      return 2;
  }
  return 3;
}

void check_dim(NeighborSpec s, int n, const std::string& lemma) {
  if (s.type == NeighborSpec::Type::Hypercube && (s.dim < 1 || s.dim > n)) {
    throw RangeError(lemma, "hypercube dimension " + std::to_string(s.dim) + " outside 1..n");
  }
  if (s.type == NeighborSpec::Type::Complement && (s.dim < 2 || s.dim > n)) {
    throw RangeError(lemma, "complement dimension " + std::to_string(s.dim) + " outside 2..n");
  }
}

LemmaPrediction make(std::string lemma, std::string label, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return {std::move(vs), std::move(lemma), std::move(label)};
}

}  // namespace

LemmaPrediction predicted_common_neighbors_aq(const Topology& t, Vertex u, NeighborSpec a,
                                              NeighborSpec b) {
  if (t.kind() != Kind::AugmentedCube) {
    throw RangeError("predicted_common_neighbors_aq", t.name() + " is not an augmented cube");
  }
  t.require(u);
  if (a == b) throw InvalidPair("the two neighbor specs denote the same vertex");
  if (rank(a) > rank(b) || (rank(a) == rank(b) && a.dim > b.dim)) std::swap(a, b);

  using T = NeighborSpec::Type;
  const int n = t.dimension();
  const auto hyp = [](Vertex x, int i) { return flip(x, i); };
  const auto cmp = [](Vertex x, int i) { return flip_low(x, i); };

  if (a.type == T::Self && b.type == T::Self) {
    throw InvalidPair("the two neighbor specs denote the same vertex");
  }

  if (a.type == T::Self && b.type == T::Hypercube) {
    const std::string lemma = "hypercube-edge";
    check_dim(b, n, lemma);
    if (n < 2) throw RangeError(lemma, "needs n >= 2");
    const int i = b.dim;
    if (i >= 2) return make(lemma, "2<=i<=n", {cmp(u, i), cmp(u, i - 1)});
    return make(lemma, "i=1", {cmp(u, 2), hyp(u, 2)});
  }

  if (a.type == T::Self && b.type == T::Complement) {
    const std::string lemma = "complement-edge";
    check_dim(b, n, lemma);
    const int i = b.dim;
    if (i <= n - 1) {
      return make(lemma, "2<=i<=n-1", {hyp(u, i), hyp(u, i + 1), cmp(u, i + 1), cmp(u, i - 1)});
    }
    return make(lemma, "i=n", {cmp(u, n - 1), hyp(u, n)});
  }

  if (a.type == T::Hypercube && b.type == T::Hypercube) {
    const std::string lemma = "two-hypercube-edges";
    check_dim(a, n, lemma);
    check_dim(b, n, lemma);
    if (n < 3) throw RangeError(lemma, "needs n >= 3");
    const int i = a.dim, j = b.dim;
    if (i == 1 && (j == 2 || j == 3)) {
      return make(lemma, "i=1,j in {2,3}", {u, flip(u, 1, 2), flip(u, 1, 3), flip(u, 2, 3)});
    }
    if (i >= 2 && j == i + 1) {
      return make(lemma, "i>=2,j=i+1", {u, flip(u, i, j), cmp(u, i), cmp(hyp(u, i), j)});
    }
    return make(lemma, "otherwise", {u, flip(u, i, j)});
  }

  if (a.type == T::Complement && b.type == T::Complement) {
    const std::string lemma = "two-complement-edges";
    check_dim(a, n, lemma);
    check_dim(b, n, lemma);
    if (n < 3) throw RangeError(lemma, "needs n >= 3");
    const int i = a.dim, j = b.dim;
    const Vertex ci = cmp(u, i);
    if (j == i + 2) return make(lemma, "j=i+2", {u, cmp(ci, j), cmp(u, i + 1), hyp(ci, j)});
    return make(lemma, "j=i+1 or j>i+2", {u, cmp(ci, j)});
  }

  // a hypercube, b complement
  const std::string lemma = "mixed-edges";
  check_dim(a, n, lemma);
  check_dim(b, n, lemma);
  if (n < 3) throw RangeError(lemma, "needs n >= 3");
  const int i = a.dim, j = b.dim;
  const Vertex ui = hyp(u, i);
  if (i == 1 && j == 3) {
    return make(lemma, "i=1,j=3", {u, flip(u, 1, 3), flip(u, 1, 2), flip(u, 2, 3)});
  }
  if (i == j && j >= 3) {
    return make(lemma, "i=j,3<=j<=n", {u, flip(u, i, i - 1), cmp(u, i - 1), hyp(cmp(u, i), i - 1)});
  }
  if (i == j + 1 && j >= 2 && j <= n - 2) {
    return make(lemma, "i=j+1,2<=j<=n-2", {u, flip(u, i, i + 1), cmp(u, i), cmp(ui, i + 1)});
  }
  if (i == j - 1 && j >= 3) {
    return make(lemma, "i=j-1,3<=j<=n", {u, flip(u, i, i + 1), cmp(u, i), cmp(ui, i + 1)});
  }
  if (i == j + 2 && j >= 2 && j <= n - 2) {
    return make(lemma, "i=j+2,2<=j<=n-2", {u, flip(u, i, i - 1), cmp(u, i - 1), cmp(ui, i - 2)});
  }
  return make(lemma, "otherwise", {u, cmp(ui, j)});
}

std::vector<std::pair<NeighborSpec, NeighborSpec>> classification_cases(int n) {
  using S = NeighborSpec;
  std::vector<std::pair<S, S>> out;
  if (n < 2) return out;
  for (int i = 1; i <= n; ++i) out.emplace_back(S::self(), S::hypercube(i));
  for (int i = 2; i <= n; ++i) out.emplace_back(S::self(), S::complement(i));
  if (n < 3) return out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(S::hypercube(i), S::hypercube(j));
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(S::complement(i), S::complement(j));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 2; j <= n; ++j) out.emplace_back(S::hypercube(i), S::complement(j));
  }
  return out;
}

void ExplicitGraph::add_edge(std::uint32_t a, std::uint32_t b) {
  if (a == b) throw std::invalid_argument("self-loop");
  auto insert = [](std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert(adj_.at(a), Vertex{b});
  insert(adj_.at(b), Vertex{a});
}

bool ExplicitGraph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adj_.at(a.bits);
  return std::binary_search(list.begin(), list.end(), b);
}

std::string_view pattern_name(Pattern p) { return p == Pattern::T ? "T" : "H"; }

std::vector<std::string> pattern_roles(Pattern p) {
  std::vector<std::string> roles = {"x", "u", "v"};
  const int leaves = p == Pattern::T ? 8 : 7;
  for (int i = 1; i <= leaves; ++i) roles.push_back("x" + std::to_string(i));
  return roles;
}

std::vector<std::pair<int, int>> pattern_edges(Pattern p) {
  // role indices: x=0, u=1, v=2, x_i = 2+i
  constexpr int x = 0, u = 1, v = 2;
  std::vector<std::pair<int, int>> e = {{u, v}};
  if (p == Pattern::H) e.emplace_back(v, x);
  for (int i = 1; i <= 4; ++i) e.emplace_back(v, 2 + i);
  const int leaves = p == Pattern::T ? 8 : 7;
  for (int i = 5; i <= leaves; ++i) e.emplace_back(u, 2 + i);
  for (int i = 1; i <= leaves; ++i) e.emplace_back(x, 2 + i);
  return e;
}

nlohmann::json embedding_to_json(const PatternEmbedding& e, int n) {
  nlohmann::json roles = nlohmann::json::object();
  const auto names = pattern_roles(e.pattern);
  for (std::size_t i = 0; i < names.size() && i < e.image.size(); ++i) {
    roles[names[i]] = format_vertex(e.image[i], n);
  }
  return {{"pattern", pattern_name(e.pattern)}, {"roles", roles}};
}

namespace {

struct SeedMarks {
  std::vector<char> in_seed;
  std::vector<char> in_boundary;  // N(seed) \ seed
};

SeedMarks mark_seed(const Topology& t, std::span<const Vertex> seed) {
  SeedMarks marks{std::vector<char>(t.vertex_count(), 0), std::vector<char>(t.vertex_count(), 0)};
  for (Vertex s : seed) {
    t.require(s);
    marks.in_seed[s.bits] = 1;
  }
  for (Vertex s : seed) {
    for (auto g : t.generators()) {
      const std::uint32_t y = s.bits ^ g;
      if (!marks.in_seed[y]) marks.in_boundary[y] = 1;
    }
  }
  return marks;
}

}  // namespace

StarBound star_intersection_bound(const Topology& t, std::span<const Vertex> seed, int m) {
  StarBound out;
  const auto marks = mark_seed(t, seed);
  int best = -1;
  for (std::uint32_t x = 0; x < t.vertex_count(); ++x) {
    if (marks.in_seed[x]) continue;
    std::vector<Vertex> hits, others;
    for (auto g : t.generators()) {
      const std::uint32_t y = x ^ g;
      if (marks.in_seed[y]) continue;
      (marks.in_boundary[y] ? hits : others).push_back(Vertex{y});
    }
    if (static_cast<int>(hits.size() + others.size()) < m) continue;
    const int adjacent = marks.in_boundary[x] ? 1 : 0;
    const int value = adjacent + std::min(m, static_cast<int>(hits.size()));
    if (adjacent) {
      out.best_adjacent_center = std::max(out.best_adjacent_center, value);
    } else {
      out.best_nonadjacent_center = std::max(out.best_nonadjacent_center, value);
    }
    if (value > best) {
      best = value;
      std::vector<Vertex> leaves;
      for (const Vertex h : hits) {
        if (static_cast<int>(leaves.size()) == m) break;
        leaves.push_back(h);
      }
      for (const Vertex o : others) {
        if (static_cast<int>(leaves.size()) == m) break;
        leaves.push_back(o);
      }
      out.witness = Star(Vertex{x}, std::move(leaves));
    }
  }
  out.best = std::max(best, 0);
  return out;
}

std::vector<int> star_intersection_profile(const Topology& t, std::span<const Vertex> seed,
                                           int max_m) {
  std::vector<int> best(static_cast<std::size_t>(max_m) + 1, -1);
  const auto marks = mark_seed(t, seed);
  for (std::uint32_t x = 0; x < t.vertex_count(); ++x) {
    if (marks.in_seed[x]) continue;
    int hits = 0, avail = 0;
    for (auto g : t.generators()) {
      const std::uint32_t y = x ^ g;
      if (marks.in_seed[y]) continue;
      ++avail;
      if (marks.in_boundary[y]) ++hits;
    }
    const int adjacent = marks.in_boundary[x] ? 1 : 0;
    for (int m = 0; m <= std::min(max_m, avail); ++m) {
      best[static_cast<std::size_t>(m)] =
          std::max(best[static_cast<std::size_t>(m)], adjacent + std::min(m, hits));
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> connected_vertex_sets(const Topology& t, int k) {
  if (k < 1) return {};
  std::set<std::vector<Vertex>> level;
  for (std::uint32_t v = 0; v < t.vertex_count(); ++v) level.insert({Vertex{v}});
  for (int size = 2; size <= k; ++size) {
    std::set<std::vector<Vertex>> next;
    for (const auto& s : level) {
      for (Vertex member : s) {
        for (auto g : t.generators()) {
          const Vertex w{member.bits ^ g};
          if (std::binary_search(s.begin(), s.end(), w)) continue;
          auto grown = s;
          grown.insert(std::lower_bound(grown.begin(), grown.end(), w), w);
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace starcut
