#include "starcut/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <random>

#include "starcut/combinatorics.hpp"
#include "starcut/errors.hpp"

namespace starcut {

std::size_t CutVerdict::smallest_component() const {
  return component_sizes.empty() ? 0 : component_sizes.back();
}

bool CutVerdict::isolates(Vertex v) const {
  return std::find(isolated_vertices.begin(), isolated_vertices.end(), v) !=
         isolated_vertices.end();
}

CutVerdict remove_and_components(const Topology& t, std::span<const Vertex> removed) {
  const std::uint32_t count = t.vertex_count();
  std::vector<char> gone(count, 0);
  CutVerdict v;
  for (Vertex r : removed) {
    t.require(r);
    if (!gone[r.bits]) {
      gone[r.bits] = 1;
      ++v.removed_count;
    }
  }

  std::vector<char> seen(count, 0);
  std::vector<std::uint32_t> queue;
  queue.reserve(count);
  for (std::uint32_t start = 0; start < count; ++start) {
    if (gone[start] || seen[start]) continue;
    queue.clear();
    queue.push_back(start);
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t x = queue[head];
      for (auto g : t.generators()) {
        const std::uint32_t y = x ^ g;
        if (!gone[y] && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    v.components.push_back({Vertex{start}, queue.size()});
    if (queue.size() == 1) v.isolated_vertices.push_back(Vertex{start});
  }

  v.component_count = v.components.size();
  for (const auto& c : v.components) v.component_sizes.push_back(c.size);
  std::sort(v.component_sizes.begin(), v.component_sizes.end(), std::greater<>());
  const std::size_t remaining = count - v.removed_count;
  v.is_cut = v.component_count >= 2 || remaining == 1;
  return v;
}

CutVerdict verify_cut(const Topology& t, const StarFamily& family) {
  std::vector<MemberDiagnostic> diags;
  bool all_valid = true;
  const bool same_topology = family.kind == t.kind() && family.n == t.dimension();
  std::map<std::uint32_t, std::vector<std::size_t>> owners;
  std::vector<Vertex> removed;

  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const Star& s = family.members[i];
    MemberDiagnostic d;
    d.index = i;
    d.leaf_count = s.leaf_count();
    if (!same_topology) {
      d.problem = "family is declared for " + std::string(kind_name(family.kind)) + " n=" +
                  std::to_string(family.n) + ", verified against " + t.name();
    } else if (!t.contains(s.center)) {
      d.problem = "center out of range";
    } else if (family.mode == CutMode::Structure && d.leaf_count != family.m) {
      d.problem = "has " + std::to_string(d.leaf_count) + " leaves, structure mode needs " +
                  std::to_string(family.m);
    } else if (family.mode == CutMode::Substructure && d.leaf_count > family.m) {
      d.problem = "has " + std::to_string(d.leaf_count) + " leaves, more than m=" +
                  std::to_string(family.m);
    } else {
      for (std::size_t k = 0; k < s.leaves.size() && d.problem.empty(); ++k) {
        const Vertex l = s.leaves[k];
        if (!t.contains(l)) {
          d.problem = "leaf out of range";
        } else if (l == s.center) {
          d.problem = "leaf " + format_vertex(l, t) + " equals the center";
        } else if (k > 0 && s.leaves[k - 1] == l) {
          d.problem = "duplicate leaf " + format_vertex(l, t);
        } else if (!t.adjacent(s.center, l)) {
          d.problem = "leaf " + format_vertex(l, t) + " not adjacent to center " +
                      format_vertex(s.center, t);
        }
      }
    }
    d.valid = d.problem.empty();
    d.induced_exact = d.valid && induced_exact(t, s);
    all_valid = all_valid && d.valid;
    if (same_topology) {
      std::vector<Vertex> vs = s.vertices();
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      for (Vertex x : vs) {
        if (!t.contains(x)) continue;
        owners[x.bits].push_back(i);
        removed.push_back(x);
      }
    }
    diags.push_back(std::move(d));
  }

  CutVerdict v = remove_and_components(t, removed);
  v.members = std::move(diags);
  v.members_valid = all_valid;
  for (auto& [bits, who] : owners) {
    if (who.size() > 1) v.overlaps.push_back({Vertex{bits}, who});
  }
  v.is_cut = v.is_cut && all_valid;
  return v;
}

nlohmann::json verdict_to_json(const CutVerdict& v, int n) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& d : v.members) {
    nlohmann::json m = {{"index", d.index},
                        {"valid", d.valid},
                        {"induced_exact", d.induced_exact},
                        {"leaf_count", d.leaf_count}};
    if (!d.valid) m["problem"] = d.problem;
    members.push_back(std::move(m));
  }
  nlohmann::json overlaps = nlohmann::json::array();
  for (const auto& o : v.overlaps) {
    overlaps.push_back({{"vertex", format_vertex(o.vertex, n)}, {"members", o.members}});
  }
  return {{"is_cut", v.is_cut},
          {"component_count", v.component_count},
          {"component_sizes", v.component_sizes},
          {"smallest_component", v.smallest_component()},
          {"isolated_vertices", format_vertices(v.isolated_vertices, n)},
          {"removed_count", v.removed_count},
          {"members_valid", v.members_valid},
          {"members", members},
          {"overlaps", overlaps}};
}

// ---------------------------------------------------------------------------

namespace {

struct CandidatePool {
  std::vector<Star> stars;
  std::vector<std::uint64_t> masks;
};

CandidatePool build_pool(const Topology& t, int m, CutMode mode) {
  CandidatePool pool;
  if (m < 0) return pool;
  auto stars = enumerate_stars(t, m, mode == CutMode::Substructure);
  std::vector<std::uint64_t> seen;
  for (auto& s : stars.stars) {
    std::uint64_t mask = 0;
    for (Vertex v : s.vertices()) mask |= std::uint64_t{1} << v.bits;
    // Same vertex set, same effect on G - V(F).
    if (std::find(seen.begin(), seen.end(), mask) != seen.end()) continue;
    seen.push_back(mask);
    pool.masks.push_back(mask);
    pool.stars.push_back(std::move(s));
  }
  return pool;
}

bool mask_is_cut(std::uint64_t remaining, const std::vector<std::uint64_t>& nbr) {
  if (remaining == 0) return false;
  if (std::has_single_bit(remaining)) return true;
  std::uint64_t reached = remaining & (~remaining + 1);
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= nbr[static_cast<std::size_t>(v)];
    }
    next &= remaining & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached != remaining;
}

}  // namespace

std::uint64_t oracle_cost_estimate(const Topology& t, int m, CutMode mode, int max_size) {
  if (t.dimension() > kOracleMaxDimension) return UINT64_MAX;
  const auto pool = build_pool(t, m, mode);
  std::uint64_t total = 0;
  for (int s = 1; s <= max_size; ++s) {
    const auto c = binomial(pool.stars.size(), static_cast<std::uint64_t>(s));
    total = c > UINT64_MAX - total ? UINT64_MAX : total + c;
  }
  return total;
}

OracleResult brute_min_star_cut(const Topology& t, int m, CutMode mode, int max_size,
                                OracleOptions options) {
  if (t.dimension() > kOracleMaxDimension) {
    throw RangeError("brute_min_star_cut", "n > " + std::to_string(kOracleMaxDimension) +
                                               " is beyond the exhaustive oracle");
  }
  if (t.dimension() > kOracleGuardDimension && !options.allow_large) {
    throw GuardError("brute_min_star_cut: n > " + std::to_string(kOracleGuardDimension) +
                     " requires an explicit override");
  }
  if (max_size < 0) throw RangeError("brute_min_star_cut", "max_size must be >= 0");

  OracleResult r;
  r.mode = mode;
  r.m = m;
  r.search_ceiling = max_size;
  r.strict_disjoint = options.strict_disjoint;

  const auto pool = build_pool(t, m, mode);
  r.candidate_pool = pool.stars.size();
  const std::uint64_t full =
      t.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t.vertex_count()) - 1;
  std::vector<std::uint64_t> nbr(t.vertex_count(), 0);
  for (std::uint32_t v = 0; v < t.vertex_count(); ++v) {
    for (auto g : t.generators()) nbr[v] |= std::uint64_t{1} << (v ^ g);
  }

  for (int size = 1; size <= max_size; ++size) {
    std::optional<std::vector<std::size_t>> witness;
    for_each_combination(pool.stars.size(), static_cast<std::size_t>(size),
                         [&](const std::vector<std::size_t>& idx) {
                           std::uint64_t removed = 0;
                           for (auto i : idx) {
                             if (options.strict_disjoint && (removed & pool.masks[i])) return true;
                             removed |= pool.masks[i];
                           }
                           ++r.families_examined;
                           if (mask_is_cut(full & ~removed, nbr)) {
                             witness = idx;
                             return false;
                           }
                           return true;
                         });
    if (witness) {
      StarFamily f;
      f.kind = t.kind();
      f.n = t.dimension();
      f.m = m;
      f.mode = mode;
      for (auto i : *witness) f.members.push_back(pool.stars[i]);
      r.found_cut = std::move(f);
      r.exact_value = size;
      break;
    }
  }
  return r;
}

nlohmann::json oracle_to_json(const OracleResult& r) {
  nlohmann::json j = {{"mode", mode_name(r.mode)},
                      {"m", r.m},
                      {"search_ceiling", r.search_ceiling},
                      {"families_examined", r.families_examined},
                      {"candidate_pool", r.candidate_pool},
                      {"strict_disjoint", r.strict_disjoint}};
  j["exact_value"] = r.exact_value ? nlohmann::json(*r.exact_value) : nlohmann::json(nullptr);
  j["found_cut"] = r.found_cut ? family_to_json(*r.found_cut) : nlohmann::json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------

namespace {

/// Unit vertex capacities via in/out splitting: in(v) = 2v, out(v) = 2v + 1.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Topology& t) : nodes_(2 * t.vertex_count()), head_(nodes_, -1) {
    for (std::uint32_t v = 0; v < t.vertex_count(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (std::uint32_t v = 0; v < t.vertex_count(); ++v) {
      for (auto g : t.generators()) add_arc(2 * v + 1, 2 * (v ^ g), 1);
    }
    base_cap_ = cap_;
  }

  int max_flow(std::uint32_t s, std::uint32_t target) {
    cap_ = base_cap_;
    const int source = static_cast<int>(2 * s + 1);
    const int sink = static_cast<int>(2 * target);
    int flow = 0;
    std::vector<int> via(nodes_);
    std::vector<int> queue;
    queue.reserve(nodes_);
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      queue.clear();
      queue.push_back(source);
      via[static_cast<std::size_t>(source)] = -2;
      for (std::size_t h = 0; h < queue.size() && via[static_cast<std::size_t>(sink)] == -1; ++h) {
        const int x = queue[h];
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1;
             a = next_[static_cast<std::size_t>(a)]) {
          const int y = to_[static_cast<std::size_t>(a)];
          if (cap_[static_cast<std::size_t>(a)] > 0 && via[static_cast<std::size_t>(y)] == -1) {
            via[static_cast<std::size_t>(y)] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) return flow;
      for (int y = sink; y != source;) {
        const int a = via[static_cast<std::size_t>(y)];
        --cap_[static_cast<std::size_t>(a)];
        ++cap_[static_cast<std::size_t>(a ^ 1)];
        y = to_[static_cast<std::size_t>(a ^ 1)];
      }
      ++flow;
    }
  }

 private:
  void add_arc(std::uint32_t from, std::uint32_t to, int cap) {
    push(from, to, cap);
    push(to, from, 0);
  }
  void push(std::uint32_t from, std::uint32_t to, int cap) {
    to_.push_back(static_cast<int>(to));
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size() - 1);
  }

  std::size_t nodes_;
  std::vector<int> head_, next_, to_, cap_, base_cap_;
};

}  // namespace

int local_connectivity(const Topology& t, Vertex s, Vertex target) {
  t.require(s);
  t.require(target);
  if (s == target || t.adjacent(s, target)) {
    throw InvalidPair("local_connectivity needs two distinct non-adjacent vertices");
  }
  SplitFlowNetwork net(t);
  return net.max_flow(s.bits, target.bits);
}

int vertex_connectivity(const Topology& t) {
  if (t.dimension() > kConnectivityMaxDimension) {
    throw RangeError("vertex_connectivity", "2^n > 1024");
  }
  const std::uint32_t count = t.vertex_count();
  if (static_cast<std::uint32_t>(t.degree()) == count - 1) return static_cast<int>(count - 1);
  SplitFlowNetwork net(t);
  int best = t.degree();
  // Some vertex among the first best+1 lies outside a minimum separator, and
  // a vertex of another component has a larger index.
  for (std::uint32_t i = 0; i < count && static_cast<int>(i) <= best; ++i) {
    for (std::uint32_t j = i + 1; j < count; ++j) {
      if (t.adjacent(Vertex{i}, Vertex{j})) continue;
      best = std::min(best, net.max_flow(i, j));
    }
  }
  return best;
}

namespace {

std::vector<int> bfs_distances(const Topology& t, std::uint32_t source) {
  std::vector<int> dist(t.vertex_count(), -1);
  std::vector<std::uint32_t> queue = {source};
  dist[source] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::uint32_t x = queue[h];
    for (auto g : t.generators()) {
      const std::uint32_t y = x ^ g;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_bipartite(const Topology& t) {
  // Connected, so one BFS colors everything.
  const auto dist = bfs_distances(t, 0);
  for (std::uint32_t x = 0; x < t.vertex_count(); ++x) {
    for (auto g : t.generators()) {
      if (dist[x] == dist[x ^ g]) return false;
    }
  }
  return true;
}

std::optional<int> odd_girth(const Topology& t) {
  // Cayley graph: vertex-transitive, so a shortest odd cycle passes through 0.
  // An edge with equal BFS depth d closes an odd walk of length 2d + 1.
  const auto dist = bfs_distances(t, 0);
  std::optional<int> best;
  for (std::uint32_t x = 0; x < t.vertex_count(); ++x) {
    for (auto g : t.generators()) {
      if (dist[x] == dist[x ^ g]) {
        const int len = 2 * dist[x] + 1;
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

std::string_view case_name(StructureCase c) {
  switch (c) {
    case StructureCase::I:
      return "i";
    case StructureCase::II:
      return "ii";
    case StructureCase::III:
      return "iii";
  }
  return "?";
}

namespace {

/// Largest integer strictly below x.
long largest_below(double x) { return static_cast<long>(std::ceil(x)) - 1; }

}  // namespace

std::vector<StructureConfig> component_structure_configs(int n) {
  std::vector<StructureConfig> out;
  if (n < 4) return out;
  for (int k = 1; k <= n - 2; ++k) {
    out.push_back({StructureCase::I, k, largest_below(f_eval(n, k)), k - 1});
  }
  for (int k = n - 1; k <= n + 1; ++k) {
    out.push_back({StructureCase::II, k, largest_below(f_eval(n, k)), n + 1});
  }
  for (int k = n + 2; k <= 2 * n - 4; ++k) {
    out.push_back({StructureCase::III, k, largest_below(g_eval(n, k)), k - 1});
  }
  std::erase_if(out, [](const StructureConfig& c) { return c.set_size < 0; });
  return out;
}

ShapeCheck check_component_shape(const Topology& t, std::span<const Vertex> removed, long slack) {
  const auto v = remove_and_components(t, removed);
  const long total = static_cast<long>(t.vertex_count());
  const long threshold = total - static_cast<long>(v.removed_count) - slack;
  ShapeCheck s;
  std::size_t remaining = 0;
  for (auto size : v.component_sizes) {
    remaining += size;
    if (static_cast<long>(size) >= threshold) {
      ++s.large_components;
      s.large_order = std::max(s.large_order, size);
    }
  }
  s.small_total = remaining - s.large_order;
  s.holds = s.large_components == 1 && static_cast<long>(s.small_total) <= slack;
  return s;
}

bool ComponentStructureReport::pass() const { return !no_applicable_range && violations() == 0; }

int ComponentStructureReport::violations() const {
  int total = 0;
  for (const auto& r : results) total += r.violations;
  return total;
}

namespace {

/// Uniform integer in [0, bound) that does not depend on the standard
/// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::vector<Vertex> random_subset(std::mt19937_64& rng, std::vector<Vertex> pool, std::size_t k) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

/// N(C) for a random connected C of random order in [1, max_order], padded
/// with random outside vertices or trimmed to exactly `size` vertices.
std::vector<Vertex> neighborhood_seeded_set(const Topology& t, std::mt19937_64& rng,
                                            std::size_t size, int max_order) {
  const std::uint32_t count = t.vertex_count();
  std::vector<char> in_c(count, 0);
  std::vector<Vertex> c = {Vertex{static_cast<std::uint32_t>(uniform_below(rng, count))}};
  in_c[c[0].bits] = 1;
  const auto order = 1 + uniform_below(rng, static_cast<std::uint64_t>(std::max(1, max_order)));
  while (c.size() < order) {
    const Vertex base = c[uniform_below(rng, c.size())];
    const auto g = t.generators()[uniform_below(rng, t.generators().size())];
    const Vertex w{base.bits ^ g};
    if (!in_c[w.bits]) {
      in_c[w.bits] = 1;
      c.push_back(w);
    }
  }
  std::vector<char> in_nc(count, 0);
  std::vector<Vertex> boundary;
  for (Vertex x : c) {
    for (auto g : t.generators()) {
      const std::uint32_t y = x.bits ^ g;
      if (!in_c[y] && !in_nc[y]) {
        in_nc[y] = 1;
        boundary.push_back(Vertex{y});
      }
    }
  }
  std::sort(boundary.begin(), boundary.end());
  if (boundary.size() >= size) return random_subset(rng, boundary, size);
  std::vector<Vertex> rest;
  for (std::uint32_t y = 0; y < count; ++y) {
    if (!in_c[y] && !in_nc[y]) rest.push_back(Vertex{y});
  }
  auto pad = random_subset(rng, rest, size - boundary.size());
  boundary.insert(boundary.end(), pad.begin(), pad.end());
  return boundary;
}

}  // namespace

ComponentStructureReport check_component_structure(const Topology& t, int trials,
                                                   std::uint64_t seed) {
  ComponentStructureReport report;
  report.kind = t.kind();
  report.n = t.dimension();
  report.seed = seed;
  report.trials = trials;
  const auto configs = component_structure_configs(t.dimension());
  report.no_applicable_range = configs.empty();

  std::mt19937_64 rng(seed);
  std::vector<Vertex> all(t.vertex_count());
  for (std::uint32_t v = 0; v < t.vertex_count(); ++v) all[v] = Vertex{v};

  for (const auto& cfg : configs) {
    StructureTrialResult res;
    res.config = cfg;
    const auto size = static_cast<std::size_t>(
        std::min<long>(cfg.set_size, static_cast<long>(t.vertex_count()) - 1));
    const auto record = [&](const std::vector<Vertex>& s) {
      if (!check_component_shape(t, s, cfg.slack).holds) {
        ++res.violations;
        if (!res.witness) {
          auto sorted = s;
          std::sort(sorted.begin(), sorted.end());
          res.witness = std::move(sorted);
        }
      }
    };
    for (int i = 0; i < trials; ++i) {
      record(random_subset(rng, all, size));
      ++res.uniform_trials;
    }
    for (int i = 0; i < trials; ++i) {
      record(neighborhood_seeded_set(t, rng, size, cfg.k + 1));
      ++res.seeded_trials;
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

nlohmann::json structure_report_to_json(const ComponentStructureReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& res : r.results) {
    nlohmann::json row = {{"case", case_name(res.config.which)},
                          {"k", res.config.k},
                          {"set_size", res.config.set_size},
                          {"slack", res.config.slack},
                          {"uniform_trials", res.uniform_trials},
                          {"seeded_trials", res.seeded_trials},
                          {"violations", res.violations}};
    if (res.witness) row["witness"] = format_vertices(*res.witness, r.n);
    rows.push_back(std::move(row));
  }
  return {{"kind", kind_name(r.kind)},
          {"n", r.n},
          {"seed", r.seed},
          {"trials", r.trials},
          {"no_applicable_range", r.no_applicable_range},
          {"pass", r.pass()},
          {"configurations", rows}};
}

}  // namespace starcut
