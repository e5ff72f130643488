#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "starcut/cuts.hpp"
#include "starcut/starform.hpp"
#include "starcut/topology.hpp"

namespace starcut {

// ---------------------------------------------------------------------------
// Removal and cut verification

struct ComponentInfo {
  Vertex smallest;
  std::size_t size = 0;
};

struct MemberDiagnostic {
  std::size_t index = 0;
  bool valid = false;
  bool induced_exact = false;
  int leaf_count = 0;
  std::string problem;  // empty when valid
};

struct OverlapEntry {
  Vertex vertex;
  std::vector<std::size_t> members;
};

/// Component decomposition of G - removed, plus per-member diagnostics when
/// produced by verify_cut.
struct CutVerdict {
  bool is_cut = false;
  std::size_t component_count = 0;
  std::vector<std::size_t> component_sizes;  // descending
  std::vector<ComponentInfo> components;     // ordered by smallest label
  std::vector<Vertex> isolated_vertices;
  std::size_t removed_count = 0;
  bool members_valid = true;
  std::vector<MemberDiagnostic> members;
  std::vector<OverlapEntry> overlaps;

  /// Order of the smallest component, 0 if nothing remains.
  std::size_t smallest_component() const;
  bool isolates(Vertex v) const;
};

/// G - removed is a cut iff it has >= 2 components or exactly one vertex.
/// Duplicate entries in `removed` are ignored.
CutVerdict remove_and_components(const Topology& t, std::span<const Vertex> removed);

/// Validates every member against the family's mode and m, reports overlaps,
/// then removes the union of member vertex sets. Invalid members make
/// is_cut false; they never throw.
CutVerdict verify_cut(const Topology& t, const StarFamily& family);

nlohmann::json verdict_to_json(const CutVerdict& v, int n);

// ---------------------------------------------------------------------------
// Brute-force structure connectivity

inline constexpr int kOracleGuardDimension = 4;
inline constexpr int kOracleMaxDimension = 6;

struct OracleOptions {
  /// Allow n in (kOracleGuardDimension, kOracleMaxDimension].
  bool allow_large = false;
  /// Only consider families whose members are pairwise vertex-disjoint.
  bool strict_disjoint = false;
};

struct OracleResult {
  CutMode mode = CutMode::Structure;
  int m = 0;
  std::optional<StarFamily> found_cut;
  std::optional<int> exact_value;
  int search_ceiling = 0;
  std::uint64_t families_examined = 0;
  std::size_t candidate_pool = 0;
  bool strict_disjoint = false;
};

/// Number of families the oracle would test in the worst case.
std::uint64_t oracle_cost_estimate(const Topology& t, int m, CutMode mode, int max_size);

/// Tries families of size 1, 2, ..., max_size drawn from enumerate_stars
/// (exactly m leaves in structure mode, 0..m in substructure mode) and returns
/// the first size admitting a cut together with the lexicographically first
/// witness. Candidates with identical vertex sets are tested once.
/// Throws GuardError for n > 4 unless allow_large, RangeError for n > 6.
OracleResult brute_min_star_cut(const Topology& t, int m, CutMode mode, int max_size,
                                OracleOptions options = {});

nlohmann::json oracle_to_json(const OracleResult& r);

// ---------------------------------------------------------------------------
// Classical connectivity

inline constexpr int kConnectivityMaxDimension = 10;

/// Number of internally vertex-disjoint s–t paths (s, t non-adjacent).
int local_connectivity(const Topology& t, Vertex s, Vertex target);

/// κ(G) via unit-capacity vertex-split max-flow over non-adjacent pairs.
/// Throws RangeError when 2^n > 1024.
int vertex_connectivity(const Topology& t);

bool is_bipartite(const Topology& t);
/// Length of a shortest odd cycle; nullopt for bipartite graphs.
std::optional<int> odd_girth(const Topology& t);

// ---------------------------------------------------------------------------
// One-large-component structure under small vertex removals

enum class StructureCase { I, II, III };

std::string_view case_name(StructureCase c);

/// One (case, k) configuration: removed sets have `set_size` = largest
/// integer below f(k) (cases I, II) or g(k) (case III); at most `slack`
/// vertices may lie outside the unique large component.
struct StructureConfig {
  StructureCase which = StructureCase::I;
  int k = 0;
  long set_size = 0;
  long slack = 0;
};

/// Case I: 1 <= k <= n-2; II: n-1 <= k <= n+1; III: n+2 <= k <= 2n-4.
/// Empty for n < 4.
std::vector<StructureConfig> component_structure_configs(int n);

struct ShapeCheck {
  bool holds = false;
  std::size_t large_components = 0;
  std::size_t large_order = 0;
  std::size_t small_total = 0;
};

/// Exactly one component of order >= 2^n - |S| - slack, the rest totalling
/// at most `slack` vertices.
ShapeCheck check_component_shape(const Topology& t, std::span<const Vertex> removed, long slack);

struct StructureTrialResult {
  StructureConfig config;
  int uniform_trials = 0;
  int seeded_trials = 0;
  int violations = 0;
  std::optional<std::vector<Vertex>> witness;
};

struct ComponentStructureReport {
  Kind kind = Kind::Hypercube;
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  bool no_applicable_range = false;
  std::vector<StructureTrialResult> results;

  bool pass() const;
  int violations() const;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// For every configuration: `trials` uniformly random removed sets, plus
/// `trials` sets built around the neighborhood of a random small connected
/// vertex set (padded or trimmed to the configured size).
ComponentStructureReport check_component_structure(const Topology& t, int trials,
                                                   std::uint64_t seed);

nlohmann::json structure_report_to_json(const ComponentStructureReport& r);

// ---------------------------------------------------------------------------
// Named lemma sweeps

struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "a..b" (inclusive) or a single integer.
IntRange parse_range(std::string_view s);
std::string format_range(IntRange r);

struct LemmaParams {
  std::optional<IntRange> n;
  std::uint64_t seed = kDefaultSeed;
  int trials = 1000;
  int max_subgraph_order = 4;
};

struct LemmaReport {
  std::string name;
  nlohmann::json parameters;
  std::uint64_t checks_performed = 0;
  std::uint64_t failures = 0;
  bool pass = true;
  std::vector<nlohmann::json> counterexamples;  // at most kMaxCounterexamples
  nlohmann::json details = nlohmann::json::object();
};

inline constexpr std::size_t kMaxCounterexamples = 10;

const std::vector<std::string>& lemma_suite_names();
IntRange default_suite_range(std::string_view name);

/// Throws ParseError for an unknown name.
LemmaReport run_lemma_suite(std::string_view name, const LemmaParams& params);

nlohmann::json lemma_report_to_json(const LemmaReport& r);

}  // namespace starcut
