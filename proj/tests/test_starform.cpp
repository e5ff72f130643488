#include <doctest.h>

#include "starcut/errors.hpp"
#include "starcut/starform.hpp"

using namespace starcut;

namespace {

Vertex v(std::string_view s) { return parse_vertex(s, static_cast<int>(s.size())); }

std::vector<std::string> labels(const std::vector<Vertex>& vs, int n) {
  return format_vertices(vs, n);
}

/// Figure-style T or H wired on roles 0..k with role indices as labels.
ExplicitGraph pattern_graph(Pattern p) {
  ExplicitGraph g(static_cast<std::uint32_t>(pattern_roles(p).size()));
  for (auto [a, b] : pattern_edges(p)) {
    g.add_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  return g;
}

}  // namespace

TEST_SUITE("starform") {
  TEST_CASE("star enumeration counts") {
    CHECK(enumerate_stars(Topology(Kind::Hypercube, 3), 2, false).stars.size() == 24);
    CHECK(enumerate_stars(Topology(Kind::FoldedHypercube, 3), 2, false).stars.size() == 48);
    CHECK(enumerate_stars(Topology(Kind::AugmentedCube, 4), 3, false).stars.size() == 560);
    // Substars: 8 single vertices + 12 edges (counted once per center: 24) + 24.
    CHECK(enumerate_stars(Topology(Kind::Hypercube, 3), 2, true).stars.size() == 8 + 24 + 24);
    const auto too_big = enumerate_stars(Topology(Kind::Hypercube, 3), 4, false);
    CHECK(too_big.stars.empty());
    CHECK(too_big.exceeds_degree);
  }

  TEST_CASE("enumeration order is size, then center, then leaves") {
    const auto e = enumerate_stars(Topology(Kind::Hypercube, 3), 1, true);
    REQUIRE(e.stars.size() == 8 + 24);
    CHECK(e.stars[0].leaf_count() == 0);
    CHECK(e.stars[8].center == Vertex{0});
    CHECK(e.stars[8].leaves == std::vector<Vertex>{Vertex{1}});
    CHECK(e.stars[10].leaves == std::vector<Vertex>{Vertex{4}});
    CHECK(e.stars[11].center == Vertex{1});
  }

  TEST_CASE("star membership") {
    const Topology fq6(Kind::FoldedHypercube, 6);
    const Star s(v("000011"), {v("000001"), v("000010"), v("000111"), v("001011"), v("010011")});
    CHECK(is_star_subgraph(fq6, s));
    CHECK(induced_exact(fq6, s));
    const Topology q3(Kind::Hypercube, 3);
    CHECK_FALSE(is_star_subgraph(q3, Star(v("000"), {v("011")})));
    CHECK(is_star_subgraph(q3, Star(v("101"), {})));
    CHECK(induced_exact(q3, Star(v("101"), {})));
    CHECK_FALSE(is_star_subgraph(q3, Star(v("000"), {v("001"), v("001")})));
    CHECK_FALSE(is_star_subgraph(q3, Star(v("000"), {v("000")})));
    // Leaves 0001 and 0010 are joined by a complement edge in AQ_4.
    const Topology aq4(Kind::AugmentedCube, 4);
    const Star t(v("0011"), {v("0001"), v("0010")});
    CHECK(is_star_subgraph(aq4, t));
    CHECK_FALSE(induced_exact(aq4, t));
  }

  TEST_CASE("star json") {
    const Star s(v("0011"), {v("0010"), v("0001")});
    const auto j = star_to_json(s, 4);
    CHECK(j["center"] == "0011");
    CHECK(j["leaves"] == nlohmann::json::array({"0001", "0010"}));
    CHECK(star_from_json(j, 4) == s);
    CHECK_THROWS_AS(star_from_json(nlohmann::json{{"center", "0011"}}, 4), ParseError);
  }

  TEST_CASE("closed-form common neighbors in AQ_4") {
    const Topology t(Kind::AugmentedCube, 4);
    using S = NeighborSpec;
    const Vertex u{0};
    auto p = predicted_common_neighbors_aq(t, u, S::self(), S::hypercube(3));
    CHECK(labels(p.vertices, 4) == std::vector<std::string>{"0011", "0111"});
    CHECK(p.lemma == "hypercube-edge");
    p = predicted_common_neighbors_aq(t, u, S::self(), S::complement(4));
    CHECK(labels(p.vertices, 4) == std::vector<std::string>{"0111", "1000"});
    CHECK(p.case_label == "i=n");
    p = predicted_common_neighbors_aq(t, u, S::hypercube(2), S::hypercube(3));
    CHECK(labels(p.vertices, 4) == std::vector<std::string>{"0000", "0011", "0101", "0110"});
    // Argument order is irrelevant.
    const auto q = predicted_common_neighbors_aq(t, u, S::hypercube(3), S::hypercube(2));
    CHECK(q.vertices == p.vertices);
    CHECK(common_neighbors(t, flip(u, 2), flip(u, 3)) == p.vertices);
  }

  TEST_CASE("classification matches brute force with size-4 conditions") {
    for (int n = 5; n <= 6; ++n) {
      const Topology t(Kind::AugmentedCube, n);
      for (std::uint32_t ub = 0; ub < t.vertex_count(); ++ub) {
        const Vertex u{ub};
        for (const auto& [a, b] : classification_cases(n)) {
          const auto p = predicted_common_neighbors_aq(t, u, a, b);
          const auto actual = common_neighbors(t, resolve(u, a), resolve(u, b));
          REQUIRE(p.vertices == actual);
          if (a.type == NeighborSpec::Type::Complement &&
              b.type == NeighborSpec::Type::Complement) {
            REQUIRE((actual.size() == 4) == (b.dim == a.dim + 2));
          }
        }
      }
    }
  }

  TEST_CASE("classification range errors name the rule") {
    const Topology t(Kind::AugmentedCube, 5);
    using S = NeighborSpec;
    try {
      predicted_common_neighbors_aq(t, Vertex{0}, S::self(), S::complement(1));
      FAIL("expected RangeError");
    } catch (const RangeError& e) {
      CHECK(e.source() == "complement-edge");
    }
    CHECK_THROWS_AS(predicted_common_neighbors_aq(t, Vertex{0}, S::hypercube(6), S::hypercube(2)),
                    RangeError);
    CHECK_THROWS_AS(
        predicted_common_neighbors_aq(Topology(Kind::Hypercube, 5), Vertex{0}, S::self(),
                                      S::hypercube(1)),
        RangeError);
  }

  TEST_CASE("forbidden patterns are absent from augmented cubes") {
    CHECK_FALSE(find_forbidden_pattern(Topology(Kind::AugmentedCube, 5), Pattern::T));
    CHECK_FALSE(find_forbidden_pattern(Topology(Kind::AugmentedCube, 6), Pattern::H));
  }

  TEST_CASE("pattern search on synthetic graphs") {
    for (Pattern p : {Pattern::T, Pattern::H}) {
      const auto g = pattern_graph(p);
      const auto e = find_forbidden_pattern(g, p);
      REQUIRE(e);
      CHECK(is_valid_embedding(g, *e));
      CHECK(e->image.size() == pattern_roles(p).size());
    }
    // T embeds in itself as the identity on roles.
    const auto g = pattern_graph(Pattern::T);
    PatternEmbedding identity{Pattern::T, {}};
    for (std::uint32_t i = 0; i < 11; ++i) identity.image.push_back(Vertex{i});
    CHECK(is_valid_embedding(g, identity));
    // Dropping any x_i edge destroys both patterns' witnesses in H's graph.
    ExplicitGraph h(10);
    for (auto [a, b] : pattern_edges(Pattern::H)) {
      if (a == 0 && b == 9) continue;
      h.add_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
    CHECK_FALSE(find_forbidden_pattern(h, Pattern::H));
    CHECK_FALSE(find_forbidden_pattern(h, Pattern::T));
  }

  TEST_CASE("patterns found in denser graphs") {
    // Q_n contains no triangles, so H (which has triangle u v x_i) never embeds;
    // FQ_3 = K_{4,4} is too small for T.
    CHECK_FALSE(find_forbidden_pattern(Topology(Kind::Hypercube, 6), Pattern::H));
    CHECK_FALSE(find_forbidden_pattern(Topology(Kind::FoldedHypercube, 3), Pattern::T));
  }

  TEST_CASE("star intersection bounds") {
    const Topology fq5(Kind::FoldedHypercube, 5);
    const std::vector<Vertex> seed = {Vertex{0}};
    const auto b = star_intersection_bound(fq5, seed, 3);
    CHECK(b.best == 2);
    REQUIRE(b.witness);
    CHECK(is_star_subgraph(fq5, *b.witness));
    CHECK(b.witness->leaf_count() == 3);

    const Topology aq6(Kind::AugmentedCube, 6);
    const std::vector<Vertex> edge = {v("000011"), v("001100")};
    const auto e = star_intersection_bound(aq6, edge, 6);
    CHECK(e.best == 7);
    CHECK(e.best_adjacent_center == 7);

    const auto profile = star_intersection_profile(aq6, edge, 11);
    CHECK(profile[6] == 7);
    CHECK(profile[10] == 7);
    CHECK(profile[11] <= 7);
  }

  TEST_CASE("connected vertex sets") {
    const Topology q3(Kind::Hypercube, 3);
    CHECK(connected_vertex_sets(q3, 1).size() == 8);
    CHECK(connected_vertex_sets(q3, 2).size() == 12);
    // Paths of length 2 in Q_3: each vertex is a middle vertex of C(3,2) paths.
    CHECK(connected_vertex_sets(q3, 3).size() == 24);
  }
}
