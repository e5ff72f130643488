#include <doctest.h>

#include <cstring>

#include "oracles.hpp"
#include "starcut/errors.hpp"
#include "starcut/topology.hpp"

using namespace starcut;

namespace {

std::vector<std::string> labels(const std::vector<Vertex>& vs, int n) {
  return format_vertices(vs, n);
}

Vertex v(const char* s) { return parse_vertex(s, static_cast<int>(std::strlen(s))); }

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("neighbor sets") {
    CHECK(labels(Topology(Kind::FoldedHypercube, 3).neighbors(v("000")), 3) ==
          std::vector<std::string>{"001", "010", "100", "111"});
    CHECK(labels(Topology(Kind::Hypercube, 3).neighbors(v("000")), 3) ==
          std::vector<std::string>{"001", "010", "100"});
    CHECK(labels(Topology(Kind::AugmentedCube, 4).neighbors(v("0000")), 4) ==
          std::vector<std::string>{"0001", "0010", "0011", "0100", "0111", "1000", "1111"});
  }

  TEST_CASE("degrees") {
    CHECK(Topology(Kind::Hypercube, 5).degree() == 5);
    CHECK(Topology(Kind::FoldedHypercube, 5).degree() == 6);
    CHECK(Topology(Kind::AugmentedCube, 5).degree() == 9);
    CHECK(Topology(Kind::AugmentedCube, 1).degree() == 1);
    CHECK(Topology(Kind::AugmentedCube, 2).degree() == 3);  // K_4
  }

  TEST_CASE("adjacency matches the independent definitions") {
    for (int n = 1; n <= 8; ++n) {
      const Topology q(Kind::Hypercube, n), a(Kind::AugmentedCube, n);
      for (std::uint32_t x = 0; x < q.vertex_count(); ++x) {
        for (std::uint32_t y = 0; y < q.vertex_count(); ++y) {
          REQUIRE(q.adjacent(Vertex{x}, Vertex{y}) == oracle::q_adjacent(n, x, y));
          REQUIRE(a.adjacent(Vertex{x}, Vertex{y}) == oracle::aq_adjacent(n, x, y));
        }
      }
      if (n < 2) continue;
      const Topology f(Kind::FoldedHypercube, n);
      for (std::uint32_t x = 0; x < f.vertex_count(); ++x) {
        for (std::uint32_t y = 0; y < f.vertex_count(); ++y) {
          REQUIRE(f.adjacent(Vertex{x}, Vertex{y}) == oracle::fq_adjacent(n, x, y));
        }
      }
    }
  }

  TEST_CASE("common neighbors") {
    const Topology fq4(Kind::FoldedHypercube, 4);
    CHECK(labels(common_neighbors(fq4, v("0000"), v("0011")), 4) ==
          std::vector<std::string>{"0001", "0010"});
    const Topology aq4(Kind::AugmentedCube, 4);
    CHECK(labels(common_neighbors(aq4, v("0000"), v("0100")), 4) ==
          std::vector<std::string>{"0011", "0111"});
    CHECK(common_neighbors(Topology(Kind::Hypercube, 3), v("000"), v("111")).empty());
    CHECK_THROWS_AS(common_neighbors(fq4, v("0101"), v("0101")), InvalidPair);
  }

  TEST_CASE("common neighbors agree with scanning every vertex") {
    for (int n : {3, 4, 5}) {
      const Topology t(Kind::AugmentedCube, n);
      const oracle::Adjacency adj = [n](std::uint32_t a, std::uint32_t b) {
        return oracle::aq_adjacent(n, a, b);
      };
      for (std::uint32_t a = 0; a < t.vertex_count(); ++a) {
        for (std::uint32_t b = a + 1; b < t.vertex_count(); ++b) {
          std::vector<std::uint32_t> got;
          for (Vertex c : common_neighbors(t, Vertex{a}, Vertex{b})) got.push_back(c.bits);
          REQUIRE(got == oracle::common_neighbors(t.vertex_count(), adj, a, b));
        }
      }
    }
  }

  TEST_CASE("edge classification") {
    const Topology t(Kind::AugmentedCube, 4);
    CHECK(classify_edge_aq(t, v("0000"), v("1000")) ==
          EdgeKindAQ{EdgeKindAQ::Type::Hypercube, 4});
    CHECK(classify_edge_aq(t, v("0000"), v("0111")) ==
          EdgeKindAQ{EdgeKindAQ::Type::Complement, 3});
    CHECK(classify_edge_aq(t, v("0000"), v("0101")).type == EdgeKindAQ::Type::NotAnEdge);
    CHECK(classify_edge_aq(t, v("0000"), v("0001")) ==
          EdgeKindAQ{EdgeKindAQ::Type::Hypercube, 1});
    for (std::uint32_t a = 0; a < 16; ++a) {
      for (std::uint32_t b = 0; b < 16; ++b) {
        const auto ab = classify_edge_aq(t, Vertex{a}, Vertex{b});
        REQUIRE(ab == classify_edge_aq(t, Vertex{b}, Vertex{a}));
        REQUIRE((ab.type != EdgeKindAQ::Type::NotAnEdge) == t.adjacent(Vertex{a}, Vertex{b}));
        REQUIRE(!(ab.type == EdgeKindAQ::Type::Complement && ab.dim == 1));
      }
    }
  }

  TEST_CASE("vertex labels") {
    CHECK(parse_vertex("000111", 6).bits == 0b111u);
    CHECK(format_vertex(parse_vertex("1010", 4), 4) == "1010");
    CHECK(parse_vertex("1000", 4) == flip(Vertex{0}, 4));
    CHECK(flip_low(Vertex{0}, 3) == parse_vertex("0111", 4));
    CHECK_THROWS_AS(parse_vertex("012", 3), ParseError);
    CHECK_THROWS_AS(parse_vertex("01", 3), ParseError);
    CHECK_THROWS_AS(parse_vertex("", 3), ParseError);
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(Topology(Kind::Hypercube, 0), RangeError);
    CHECK_THROWS_AS(Topology(Kind::FoldedHypercube, 1), RangeError);
    CHECK_THROWS_AS(Topology(Kind::Hypercube, kMaxDimension + 1), RangeError);
    const Topology t(Kind::Hypercube, 3);
    CHECK_THROWS_AS(t.neighbors(Vertex{8}), InvalidVertex);
    CHECK_THROWS_AS(parse_kind("cube"), ParseError);
    CHECK(parse_kind("aq") == Kind::AugmentedCube);
    CHECK(t.name() == "Q_3");
  }
}
