#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "starcut/analysis.hpp"
#include "starcut/cuts.hpp"
#include "starcut/errors.hpp"

using namespace starcut;

namespace {

Vertex v(std::string_view s) { return parse_vertex(s, static_cast<int>(s.size())); }

std::set<std::string> vertex_labels(const Star& s, int n) {
  std::set<std::string> out;
  for (Vertex x : s.vertices()) out.insert(format_vertex(x, n));
  return out;
}

bool covers_base_neighborhood(const Topology& t, const StarFamily& f) {
  const auto all = f.vertex_union();
  for (Vertex x : t.neighbors(Vertex{0})) {
    if (!std::binary_search(all.begin(), all.end(), x)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("cuts") {
  TEST_CASE("f and g") {
    CHECK(f_eval(7, 1) == doctest::Approx(7));
    CHECK(f_eval(7, 3) == doctest::Approx(16));
    CHECK(g_eval(7, 9) == doctest::Approx(25));
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 100; ++i) {
      const int n = 4 + static_cast<int>(rng() % 20);
      const int x = static_cast<int>(rng() % 60);
      REQUIRE(2 * f_eval(n, x) == doctest::Approx(oracle::f_twice(n, x)));
      REQUIRE(2 * g_eval(n, x) == doctest::Approx(oracle::g_twice(n, x)));
    }
  }

  TEST_CASE("closed-form kappa") {
    auto k = kappa_formula(Kind::FoldedHypercube, 9, 4);
    CHECK(k.value == 5);
    CHECK(k.applicable);
    CHECK(k.source == KappaSource::FqTheorem);
    k = kappa_formula(Kind::AugmentedCube, 13, 6);
    CHECK(k.value == 6);
    CHECK(k.applicable);
    k = kappa_formula(Kind::AugmentedCube, 13, 7);
    CHECK(k.value == 6);
    CHECK_FALSE(k.applicable);
    k = kappa_formula(Kind::AugmentedCube, 5, 2);
    CHECK(k.value == 3);
    CHECK(k.applicable);
    CHECK(k.source == KappaSource::AqSmallMCited);
    k = kappa_formula(Kind::FoldedHypercube, 6, 5);
    CHECK(k.value == 4);
    CHECK_FALSE(k.applicable);
    CHECK(kappa_formula(Kind::FoldedHypercube, 6, 4).applicable);
    CHECK(kappa_formula(Kind::Hypercube, 4, 3).value == 2);
    CHECK(kappa_formula(Kind::Hypercube, 4, 1).value == 3);
    CHECK(to_json(kappa_formula(Kind::Hypercube, 4, 3))["source"] == "q-cited");
    CHECK_THROWS_AS(kappa_formula(Kind::Hypercube, 4, 0), RangeError);
  }

  TEST_CASE("folded hypercube construction, n = 6, m = 5") {
    const auto f = build_fq_cut(6, 5);
    REQUIRE(f.members.size() == 4);
    CHECK(f.members[0].center == v("000011"));
    CHECK(vertex_labels(f.members[0], 6) ==
          std::set<std::string>{"000001", "000010", "000011", "000111", "001011", "010011"});
    CHECK(f.members.back().center == v("111110"));
    CHECK(f.collisions.empty());
    const Topology t(Kind::FoldedHypercube, 6);
    const auto verdict = verify_cut(t, f);
    CHECK(verdict.is_cut);
    CHECK(verdict.isolates(v("000000")));
    for (const auto& d : verdict.members) {
      CHECK(d.valid);
      CHECK(d.leaf_count == 5);
      CHECK(d.induced_exact);
    }
    // u^1 lies in S_1 and in the last star.
    REQUIRE(verdict.overlaps.size() == 1);
    CHECK(verdict.overlaps[0].vertex == v("000001"));
    CHECK(verdict.overlaps[0].members == std::vector<std::size_t>{0, 3});
  }

  TEST_CASE("folded hypercube construction over n = 3..12") {
    for (int n = 3; n <= 12; ++n) {
      const Topology t(Kind::FoldedHypercube, n);
      for (int m = 2; m <= n + 1; ++m) {
        const auto f = build_fq_cut(n, m);
        REQUIRE(f.members.size() == static_cast<std::size_t>(ceil_div(n + 1, 2)));
        REQUIRE(covers_base_neighborhood(t, f));
        const auto verdict = verify_cut(t, f);
        REQUIRE(verdict.is_cut);
        REQUIRE(verdict.isolates(Vertex{0}));
        for (const auto& s : f.members) REQUIRE(s.leaf_count() == m);
      }
    }
  }

  TEST_CASE("augmented cube construction, n = 6, m = 5") {
    const auto f = build_aq_cut(6, 5);
    REQUIRE(f.members.size() == 3);
    CHECK(f.members[0].center == v("000011"));
    CHECK(vertex_labels(f.members[0], 6) ==
          std::set<std::string>{"000001", "000010", "000011", "000100", "000111", "100011"});
    for (const auto& s : f.members) CHECK(vertex_labels(s, 6).size() == 6);
    const auto verdict = verify_cut(Topology(Kind::AugmentedCube, 6), f);
    CHECK(verdict.is_cut);
    CHECK(verdict.isolates(v("000000")));
    CHECK(verdict.members_valid);
  }

  TEST_CASE("augmented cube construction over n = 4..12") {
    for (int n = 4; n <= 12; ++n) {
      const Topology t(Kind::AugmentedCube, n);
      for (int m = 4; m <= 2 * n - 2; ++m) {
        const auto f = build_aq_cut(n, m);
        REQUIRE(f.members.size() == static_cast<std::size_t>(ceil_div(n - 1, 2)));
        REQUIRE(f.collisions.empty());
        REQUIRE(covers_base_neighborhood(t, f));
        const auto verdict = verify_cut(t, f);
        REQUIRE(verdict.members_valid);
        REQUIRE(verdict.is_cut);
        REQUIRE(verdict.isolates(Vertex{0}));
      }
    }
  }

  TEST_CASE("construction ranges") {
    CHECK_THROWS_AS(build_fq_cut(2, 2), RangeError);
    CHECK_THROWS_AS(build_fq_cut(6, 1), RangeError);
    CHECK_THROWS_AS(build_fq_cut(6, 8), RangeError);
    CHECK_THROWS_AS(build_aq_cut(6, 3), RangeError);
    CHECK_THROWS_AS(build_aq_cut(6, 11), RangeError);
    CHECK_THROWS_AS(build_aq_cut(3, 4), RangeError);
  }

  TEST_CASE("cut file round trip") {
    const auto f = build_aq_cut(7, 6);
    const auto j = family_to_json(f);
    CHECK(j["kind"] == "aq");
    CHECK(j["mode"] == "structure");
    CHECK(j["stars"].size() == 3);
    const auto back = family_from_json(j);
    CHECK(back.members == f.members);
    CHECK(back.m == 6);
    CHECK_THROWS_AS(family_from_json(nlohmann::json{{"kind", "aq"}}), ParseError);
    auto bad = j;
    bad["mode"] = "loose";
    CHECK_THROWS_AS(family_from_json(bad), ParseError);
  }
}
