#include "starcut/cuts.hpp"

#include <algorithm>

#include "starcut/errors.hpp"

namespace starcut {

double f_eval(int n, double x) { return -x * x / 2.0 + (n - 0.5) * x + 1.0; }

double g_eval(int n, double x) {
  const double nn = n;
  return -x * x / 2.0 + (2.0 * nn - 1.5) * x + 2.0 - nn * nn;
}

std::string_view source_name(KappaSource s) {
  switch (s) {
    case KappaSource::FqTheorem:
      return "fq-theorem";
    case KappaSource::AqTheorem:
      return "aq-theorem";
    case KappaSource::AqSmallMCited:
      return "aq-small-m-cited";
    case KappaSource::QCited:
      return "q-cited";
    case KappaSource::K11Cited:
      return "k11-cited";
  }
  return "?";
}

KappaFormula kappa_formula(Kind kind, int n, int m) {
  if (m < 1) throw RangeError("kappa_formula", "m must be >= 1");
  if (n < 1) throw RangeError("kappa_formula", "n must be >= 1");
  KappaFormula k;
  k.kind = kind;
  k.n = n;
  k.m = m;
  switch (kind) {
    case Kind::FoldedHypercube:
      if (m == 1) {
        k.value = n;
        k.source = KappaSource::K11Cited;
        k.applicable = n >= 7;
        k.range_condition = "m=1, n>=7";
      } else {
        k.value = ceil_div(n + 1, 2);
        k.source = KappaSource::FqTheorem;
        k.applicable = (m <= n - 1 && n >= 7) || (n >= 5 && n <= 6 && m <= n - 2);
        k.range_condition = "2<=m<=n-1, n>=7; or 5<=n<=6, 2<=m<=n-2";
      }
      break;
    case Kind::AugmentedCube:
      if (m <= 3) {
        k.value = ceil_div(2L * n - 1, m + 1);
        k.source = KappaSource::AqSmallMCited;
        k.applicable = n >= 4;
        k.range_condition = "1<=m<=3, n>=4";
      } else {
        k.value = ceil_div(n - 1, 2);
        k.source = KappaSource::AqTheorem;
        k.applicable = 4L * m <= 3L * n - 15;
        k.range_condition = "4<=m<=(3n-15)/4";
      }
      break;
    case Kind::Hypercube:
      if (m == 1) {
        k.value = n - 1;
        k.source = KappaSource::K11Cited;
        k.applicable = n >= 4;
        k.range_condition = "m=1, n>=4";
      } else {
        k.value = ceil_div(n, 2);
        k.source = KappaSource::QCited;
        k.applicable = m <= n && n >= 4;
        k.range_condition = "2<=m<=n, n>=4";
      }
      break;
  }
  return k;
}

nlohmann::json to_json(const KappaFormula& k) {
  return {{"kind", kind_name(k.kind)},
          {"n", k.n},
          {"m", k.m},
          {"value", k.value},
          {"source", source_name(k.source)},
          {"applicable", k.applicable},
          {"range_condition", k.range_condition}};
}

std::string_view mode_name(CutMode m) {
  return m == CutMode::Structure ? "structure" : "substructure";
}

CutMode parse_mode(std::string_view s) {
  if (s == "structure") return CutMode::Structure;
  if (s == "substructure") return CutMode::Substructure;
  throw ParseError("unknown mode '" + std::string(s) + "' (expected structure or substructure)");
}

std::vector<Vertex> StarFamily::vertex_union() const {
  std::vector<Vertex> all;
  for (const auto& s : members) {
    auto vs = s.vertices();
    all.insert(all.end(), vs.begin(), vs.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

nlohmann::json family_to_json(const StarFamily& f) {
  nlohmann::json stars = nlohmann::json::array();
  for (const auto& s : f.members) stars.push_back(star_to_json(s, f.n));
  return {{"kind", kind_name(f.kind)},
          {"n", f.n},
          {"m", f.m},
          {"mode", mode_name(f.mode)},
          {"stars", stars}};
}

StarFamily family_from_json(const nlohmann::json& j) {
  try {
    StarFamily f;
    f.kind = parse_kind(j.at("kind").get<std::string>());
    f.n = j.at("n").get<int>();
    f.m = j.at("m").get<int>();
    f.mode = parse_mode(j.at("mode").get<std::string>());
    if (f.n < 1 || f.n > kMaxDimension) throw ParseError("cut file: n out of range");
    for (const auto& s : j.at("stars")) f.members.push_back(star_from_json(s, f.n));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cut file: ") + e.what());
  }
}

namespace {

/// Records (and keeps) any leaf that repeats or equals the center.
Star assemble(Vertex center, std::vector<Vertex> leaves, const std::string& label, int n,
              std::vector<std::string>& collisions) {
  Star s(center, std::move(leaves));
  for (std::size_t i = 0; i < s.leaves.size(); ++i) {
    if (s.leaves[i] == center) {
      collisions.push_back(label + ": leaf equals center " + format_vertex(center, n));
    }
    if (i > 0 && s.leaves[i] == s.leaves[i - 1]) {
      collisions.push_back(label + ": duplicate leaf " + format_vertex(s.leaves[i], n));
    }
  }
  return s;
}

}  // namespace

StarFamily build_fq_cut(int n, int m) {
  if (n < 3 || n > kMaxDimension) throw RangeError("build_fq_cut", "needs n >= 3");
  if (m < 2 || m > n + 1) throw RangeError("build_fq_cut", "needs 2 <= m <= n+1");

  StarFamily f;
  f.kind = Kind::FoldedHypercube;
  f.n = n;
  f.m = m;
  const Vertex u{0};
  const Vertex ubar{(std::uint32_t{1} << n) - 1};
  // Dimensions wrap into 1..n, residue 0 standing for n.
  const auto wrap = [n](int d) { return (d - 1) % n + 1; };

  for (int i = 1; i <= n / 2; ++i) {
    const int a = 2 * i - 1, b = 2 * i;
    const Vertex center = flip(u, a, b);
    std::vector<Vertex> leaves = {flip(u, a), flip(u, b)};
    const int extra = m <= n ? m - 2 : n - 2;
    for (int j = 1; j <= extra; ++j) leaves.push_back(flip(center, wrap(2 * i + j)));
    if (m == n + 1) leaves.push_back(Vertex{center.bits ^ ubar.bits});
    f.members.push_back(assemble(center, std::move(leaves), "S_" + std::to_string(i), n,
                                 f.collisions));
  }

  const std::string last = "S_" + std::to_string(ceil_div(n + 1, 2));
  if (n % 2 == 1) {
    const Vertex center = flip(ubar, n);
    std::vector<Vertex> leaves = {flip(u, n), ubar};
    for (int j = 1; j <= m - 2; ++j) leaves.push_back(flip(ubar, n, j));
    f.members.push_back(assemble(center, std::move(leaves), last, n, f.collisions));
  } else {
    const Vertex center = flip(ubar, 1);
    std::vector<Vertex> leaves = {ubar, flip(u, 1)};
    for (int j = 2; j <= m - 1; ++j) leaves.push_back(flip(ubar, 1, j));
    f.members.push_back(assemble(center, std::move(leaves), last, n, f.collisions));
  }
  return f;
}

StarFamily build_aq_cut(int n, int m) {
  if (n < 4 || n > kMaxDimension) throw RangeError("build_aq_cut", "needs n >= 4");
  if (m < 4 || m > 2 * n - 2) throw RangeError("build_aq_cut", "needs 4 <= m <= 2n-2");

  StarFamily f;
  f.kind = Kind::AugmentedCube;
  f.n = n;
  f.m = m;
  const Vertex u{0};
  const bool m_odd = m % 2 == 1;
  const int count = static_cast<int>(ceil_div(n - 1, 2));

  const auto hyp = [](Vertex x, int i) { return flip(x, i); };
  const auto cmp = [](Vertex x, int i) { return flip_low(x, i); };
  // (c)^i and ~(c)^i for i in [lo, hi]
  const auto add_pairs = [&](std::vector<Vertex>& leaves, Vertex c, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) {
      leaves.push_back(hyp(c, i));
      leaves.push_back(cmp(c, i));
    }
  };

  {
    const Vertex c = cmp(u, 2);
    std::vector<Vertex> leaves = {hyp(u, 1), hyp(u, 2), hyp(u, 3), cmp(u, 3)};
    if (m_odd) {
      leaves.push_back(hyp(c, n));
      add_pairs(leaves, c, 4, (m + 1) / 2);
    } else {
      add_pairs(leaves, c, 4, (m + 2) / 2);
    }
    f.members.push_back(assemble(c, std::move(leaves), "S_1", n, f.collisions));
  }

  for (int k = 2; k <= count - 1; ++k) {
    const Vertex c = cmp(u, 2 * k);
    std::vector<Vertex> leaves = {hyp(u, 2 * k), hyp(u, 2 * k + 1), cmp(u, 2 * k + 1),
                                  hyp(c, 1)};
    if (m_odd) {
      leaves.push_back(hyp(c, 2 * k));
      if (m <= 2 * n - 4 * k + 3) {
        add_pairs(leaves, c, 2 * k + 2, 2 * k + 2 + (m - 7) / 2);
      } else {
        add_pairs(leaves, c, 2 * k + 2, n);
        add_pairs(leaves, c, 2, 2 * k - n + (m - 1) / 2);
      }
    } else {
      if (m <= 2 * n - 4 * k + 2) {
        add_pairs(leaves, c, 2 * k + 2, 2 * k + 2 + (m - 6) / 2);
      } else {
        leaves.push_back(hyp(c, 2 * k - 1));
        leaves.push_back(hyp(c, 2 * k));
        add_pairs(leaves, c, 2 * k + 2, n);
        add_pairs(leaves, c, 2, 2 * k - n - 1 + m / 2);
      }
    }
    f.members.push_back(assemble(c, std::move(leaves), "S_" + std::to_string(k), n,
                                 f.collisions));
  }

  if (count >= 2) {
    const std::string label = "S_" + std::to_string(count);
    if (n % 2 == 1) {
      const Vertex c = cmp(u, n - 1);
      std::vector<Vertex> leaves = {hyp(u, n - 1), hyp(u, n), cmp(u, n), hyp(c, 1)};
      if (m_odd) {
        leaves.push_back(hyp(c, n - 1));
        add_pairs(leaves, c, 2, (m - 3) / 2);
      } else if (m >= 6) {
        leaves.push_back(hyp(c, n - 2));
        leaves.push_back(hyp(c, n - 1));
        add_pairs(leaves, c, 2, m / 2 - 2);
      }
      f.members.push_back(assemble(c, std::move(leaves), label, n, f.collisions));
    } else {
      const Vertex c = cmp(u, n);
      std::vector<Vertex> leaves = {hyp(u, n), hyp(c, 1), hyp(c, n), hyp(c, n - 1)};
      if (m_odd) {
        leaves.push_back(hyp(c, n - 2));
        add_pairs(leaves, c, 2, (m - 3) / 2);
      } else {
        add_pairs(leaves, c, 2, (m - 2) / 2);
      }
      f.members.push_back(assemble(c, std::move(leaves), label, n, f.collisions));
    }
  }
  return f;
}

}  // namespace starcut
