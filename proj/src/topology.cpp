#include "starcut/topology.hpp"

#include <algorithm>
#include <bit>

#include "starcut/errors.hpp"

namespace starcut {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Hypercube:
      return "q";
    case Kind::FoldedHypercube:
      return "fq";
    case Kind::AugmentedCube:
      return "aq";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  if (name == "q") return Kind::Hypercube;
  if (name == "fq") return Kind::FoldedHypercube;
  if (name == "aq") return Kind::AugmentedCube;
  throw ParseError("unknown topology kind '" + std::string(name) + "' (expected q, fq or aq)");
}

Topology::Topology(Kind kind, int n) : kind_(kind), n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw RangeError("topology", "dimension " + std::to_string(n) + " outside 1.." +
                                     std::to_string(kMaxDimension));
  }
  if (kind == Kind::FoldedHypercube && n < 2) {
    // FQ_1 would double the single hypercube edge.
    throw RangeError("topology", "folded hypercube needs n >= 2");
  }
  for (int i = 1; i <= n; ++i) generators_.push_back(std::uint32_t{1} << (i - 1));
  switch (kind) {
    case Kind::Hypercube:
      break;
    case Kind::FoldedHypercube:
      generators_.push_back(vertex_count() - 1);
      break;
    case Kind::AugmentedCube:
      for (int i = 2; i <= n; ++i) generators_.push_back((std::uint32_t{1} << i) - 1);
      break;
  }
  std::sort(generators_.begin(), generators_.end());
}

void Topology::require(Vertex v) const {
  if (!contains(v)) {
    throw InvalidVertex("vertex label " + std::to_string(v.bits) + " out of range for " + name());
  }
}

bool Topology::adjacent(Vertex a, Vertex b) const {
  require(a);
  require(b);
  return std::binary_search(generators_.begin(), generators_.end(), a.bits ^ b.bits);
}

std::vector<Vertex> Topology::neighbors(Vertex v) const {
  require(v);
  std::vector<Vertex> out;
  out.reserve(generators_.size());
  for (auto g : generators_) out.push_back(Vertex{v.bits ^ g});
  std::sort(out.begin(), out.end());
  return out;
}

std::string Topology::name() const {
  std::string s;
  switch (kind_) {
    case Kind::Hypercube:
      s = "Q_";
      break;
    case Kind::FoldedHypercube:
      s = "FQ_";
      break;
    case Kind::AugmentedCube:
      s = "AQ_";
      break;
  }
  return s + std::to_string(n_);
}

std::vector<Vertex> common_neighbors(const Topology& t, Vertex u, Vertex v) {
  t.require(u);
  t.require(v);
  if (u == v) throw InvalidPair("common_neighbors needs two distinct vertices");
  auto nu = t.neighbors(u);
  auto nv = t.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

EdgeKindAQ classify_edge_aq(const Topology& t, Vertex u, Vertex v) {
  if (t.kind() != Kind::AugmentedCube) {
    throw RangeError("classify_edge_aq", "topology " + t.name() + " is not an augmented cube");
  }
  t.require(u);
  t.require(v);
  const std::uint32_t d = u.bits ^ v.bits;
  if (d != 0 && std::has_single_bit(d)) {
    return {EdgeKindAQ::Type::Hypercube, std::countr_zero(d) + 1};
  }
  // 2^i - 1 with i >= 2
  if (d >= 3 && std::has_single_bit(d + 1)) {
    return {EdgeKindAQ::Type::Complement, std::countr_zero(d + 1)};
  }
  return {};
}

Vertex parse_vertex(std::string_view s, int n) {
  if (n < 1 || n > kMaxDimension) throw ParseError("dimension out of range");
  if (static_cast<int>(s.size()) != n) {
    throw ParseError("vertex '" + std::string(s) + "' must have exactly " + std::to_string(n) +
                     " binary digits");
  }
  std::uint32_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw ParseError("vertex '" + std::string(s) + "' contains a non-binary character");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Vertex{bits};
}

std::string format_vertex(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v.bits >> i) & 1U) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

std::string format_vertex(Vertex v, const Topology& t) { return format_vertex(v, t.dimension()); }

std::vector<std::string> format_vertices(const std::vector<Vertex>& vs, int n) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (auto v : vs) out.push_back(format_vertex(v, n));
  return out;
}

}  // namespace starcut
