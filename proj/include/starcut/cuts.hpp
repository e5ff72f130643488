#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "starcut/starform.hpp"
#include "starcut/topology.hpp"

namespace starcut {

/// f(x) = -x^2/2 + (n - 1/2)x + 1
double f_eval(int n, double x);
/// g(x) = -x^2/2 + (2n - 3/2)x + 2 - n^2
double g_eval(int n, double x);

enum class KappaSource { FqTheorem, AqTheorem, AqSmallMCited, QCited, K11Cited };

std::string_view source_name(KappaSource s);

/// Closed-form value of κ(G; K_{1,m}) with the range it is known on.
/// Outside the range `value` is the formula extrapolated and `applicable`
/// is false.
struct KappaFormula {
  Kind kind = Kind::Hypercube;
  int n = 0;
  int m = 0;
  long value = 0;
  KappaSource source = KappaSource::QCited;
  bool applicable = false;
  std::string range_condition;
};

KappaFormula kappa_formula(Kind kind, int n, int m);
nlohmann::json to_json(const KappaFormula& k);

enum class CutMode { Structure, Substructure };

std::string_view mode_name(CutMode m);
CutMode parse_mode(std::string_view s);

struct StarFamily {
  Kind kind = Kind::Hypercube;
  int n = 0;
  int m = 0;
  CutMode mode = CutMode::Structure;
  std::vector<Star> members;
  /// Construction-time notes, e.g. a wrapped index that produced a vertex
  /// already in the same star. Not part of the serialized cut file.
  std::vector<std::string> collisions;

  std::vector<Vertex> vertex_union() const;
};

/// Cut-file JSON: {"kind","n","m","mode","stars":[...]}.
nlohmann::json family_to_json(const StarFamily& f);
/// Throws ParseError on schema violations.
StarFamily family_from_json(const nlohmann::json& j);

/// The ⌈(n+1)/2⌉ stars around 0...0 in FQ_n. Requires n >= 3, 2 <= m <= n+1.
StarFamily build_fq_cut(int n, int m);

/// The ⌈(n-1)/2⌉ stars around 0...0 in AQ_n. Requires n >= 4, 4 <= m <= 2n-2.
StarFamily build_aq_cut(int n, int m);

/// Ceiling division for non-negative operands.
constexpr long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace starcut
