#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lring/error.hpp"
#include "lring/polynomial.hpp"

namespace lring {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const LatticePoint&) const = default;
  LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
};

struct LatticeEdge {
  LatticePoint dir;  // primitive
  std::int64_t length = 0;
  bool operator==(const LatticeEdge&) const = default;
};

/// Convex lattice polygon, possibly a segment or a point. Vertices run
/// counterclockwise from the lexicographically smallest one and no three
/// consecutive vertices are collinear.
class LatticePolygon {
 public:
  LatticePolygon() = default;

  /// Convex hull by monotone chain.
  static LatticePolygon hull(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  /// One edge per side; a segment has two opposite edges.
  std::vector<LatticeEdge> edges() const;

  bool is_point() const { return vertices_.size() == 1; }
  bool empty() const { return vertices_.empty(); }
  bool contains(LatticePoint p) const;
  std::int64_t lattice_point_count() const;

  LatticePolygon translated(LatticePoint by) const;
  /// Translate so the first vertex sits at the origin.
  LatticePolygon normalized() const;
  bool equal_up_to_translation(const LatticePolygon& o) const { return normalized() == o.normalized(); }

  /// Rebuild from edges walked in order from the origin. Zero-length edges are skipped.
  static LatticePolygon from_edges(const std::vector<LatticeEdge>& edges);

  std::string str() const;
  bool operator==(const LatticePolygon&) const = default;

 private:
  std::vector<LatticePoint> vertices_;
};

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);

/// Splitting of the edge sequence: k[i] lattice steps of edge i go to the
/// first summand and the rest to the second.
struct EdgeSplitting {
  std::vector<std::int64_t> k;
  LatticePolygon first;
  LatticePolygon second;
};

/// Search for 0 <= k_i <= l_i with sum k_i v_i = 0, k neither zero nor l.
/// Tuples are visited in lexicographic order; the first one found is returned.
std::optional<EdgeSplitting> find_edge_splitting(const LatticePolygon& p);

/// The edge test: an edge from (0,m) to (n,0) with gcd(m,n) = 1 and the
/// polygon inside the triangle (0,0), (n,0), (0,m). Returns the (n, m) used.
std::optional<std::pair<std::int64_t, std::int64_t>> coprime_edge_test(const LatticePolygon& p);

struct IrreducibilityResult {
  bool irreducible = false;
  bool via_edge_test = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> edge;  // (n, m) when via_edge_test
  std::optional<EdgeSplitting> certificate;                   // when reducible
};

/// Needs at least two points. The edge test is tried first; `use_edge_test`
/// off forces the splitting search.
IrreducibilityResult is_integer_irreducible(const LatticePolygon& p, bool use_edge_test = true);

/// Coordinates (exponent of variable 0, exponent of variable 1).
template <class F>
LatticePolygon newton_polygon(const Polynomial<F>& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polygon of zero");
  if (f.ring()->nvars() != 2) throw Error(ErrorKind::InvalidArgument, "Newton polygon needs two variables");
  std::vector<LatticePoint> pts;
  pts.reserve(f.size());
  for (const auto& t : f.terms()) pts.push_back({t.mono[0], t.mono[1]});
  return LatticePolygon::hull(std::move(pts));
}

enum class CriterionVerdict { Irreducible, Inconclusive };

struct CriterionResult {
  CriterionVerdict verdict = CriterionVerdict::Inconclusive;
  LatticePolygon polygon;
  std::optional<IrreducibilityResult> polygon_result;
  std::string reason;
};

/// Not divisible by either variable and integer-irreducible Newton polygon
/// gives an irreducible polynomial. Anything else is inconclusive.
template <class F>
CriterionResult poly_irreducibility_criterion(const Polynomial<F>& f) {
  CriterionResult out;
  out.polygon = newton_polygon(f);
  for (std::size_t v = 0; v < 2; ++v) {
    bool divisible = true;
    for (const auto& t : f.terms()) divisible = divisible && t.mono[v] > 0;
    if (divisible) {
      out.reason = "divisible by " + f.ring()->variables()[v];
      return out;
    }
  }
  if (out.polygon.is_point()) {
    out.reason = "constant polynomial";
    return out;
  }
  out.polygon_result = is_integer_irreducible(out.polygon);
  if (out.polygon_result->irreducible) {
    out.verdict = CriterionVerdict::Irreducible;
    out.reason = "Newton polygon is integer irreducible";
  } else {
    out.reason = "Newton polygon splits as " + out.polygon_result->certificate->first.str() + " + " +
                 out.polygon_result->certificate->second.str();
  }
  return out;
}

}  // namespace lring
