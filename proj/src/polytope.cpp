#include "lring/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace lring {

namespace {

std::int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

LatticePolygon LatticePolygon::hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolygon p;
  if (pts.size() <= 1) {
    p.vertices_ = std::move(pts);
    return p;
  }
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& q : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], q) <= 0) --k;
    h[k++] = q;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  p.vertices_ = std::move(h);
  return p;
}

std::vector<LatticeEdge> LatticePolygon::edges() const {
  std::vector<LatticeEdge> out;
  auto n = vertices_.size();
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = vertices_[(i + 1) % n] - vertices_[i];
    auto g = std::gcd(std::llabs(d.x), std::llabs(d.y));
    out.push_back({{d.x / g, d.y / g}, g});
  }
  return out;
}

bool LatticePolygon::contains(LatticePoint q) const {
  auto n = vertices_.size();
  if (n == 0) return false;
  if (n == 1) return q == vertices_[0];
  if (n == 2) {
    auto a = vertices_[0], b = vertices_[1];
    return cross(a, b, q) == 0 && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % n], q) < 0) return false;
  }
  return true;
}

std::int64_t LatticePolygon::lattice_point_count() const {
  if (vertices_.empty()) return 0;
  std::int64_t boundary = 0;
  for (const auto& e : edges()) boundary += e.length;
  if (vertices_.size() <= 2) return boundary / 2 + 1;
  std::int64_t twice_area = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) twice_area += cross({0, 0}, vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  // Pick: A = I + B/2 - 1.
  return (twice_area - boundary + 2) / 2 + boundary;
}

LatticePolygon LatticePolygon::translated(LatticePoint by) const {
  LatticePolygon p = *this;
  for (auto& v : p.vertices_) v = v + by;
  return p;
}

LatticePolygon LatticePolygon::normalized() const {
  if (vertices_.empty()) return *this;
  return translated(LatticePoint{} - vertices_[0]);
}

LatticePolygon LatticePolygon::from_edges(const std::vector<LatticeEdge>& edges) {
  std::vector<LatticePoint> pts{{0, 0}};
  LatticePoint at{};
  for (const auto& e : edges) {
    if (e.length == 0) continue;
    at = at + LatticePoint{e.dir.x * e.length, e.dir.y * e.length};
    pts.push_back(at);
  }
  return hull(std::move(pts));
}

std::string LatticePolygon::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(vertices_[i].x) + "," + std::to_string(vertices_[i].y) + ")";
  }
  return s + "]";
}

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
  std::vector<LatticePoint> pts;
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) pts.push_back(u + v);
  return LatticePolygon::hull(std::move(pts));
}

std::optional<EdgeSplitting> find_edge_splitting(const LatticePolygon& p) {
  auto edges = p.edges();
  auto m = edges.size();
  if (m == 0) return std::nullopt;
  // Largest |x| and |y| the edges from i on can still contribute.
  std::vector<std::int64_t> reach_x(m + 1, 0), reach_y(m + 1, 0);
  for (std::size_t i = m; i-- > 0;) {
    reach_x[i] = reach_x[i + 1] + edges[i].length * std::llabs(edges[i].dir.x);
    reach_y[i] = reach_y[i + 1] + edges[i].length * std::llabs(edges[i].dir.y);
  }
  std::vector<std::int64_t> k(m, 0);
  std::function<bool(std::size_t, std::int64_t, std::int64_t, bool, bool)> go =
      [&](std::size_t i, std::int64_t sx, std::int64_t sy, bool any, bool all) -> bool {
    if (std::llabs(sx) > reach_x[i] || std::llabs(sy) > reach_y[i]) return false;
    if (i == m) return sx == 0 && sy == 0 && any && !all;
    for (std::int64_t c = 0; c <= edges[i].length; ++c) {
      k[i] = c;
      if (go(i + 1, sx + c * edges[i].dir.x, sy + c * edges[i].dir.y, any || c > 0, all && c == edges[i].length)) return true;
    }
    k[i] = 0;
    return false;
  };
  if (!go(0, 0, 0, false, true)) return std::nullopt;
  std::vector<LatticeEdge> first, second;
  for (std::size_t i = 0; i < m; ++i) {
    first.push_back({edges[i].dir, k[i]});
    second.push_back({edges[i].dir, edges[i].length - k[i]});
  }
  return EdgeSplitting{k, LatticePolygon::from_edges(first), LatticePolygon::from_edges(second)};
}

std::optional<std::pair<std::int64_t, std::int64_t>> coprime_edge_test(const LatticePolygon& p) {
  const auto& v = p.vertices();
  auto n = v.size();
  if (n < 2) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = v[i], b = v[(i + 1) % n];
    if (a.x != 0) std::swap(a, b);
    if (a.x != 0 || a.y <= 0 || b.y != 0 || b.x <= 0) continue;
    auto m = a.y, nn = b.x;
    if (std::gcd(m, nn) != 1) continue;
    bool inside = std::all_of(v.begin(), v.end(),
                              [&](LatticePoint q) { return q.x >= 0 && q.y >= 0 && m * q.x + nn * q.y <= m * nn; });
    if (inside) return std::pair{nn, m};
  }
  return std::nullopt;
}

IrreducibilityResult is_integer_irreducible(const LatticePolygon& p, bool use_edge_test) {
  if (p.vertices().size() < 2) throw Error(ErrorKind::InvalidArgument, "integer irreducibility needs at least two points");
  IrreducibilityResult r;
  if (use_edge_test) {
    if (auto e = coprime_edge_test(p)) {
      r.irreducible = true;
      r.via_edge_test = true;
      r.edge = e;
      return r;
    }
  }
  r.certificate = find_edge_splitting(p);
  r.irreducible = !r.certificate;
  return r;
}

}  // namespace lring
