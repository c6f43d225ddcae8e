#include "doctest.h"

#include <numeric>
#include <set>

#include "lring/parse.hpp"
#include "lring/polytope.hpp"
#include "lring/rng.hpp"

using namespace lring;

namespace {

using Pts = std::vector<LatticePoint>;

QPoly P(const std::string& s, const RingPtr<RationalField>& r) { return parse_polynomial<RationalField>(s, r); }

// Every lattice polygon with vertices in [0,side]^2, grown one point at a time.
std::set<Pts> polygons_in_box(int side) {
  std::set<Pts> seen;
  std::vector<Pts> todo;
  for (int x = 0; x <= side; ++x)
    for (int y = 0; y <= side; ++y) {
      Pts v{{x, y}};
      if (seen.insert(v).second) todo.push_back(v);
    }
  while (!todo.empty()) {
    Pts cur = std::move(todo.back());
    todo.pop_back();
    auto poly = LatticePolygon::hull(cur);
    for (int x = 0; x <= side; ++x)
      for (int y = 0; y <= side; ++y) {
        if (poly.contains({x, y})) continue;
        Pts next = poly.vertices();
        next.push_back({x, y});
        auto h = LatticePolygon::hull(next).vertices();
        if (seen.insert(h).second) todo.push_back(h);
      }
  }
  return seen;
}

}  // namespace

TEST_CASE("Newton polygons") {
  auto r = QRing::make(RationalField{}, {"z", "y"});
  auto f = P("z^10-2*z^8*y+z^6*y^2-y^9", r);
  auto np = newton_polygon(f);
  CHECK(np.vertices() == Pts{{0, 9}, {6, 2}, {10, 0}});
  CHECK(np.contains({8, 1}));
  CHECK(np.edges() == std::vector<LatticeEdge>{{{6, -7}, 1}, {{2, -1}, 2}, {{-10, 9}, 1}});

  auto s = QRing::make(RationalField{}, {"x", "y"});
  CHECK(newton_polygon(P("1+x+y", s)).vertices() == Pts{{0, 0}, {1, 0}, {0, 1}});
  CHECK(newton_polygon(P("x^3", s)).vertices() == Pts{{3, 0}});
  CHECK_THROWS_AS(newton_polygon(QPoly(s)), Error);
  auto t = QRing::make(RationalField{}, {"x", "y", "z"});
  CHECK_THROWS_AS(newton_polygon(P("x", t)), Error);
}

TEST_CASE("hull basics") {
  auto seg = LatticePolygon::hull({{2, 0}, {0, 0}, {1, 0}});
  CHECK(seg.vertices() == Pts{{0, 0}, {2, 0}});
  CHECK(seg.edges() == std::vector<LatticeEdge>{{{1, 0}, 2}, {{-1, 0}, 2}});
  CHECK(seg.lattice_point_count() == 3);
  auto sq = LatticePolygon::hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  CHECK(sq.vertices() == Pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(sq.lattice_point_count() == 4);
  CHECK(LatticePolygon::hull({{0, 0}, {4, 0}, {0, 4}}).lattice_point_count() == 15);
  CHECK(LatticePolygon::hull({{0, 0}, {4, 0}, {0, 4}}).contains({2, 2}));
  CHECK_FALSE(LatticePolygon::hull({{0, 0}, {4, 0}, {0, 4}}).contains({3, 2}));
}

TEST_CASE("hull idempotence on random supports") {
  SplitMix64 rng(42);
  auto r = QRing::make(RationalField{}, {"x", "y"});
  for (int trial = 0; trial < 200; ++trial) {
    Pts pts;
    int n = static_cast<int>(rng.uniform(1, 9));
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(0, 7), rng.uniform(0, 7)});
    auto h = LatticePolygon::hull(pts);
    CHECK(LatticePolygon::hull(h.vertices()) == h);
    for (const auto& q : pts) CHECK(h.contains(q));
    // Same thing through a polynomial whose support is the vertex set.
    std::string s;
    for (const auto& v : h.vertices()) s += (s.empty() ? "" : "+") + std::string("x^") + std::to_string(v.x) + "*y^" + std::to_string(v.y);
    CHECK(newton_polygon(P(s, r)) == h);
    LatticePoint sum{};
    for (const auto& e : h.edges()) {
      sum = sum + LatticePoint{e.dir.x * e.length, e.dir.y * e.length};
      CHECK(std::gcd(e.dir.x, e.dir.y) == 1);
    }
    CHECK(sum == LatticePoint{});
  }
}

TEST_CASE("integer irreducibility") {
  auto tri = LatticePolygon::hull({{10, 0}, {6, 2}, {0, 9}});
  auto fast = is_integer_irreducible(tri);
  CHECK(fast.irreducible);
  CHECK(fast.via_edge_test);
  CHECK(fast.edge == std::pair<std::int64_t, std::int64_t>{10, 9});
  auto slow = is_integer_irreducible(tri, false);
  CHECK(slow.irreducible);
  CHECK_FALSE(slow.via_edge_test);

  auto seg = is_integer_irreducible(LatticePolygon::hull({{0, 0}, {2, 0}}));
  REQUIRE_FALSE(seg.irreducible);
  CHECK(seg.certificate->first.vertices() == Pts{{0, 0}, {1, 0}});
  CHECK(seg.certificate->second.vertices() == Pts{{0, 0}, {1, 0}});

  auto sq = LatticePolygon::hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto s = is_integer_irreducible(sq);
  REQUIRE_FALSE(s.irreducible);
  CHECK(minkowski_sum(s.certificate->first, s.certificate->second).equal_up_to_translation(sq));
  CHECK(is_integer_irreducible(LatticePolygon::hull({{0, 0}, {1, 0}})).irreducible);
  CHECK(is_integer_irreducible(LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}})).irreducible);
  CHECK_FALSE(is_integer_irreducible(LatticePolygon::hull({{0, 0}, {2, 0}, {0, 2}})).irreducible);
  CHECK_THROWS_AS(is_integer_irreducible(LatticePolygon::hull({{1, 1}})), Error);
  // (0,4)-(6,0) has lattice length 2, so the edge test does not apply.
  CHECK_FALSE(coprime_edge_test(LatticePolygon::hull({{0, 4}, {6, 0}, {0, 0}})));
}

TEST_CASE("irreducibility criterion for polynomials") {
  auto r = QRing::make(RationalField{}, {"z", "y"});
  auto c = poly_irreducibility_criterion(P("z^10-2*z^8*y+z^6*y^2-y^9", r));
  CHECK(c.verdict == CriterionVerdict::Irreducible);
  auto s = QRing::make(RationalField{}, {"x", "y"});
  CHECK(poly_irreducibility_criterion(P("x*(y+1)", s)).verdict == CriterionVerdict::Inconclusive);
  CHECK(poly_irreducibility_criterion(P("(1+x)*(1+y)", s)).verdict == CriterionVerdict::Inconclusive);
  CHECK(poly_irreducibility_criterion(P("3", s)).verdict == CriterionVerdict::Inconclusive);
  CHECK(poly_irreducibility_criterion(P("x^2+y^3", s)).verdict == CriterionVerdict::Irreducible);
  CHECK(poly_irreducibility_criterion(P("x^2-y^2", s)).verdict == CriterionVerdict::Inconclusive);
  CHECK_THROWS_AS(poly_irreducibility_criterion(QPoly(s)), Error);
}

TEST_CASE("edge splitting agrees with brute force in a 4x4 box") {
  auto all = polygons_in_box(4);
  std::set<Pts> normalized;
  for (const auto& v : all) normalized.insert(LatticePolygon::hull(v).normalized().vertices());
  std::vector<LatticePolygon> polys;
  for (const auto& v : normalized) polys.push_back(LatticePolygon::hull(v));
  auto width = [](const LatticePolygon& p) {
    std::int64_t lo = 0, hi = 0, blo = 0, bhi = 0;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v.x);
      hi = std::max(hi, v.x);
      blo = std::min(blo, v.y);
      bhi = std::max(bhi, v.y);
    }
    return std::pair{hi - lo, bhi - blo};
  };
  // Sums of two polygons with more than one point each, normalized.
  std::set<Pts> sums;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_point()) continue;
    auto [wi, hi] = width(polys[i]);
    for (std::size_t j = i; j < polys.size(); ++j) {
      if (polys[j].is_point()) continue;
      auto [wj, hj] = width(polys[j]);
      if (wi + wj > 4 || hi + hj > 4) continue;
      sums.insert(minkowski_sum(polys[i], polys[j]).normalized().vertices());
    }
  }
  int reducible = 0, checked = 0;
  for (const auto& p : polys) {
    if (p.is_point()) continue;
    ++checked;
    auto r = is_integer_irreducible(p, false);
    bool brute = sums.count(p.vertices()) > 0;
    CAPTURE(p.str());
    CHECK(r.irreducible == !brute);
    CHECK(is_integer_irreducible(p).irreducible == r.irreducible);
    if (!r.irreducible) {
      ++reducible;
      CHECK(r.certificate->first.vertices().size() >= 2);
      CHECK(r.certificate->second.vertices().size() >= 2);
      CHECK(minkowski_sum(r.certificate->first, r.certificate->second).equal_up_to_translation(p));
    }
  }
  MESSAGE(checked << " polygons, " << reducible << " reducible");
  CHECK(checked > 1000);
}
