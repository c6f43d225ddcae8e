#include "doctest.h"

#include "lring/artinian.hpp"
#include "lring/ideal.hpp"
#include "lring/parse.hpp"
#include "lring/rng.hpp"

using namespace lring;

namespace {

using QIdeal = Ideal<RationalField>;

RingPtr<RationalField> xyz() { return QRing::make(RationalField{}, {"x", "y", "z"}); }
RingPtr<RationalField> xy() { return QRing::make(RationalField{}, {"x", "y"}); }

QIdeal ideal(const RingPtr<RationalField>& r, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (auto* s : gens) g.push_back(parse_polynomial<RationalField>(s, r));
  return QIdeal(r, g);
}

QPoly P(const char* s, const RingPtr<RationalField>& r) { return parse_polynomial<RationalField>(s, r); }

// All monomials with exponent i below box[i].
std::vector<Monomial> box_monomials(const std::vector<int>& box) {
  std::vector<Monomial> out;
  Monomial m(box.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == box.size()) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e < box[i]; ++e) {
      m.set(i, e);
      rec(i + 1);
    }
    m.set(i, 0);
  };
  rec(0);
  return out;
}

// Random Artinian monomial ideal: pure powers plus a few mixed monomials.
std::vector<Monomial> random_artinian(SplitMix64& rng, std::size_t n, std::vector<int>& box) {
  std::vector<Monomial> g;
  box.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int e = static_cast<int>(rng.uniform(1, 4));
    box[i] = e;
    g.push_back(Monomial::variable(n, i, e));
  }
  int extra = static_cast<int>(rng.uniform(0, 3));
  for (int k = 0; k < extra; ++k) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<int>(rng.uniform(0, box[i])));
    if (!m.is_one()) g.push_back(m);
  }
  return g;
}

QIdeal from_monomials(const RingPtr<RationalField>& r, const std::vector<Monomial>& ms) {
  std::vector<QPoly> g;
  for (const auto& m : ms) g.push_back(QPoly::monomial(r, m));
  return QIdeal(r, g);
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens) {
    if (g.divides(m)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("sum, product, power") {
  auto r = xy();
  auto s = sum(ideal(r, {"x"}), ideal(r, {"y"}));
  CHECK(s.generators() == std::vector<QPoly>{P("x", r), P("y", r)});
  auto m = ideal(r, {"x", "y"});
  auto sq = product(m, m);
  CHECK(equals(sq, ideal(r, {"x^2", "x*y", "y^2"})));
  auto r3 = xyz();
  auto p6 = power(QIdeal::maximal(r3), 6);
  CHECK(p6.generators().size() == 28);
  for (const auto& g : p6.generators()) {
    CHECK(g.size() == 1);
    CHECK(g.total_degree() == 6);
  }
  CHECK(power(m, 0).is_unit());
  auto other = QRing::make(RationalField{}, {"a", "b"});
  CHECK_THROWS_AS(sum(m, QIdeal::maximal(other)), Error);
}

TEST_CASE("intersection") {
  auto r = xy();
  CHECK(equals(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  CHECK(equals(intersect(ideal(r, {"x^2", "y"}), ideal(r, {"x", "y^2"})), ideal(r, {"x^2", "x*y", "y^2"})));
  auto r3 = xyz();
  auto i = ideal(r3, {"x^2-y^5", "x*y^2+y*z^3-z^5"});
  CHECK(equals(intersect(i, i), i));
}

TEST_CASE("quotient") {
  auto r = xy();
  CHECK(equals(quotient(ideal(r, {"x*y"}), ideal(r, {"x"})), ideal(r, {"y"})));
  auto q = quotient(ideal(r, {"x^2", "y"}), ideal(r, {"x"}));
  CHECK(equals(q, ideal(r, {"x", "y"})));
  // Membership oracle: f*x in (x^2, y) iff f in (x, y), on a sample of monomials.
  auto base = ideal(r, {"x^2", "y"});
  for (const auto& m : box_monomials({4, 4})) {
    auto f = QPoly::monomial(r, m);
    CHECK(q.contains(f) == base.contains(f * P("x", r)));
  }
  auto r3 = xyz();
  auto i = ideal(r3, {"x^2-y^5", "x*y^2+y*z^3-z^5"});
  CHECK(equals(quotient(i, QIdeal::unit(r3)), i));
  CHECK_THROWS_AS(quotient(i, QIdeal::zero(r3)), Error);
  try {
    quotient(i, QPoly(r3));
    FAIL("expected ZeroColon");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroColon);
  }
}

TEST_CASE("saturation") {
  auto r = xyz();
  auto s = saturate(ideal(r, {"x^2*y", "x*z"}), P("x", r));
  CHECK(equals(s, ideal(r, {"y", "z"})));
  // Explicit multiples witness y and z.
  CHECK(ideal(r, {"x^2*y", "x*z"}).contains(P("x^2*y", r)));
  CHECK(ideal(r, {"x^2*y", "x*z"}).contains(P("x*z", r)));
  CHECK(equals(saturate(ideal(r, {"x"}), P("y", r)), ideal(r, {"x"})));
  CHECK(saturate(ideal(r, {"x^2"}), P("x", r)).is_unit());
}

TEST_CASE("equality and containment") {
  auto r = xy();
  CHECK(contains(ideal(r, {"x", "y"}), ideal(r, {"x^2+y"})));
  CHECK_FALSE(contains(ideal(r, {"x^2"}), ideal(r, {"x"})));
  CHECK(equals(ideal(r, {"x", "y"}), ideal(r, {"y", "x+y"})));
  CHECK_FALSE(equals(ideal(r, {"x"}), ideal(r, {"x", "y"})));
}

TEST_CASE("vector space dimension") {
  auto r = xyz();
  CHECK(vector_space_dim(ideal(r, {"x^2", "z^5", "y"})) == 10u);
  CHECK(vector_space_dim(QIdeal::maximal(r)) == 1u);
  auto iy = ideal(r, {"x^2-y^5", "x*y^2+y*z^3-z^5", "y"});
  CHECK(vector_space_dim(iy) == 10u);
  CHECK(equals(iy, ideal(r, {"x^2", "z^5", "y"})));
  CHECK_FALSE(vector_space_dim(ideal(r, {"x^2-y^5", "x*y^2+y*z^3-z^5"})).has_value());
  CHECK(vector_space_dim(QIdeal::unit(r)) == 0u);
}

TEST_CASE("smallest power of the maximal ideal inside J") {
  auto r = xyz();
  CHECK(min_power_of_max_ideal_in(ideal(r, {"x^2-y^5", "x*y^2+y*z^3-z^5", "y"}), 12) == 6);
  CHECK(min_power_of_max_ideal_in(QIdeal::maximal(r), 5) == 1);
  CHECK_FALSE(min_power_of_max_ideal_in(ideal(r, {"x^2-y^5"}), 10).has_value());
}

TEST_CASE("divide_exact") {
  auto r = xy();
  CHECK(divide_exact(P("x^2-y^2", r), P("x-y", r)) == P("x+y", r));
  CHECK_THROWS_AS(divide_exact(P("x^2+1", r), P("x-y", r)), Error);
}

TEST_CASE("property: quotient and intersection agree with a brute-force oracle on Artinian monomial ideals") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(n);
    auto r = QRing::make(RationalField{}, names);
    std::vector<int> box_i, box_j;
    auto gi = random_artinian(rng, n, box_i);
    auto gj = random_artinian(rng, n, box_j);
    auto ii = from_monomials(r, gi), jj = from_monomials(r, gj);
    auto q = quotient(ii, jj);
    auto meet = intersect(ii, jj);
    // Artinian-route answers for the same ideals.
    int bound = 0;
    for (int e : box_i) bound += e;
    for (int e : box_j) bound += e;
    auto li = LocalIdeal<RationalField>::truncate(ii.generators(), r, bound);
    auto lj = LocalIdeal<RationalField>::truncate(jj.generators(), r, bound);
    auto lq = colon(li, jj.generators());
    auto lmeet = intersect(li, lj);
    std::vector<int> box(n);
    for (std::size_t k = 0; k < n; ++k) box[k] = std::max(box_i[k], box_j[k]) + 1;
    for (const auto& m : box_monomials(box)) {
      bool in_q = true;
      for (const auto& g : gj) in_q = in_q && divisible_by_any(m * g, gi);
      bool in_meet = divisible_by_any(m, gi) && divisible_by_any(m, gj);
      auto f = QPoly::monomial(r, m);
      CHECK(q.contains(f) == in_q);
      CHECK(meet.contains(f) == in_meet);
      CHECK(lq.contains(f) == in_q);
      CHECK(lmeet.contains(f) == in_meet);
    }
  }
}

TEST_CASE("property: (I : J) J lies in I") {
  SplitMix64 rng(3);
  auto r = xy();
  for (int trial = 0; trial < 15; ++trial) {
    auto rp = [&] {
      std::vector<Term<RationalField>> ts;
      for (int k = 0; k < 3; ++k) {
        Monomial m(2);
        m.set(0, static_cast<int>(rng.uniform(0, 2)));
        m.set(1, static_cast<int>(rng.uniform(0, 2)));
        ts.push_back({m, Rational(rng.uniform(-2, 2))});
      }
      return QPoly::from_terms(r, ts);
    };
    QIdeal i(r, {rp(), rp()}), j(r, {rp()});
    if (j.is_zero()) continue;
    auto q = quotient(i, j);
    CHECK(contains(i, product(q, j)));
  }
}

TEST_CASE("property: saturation is fixed by one more colon") {
  auto r = xyz();
  for (auto [gens, f] : std::vector<std::pair<std::vector<const char*>, const char*>>{
           {{"x^2*y", "x*z"}, "x"}, {{"x^3*y - x*z^2", "y^2*x"}, "x"}, {{"x*y", "x*z", "y*z^2"}, "z"}}) {
    std::vector<QPoly> g;
    for (auto* s : gens) g.push_back(P(s, r));
    auto s = saturate(QIdeal(r, g), P(f, r));
    CHECK(equals(quotient(s, P(f, r)), s));
  }
}

TEST_CASE("Artinian engine: colon and intersection match elimination on polynomial ideals") {
  SplitMix64 rng(17);
  auto r = xyz();
  auto m4 = power(QIdeal::maximal(r), 4);
  for (int trial = 0; trial < 12; ++trial) {
    auto rp = [&] {
      std::vector<Term<RationalField>> ts;
      for (int k = 0; k < 3; ++k) {
        Monomial m(3);
        int d = static_cast<int>(rng.uniform(1, 3));
        for (int s = 0; s < d; ++s) {
          std::size_t v = static_cast<std::size_t>(rng.uniform(0, 2));
          m.set(v, m[v] + 1);
        }
        ts.push_back({m, Rational(rng.uniform(-3, 3))});
      }
      return QPoly::from_terms(r, ts);
    };
    auto a = sum(QIdeal(r, {rp(), rp()}), m4);
    auto b = sum(QIdeal(r, {rp()}), m4);
    auto g = rp();
    if (g.is_zero()) continue;
    auto la = LocalIdeal<RationalField>::truncate(a.generators(), r, 4);
    auto lb = LocalIdeal<RationalField>::truncate(b.generators(), r, 4);
    auto lq = colon(la, {g});
    auto q = quotient(a, g);
    CHECK(lq == LocalIdeal<RationalField>::truncate(q.generators(), r, 4));
    auto lmeet = intersect(la, lb);
    auto meet = intersect(a, b);
    CHECK(lmeet == LocalIdeal<RationalField>::truncate(meet.generators(), r, 4));
  }
}

TEST_CASE("localization of an ideal with points away from the origin") {
  auto r = xy();
  // (x*(x-1), y) has points at the origin and at (1,0); locally it is (x, y).
  auto loc = localize<RationalField>({P("x^2-x", r), P("y", r)}, r);
  CHECK(loc.colength() == 1);
  auto loc2 = localize<RationalField>({P("x^2*(x-1)", r), P("y", r)}, r);
  CHECK(loc2.colength() == 2);
  CHECK_THROWS_AS(localize<RationalField>({P("y", r)}, r, 8), Error);
}
