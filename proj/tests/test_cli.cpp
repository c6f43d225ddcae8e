#include "doctest.h"

#include "cli/gll_search.hpp"
#include "cli/report.hpp"
#include "cli/ring_file.hpp"
#include "cli/scenarios.hpp"

using namespace lring;
using namespace lring::cli;

namespace {

QPoly P(const std::string& s, const RingPtr<RationalField>& r) { return parse_polynomial<RationalField>(s, r); }

auto parser(const RingPtr<RationalField>& r) {
  return [r](const std::string& s) { return P(s, r); };
}

}  // namespace

TEST_CASE("ring files") {
  auto d = parse_ring_description("# comment\nfield Q\nvars x y z\n\ngen x^2 - y^5\ngen x*y^2 + y*z^3\norder lex\nweights 15 6 7\n");
  CHECK(d.field == "Q");
  CHECK(d.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(d.gens.size() == 2);
  CHECK(d.order == "lex");
  CHECK(d.weights == std::vector<int>{15, 6, 7});
  auto t = instantiate(d, RationalField{});
  CHECK(t.gens[1] == P("x*y^2+y*z^3", t.ring));
  auto local = with_local_order(t);
  CHECK(local.ring->order().is_degree_compatible());

  auto fp = parse_ring_description("field Fp 32003\nvars x y\ngen x^3 - y^2\n");
  CHECK(fp.field == "Fp");
  CHECK(fp.prime == 32003u);
  auto n = with_field(fp, [&](auto field) { return instantiate(fp, field).gens.size(); });
  CHECK(n == 1u);

  CHECK_THROWS_AS(parse_ring_description("vars x\nfield Q\n"), Error);
  CHECK_THROWS_AS(parse_ring_description("field Q\n"), Error);
  CHECK_THROWS_AS(parse_ring_description("field Fp 12\nvars x\n"), Error);
  CHECK_THROWS_AS(parse_ring_description("field R\nvars x\n"), Error);
  CHECK_THROWS_AS(parse_ring_description("field Q\nvars x y\nweights 1\n"), Error);
  CHECK_THROWS_AS(parse_ring_description("field Q\nvars x\norder weird\n"), Error);
  CHECK_THROWS_AS(parse_ring_description("field Q\nvars x\nbogus 3\n"), Error);
  auto unit = parse_ring_description("field Q\nvars x\ngen x + 1\n");
  CHECK_THROWS_AS(instantiate(unit, RationalField{}), Error);
  auto stray = parse_ring_description("field Q\nvars x\ngen w\n");
  CHECK_THROWS_AS(instantiate(stray, RationalField{}), Error);
  CHECK(embedded_ring("main"));
  CHECK_FALSE(embedded_ring("nope"));
}

TEST_CASE("report schema") {
  Report r;
  r.scenario = "demo";
  r.checks.push_back({"a", Status::Pass, "1", "1", 12});
  r.checks.push_back({"b", Status::SkippedHeavy, "2", "budget", 3});
  CHECK(r.ok());
  auto j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"scenario", "seed", "version", "caveats", "checks"});
  CHECK(j["caveats"] == nlohmann::ordered_json::array({"contraction_assumed", "dimension_assumed"}));
  std::vector<std::string> ckeys;
  for (auto it = j["checks"][0].begin(); it != j["checks"][0].end(); ++it) ckeys.push_back(it.key());
  CHECK(ckeys == std::vector<std::string>{"name", "status", "expected", "actual", "time_ms"});
  CHECK(j["checks"][1]["status"] == "SKIPPED_HEAVY");
  CHECK(j["checks"][0]["time_ms"] == 12);
  CHECK(r.to_json(false)["checks"][0]["time_ms"] == 0);
  r.checks.push_back({"c", Status::Fail, "3", "4", 0});
  CHECK_FALSE(r.ok());

  auto c = timed_check("throws", [](Check&) -> Status { throw Error(ErrorKind::NotFound, "nothing"); });
  CHECK(c.status == Status::Fail);
  CHECK(c.actual.find("nothing") != std::string::npos);
}

TEST_CASE("scenarios") {
  CHECK_THROWS_AS(run_scenario("ex9"), Error);
  ScenarioOptions o;
  o.search_samples = 0;
  auto a = run_scenario("ex1", o);
  CHECK(a.ok());
  CHECK(a.checks.size() == 9);
  auto b = run_scenario("ex1", o);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  // A kernel budget of zero exercises the heavy-skip path.
  o.budget_seconds = 0;
  auto e = run_scenario("ex2", o);
  CHECK(e.ok());
  for (const auto& c : e.checks) CHECK(c.status == Status::SkippedHeavy);
}

TEST_CASE("order search") {
  auto r = QRing::make(RationalField{}, {"x", "y", "z"});
  std::vector<QPoly> gens{P("x^2-y^5", r), P("x*y^2+y*z^3-z^5", r)};
  CHECK(max_power_inside(gens, P("y", r), 6));
  CHECK_FALSE(max_power_inside(gens, P("y", r), 5));

  GllOptions g;
  g.target = 6;
  g.samples = 5;
  g.witnesses = {"y"};
  auto hit = gll_search<RationalField>(r, gens, g, parser(r));
  REQUIRE_FALSE(hit.hits.empty());
  CHECK(hit.hits[0] == "y");
  CHECK(hit.tested == 6);

  g.target = 5;
  g.samples = 40;
  g.witnesses = {"y", "x"};
  auto none = gll_search<RationalField>(r, gens, g, parser(r));
  CHECK(none.hits.empty());
  auto again = gll_search<RationalField>(r, gens, g, parser(r));
  CHECK(again.rejected == none.rejected);

  auto line = QRing::make(RationalField{}, {"x"});
  GllOptions l;
  l.target = 1;
  l.order_hi = 1;
  l.samples = 1;
  l.witnesses = {"x"};
  CHECK(gll_search<RationalField>(line, {}, l, parser(line)).hits.size() == 2);
  l.samples = 0;
  CHECK_THROWS_AS(gll_search<RationalField>(line, {}, l, parser(line)), Error);
}
