#include "cli/scenarios.hpp"

#include <algorithm>
#include <sstream>

#include "cli/gll_search.hpp"
#include "lring/bounds.hpp"
#include "lring/localring.hpp"
#include "lring/parse.hpp"
#include "lring/subalgebra.hpp"

namespace lring::cli {

namespace {

using QLocal = LocalRing<RationalField>;

QPoly P(const std::string& s, const RingPtr<RationalField>& r) { return parse_polynomial<RationalField>(s, r); }

std::vector<QPoly> polys(const RingPtr<RationalField>& r, const std::vector<std::string>& src) {
  std::vector<QPoly> out;
  for (const auto& s : src) out.push_back(P(s, r));
  return out;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string ideal_str(const std::vector<std::string>& gens) { return "(" + join(gens, ", ") + ")"; }

std::string ideal_str(const std::vector<QPoly>& gens) {
  std::vector<std::string> s;
  for (const auto& g : gens) s.push_back(g.str());
  return ideal_str(s);
}

Status verdict(bool ok) { return ok ? Status::Pass : Status::Fail; }

const std::vector<std::string> kMainGens{"x^2-y^5", "x*y^2+y*z^3-z^5"};
const std::vector<std::string> kEx1Gens{"x^2-y^5", "x*y^2+y*z^3"};
const std::vector<std::string> kCone{"X^2", "X*Y^2", "X*Y*Z^3", "Y*Z^6"};

void hilbert_checks(Report& rep, const QLocal& R) {
  rep.checks.push_back(timed_check("hilbert_function", [&](Check& c) {
    c.expected = "1,3,5,6,7,7,8,8,8";
    c.actual = join(R.hilbert_function(8).values);
    return verdict(c.actual == c.expected);
  }));
  rep.checks.push_back(timed_check("multiplicity", [&](Check& c) {
    c.expected = "8";
    c.actual = std::to_string(R.multiplicity());
    return verdict(c.actual == c.expected);
  }));
}

void tangent_cone_checks(Report& rep, const QLocal& R) {
  auto up = R.uppercase_ring();
  auto names = up->variables();
  std::optional<Ideal<RationalField>> cone;
  std::optional<MonomialIdeal> mono;
  rep.checks.push_back(timed_check("tangent_cone", [&](Check& c) {
    c.expected = ideal_str(kCone);
    cone = R.tangent_cone();
    mono = as_monomial_ideal(*cone);
    c.actual = mono ? mono->str(names) : ideal_str(cone->generators());
    return verdict(equals(*cone, Ideal<RationalField>(up, polys(up, kCone))));
  }));
  rep.checks.push_back(timed_check("tangent_cone_components", [&](Check& c) {
    std::vector<MonomialIdeal> want;
    for (auto g : {std::vector<std::string>{"X^2", "Y"}, {"X", "Z^6"}, {"X^2", "Y^2", "Z^3"}}) {
      want.push_back(*as_monomial_ideal(Ideal<RationalField>(up, polys(up, g))));
    }
    std::sort(want.begin(), want.end());
    std::vector<std::string> ws;
    for (const auto& w : want) ws.push_back(w.str(names));
    c.expected = join(ws, " ∩ ");
    if (!mono) throw Error(ErrorKind::InvalidArgument, "tangent cone is not monomial");
    auto got = irreducible_decomposition(*mono);
    std::sort(got.begin(), got.end());
    std::vector<std::string> gs;
    for (const auto& g : got) gs.push_back(g.str(names));
    c.actual = join(gs, " ∩ ");
    return verdict(got == want);
  }));
  rep.checks.push_back(timed_check("tangent_cone_minimal_primes", [&](Check& c) {
    c.expected = "(X, Y), (X, Z)";
    if (!mono) throw Error(ErrorKind::InvalidArgument, "tangent cone is not monomial");
    std::vector<std::string> ps;
    for (const auto& p : minimal_primes(*mono)) {
      std::vector<std::string> v;
      for (auto i : p) v.push_back(names[i]);
      ps.push_back(ideal_str(v));
    }
    c.actual = join(ps, ", ");
    return verdict(c.actual == c.expected);
  }));
}

void delta_checks(Report& rep, const QLocal& R, const QPoly& x, const std::string& xs,
                  const std::vector<std::string>& colon5, const std::vector<std::string>& colon4) {
  auto r = R.ring();
  for (auto [n, list, want] : {std::tuple{5, &colon5, true}, std::tuple{4, &colon4, false}}) {
    rep.checks.push_back(timed_check("delta_" + xs + "_n" + std::to_string(n), [&, n = n, list = list, want = want](Check& c) {
      c.expected = "colon = " + ideal_str(*list) + " mod I; delta = " + (want ? "1" : "0");
      bool same = R.delta_colon(x, n) == R.localize_with(polys(r, *list));
      bool d = R.delta_one_test(x, n).verdict;
      c.actual = std::string("colon ") + (same ? "= " : "!= ") + ideal_str(*list) + " mod I; delta = " + (d ? "1" : "0");
      return verdict(same && d == want);
    }));
  }
  rep.checks.push_back(timed_check("delta_conditions_" + xs, [&](Check& c) {
    c.expected = "(ii),(iii),(iv),mu agree; delta for n=1..6: 0,0,0,0,1,1";
    std::vector<int> ds;
    bool agree = true;
    for (int n = 1; n <= 6; ++n) {
      auto b = R.delta_one_test(x, n);  // throws if (ii), (iii), (iv) disagree
      int m = R.delta_via_mu(x, n);
      agree = agree && m == (b.verdict ? 1 : 0);
      ds.push_back(b.verdict ? 1 : 0);
    }
    c.actual = std::string(agree ? "(ii),(iii),(iv),mu agree" : "mu disagrees") + "; delta for n=1..6: " + join(ds);
    return verdict(c.actual == c.expected);
  }));
  rep.checks.push_back(timed_check("index_via_" + xs, [&](Check& c) {
    c.expected = "5";
    c.actual = std::to_string(R.index(x));
    return verdict(c.actual == c.expected);
  }));
}

void loewy_check(Report& rep, const QLocal& R, const QPoly& f, const std::string& fs) {
  rep.checks.push_back(timed_check("loewy_length_mod_" + fs, [&](Check& c) {
    c.expected = "6";
    c.actual = std::to_string(R.loewy_length_mod(f));
    return verdict(c.actual == c.expected);
  }));
}

void case_report_checks(Report& rep, const QLocal& R) {
  std::optional<CaseReport> cr;
  rep.checks.push_back(timed_check("case_report_order_ge_3", [&](Check& c) {
    auto h = R.hilbert_function(2).values;
    auto e = R.multiplicity();
    auto cone = R.tangent_cone();
    auto istar2 = binomial(h[1] + 1, 2) - graded_hilbert_function(cone, 2)[2];
    cr = order_case_report(static_cast<int>(h[1]), e, istar2, 5, 4);
    c.expected = "21 < 24";
    std::int64_t worst = 0;
    bool all = cr->tail.eliminated;
    for (const auto& x : cr->entries) {
      if (x.order < 3) continue;
      all = all && x.eliminated;
      if (x.order == 3) worst = std::max(worst, x.max_length);
    }
    c.actual = std::to_string(worst) + (all ? " < " : " >= ") + std::to_string(3 * e);
    return verdict(all && c.actual == c.expected);
  }));
  rep.checks.push_back(timed_check("case_report_order_2_hf2_4", [&](Check& c) {
    c.expected = "14 < 16";
    if (!cr) throw Error(ErrorKind::InvalidArgument, "no case report");
    for (const auto& x : cr->entries) {
      if (x.order == 2 && x.hf[2] == 4) {
        c.actual = std::to_string(x.max_length) + (x.eliminated ? " < " : " >= ") + std::to_string(x.required);
        return verdict(x.eliminated && c.actual == c.expected);
      }
    }
    c.actual = "no such case";
    return Status::Fail;
  }));
  rep.checks.push_back(timed_check("case_report_unresolved", [&](Check& c) {
    c.expected = "d=1 HF(2)=2, d=1 HF(2)=3, d=2 HF(2)=5";
    if (!cr) throw Error(ErrorKind::InvalidArgument, "no case report");
    std::vector<std::string> open;
    for (const auto& x : cr->entries) {
      if (!x.eliminated) open.push_back("d=" + std::to_string(x.order) + " HF(2)=" + std::to_string(x.hf[2]));
    }
    c.actual = join(open, ", ");
    return verdict(c.actual == c.expected);
  }));
}

Report run_main(const ScenarioOptions& o) {
  Report rep;
  rep.scenario = "main";
  rep.seed = o.seed;
  auto r = QRing::make(RationalField{}, {"x", "y", "z"});
  QLocal R(r, polys(r, kMainGens));
  auto y = P("y", r);
  hilbert_checks(rep, R);
  tangent_cone_checks(rep, R);
  delta_checks(rep, R, y, "y", {"y^5", "x*y^3", "y*z^4", "x*y*z^3", "y^3*z^2", "x*y^2*z^2", "y^4*z"},
               {"y^4", "y*z^3", "y^2*z^2", "x*y*z^2", "y^3*z", "x*y^2*z", "x*z^4"});
  loewy_check(rep, R, y, "y");
  case_report_checks(rep, R);
  if (o.search_samples > 0) {
    rep.checks.push_back(timed_check("order_search_n5", [&](Check& c) {
      GllOptions g;
      g.target = 5;
      g.samples = o.search_samples;
      g.seed = o.seed;
      auto res = gll_search<RationalField>(r, R.generators(), g, [&](const std::string& s) { return P(s, r); });
      c.expected = "0 hits";
      c.actual = std::to_string(res.hits.size()) + " hits";
      if (!res.hits.empty()) c.actual += ": " + join(res.hits, "; ");
      return verdict(res.hits.empty());
    }));
  }
  return rep;
}

Report run_ex1(const ScenarioOptions& o) {
  Report rep;
  rep.scenario = "ex1";
  rep.seed = o.seed;
  auto r = QRing::make(RationalField{}, {"x", "y", "z"});
  QLocal R(r, polys(r, kEx1Gens));
  rep.checks.push_back(timed_check("weighted_homogeneity", [&](Check& c) {
    c.expected = "homogeneous for weights (15,6,7)";
    bool ok = weighted_homogeneity_check(R.generators(), {15, 6, 7});
    c.actual = std::string(ok ? "homogeneous" : "not homogeneous") + " for weights (15,6,7)";
    return verdict(ok);
  }));
  hilbert_checks(rep, R);
  rep.checks.push_back(timed_check("tangent_cone_matches_main", [&](Check& c) {
    QLocal M(r, polys(r, kMainGens));
    c.expected = ideal_str(kCone);
    auto cone = R.tangent_cone();
    auto mono = as_monomial_ideal(cone);
    c.actual = mono ? mono->str(cone.ring()->variables()) : ideal_str(cone.generators());
    return verdict(equals(cone, M.tangent_cone()));
  }));
  delta_checks(rep, R, P("z", r), "z", {"x*y^2*z", "z^5", "x*z^4", "y^3*z^2", "y^4*z", "y^2*z^3", "x*y*z^3"},
               {"x*y^2", "x^2*y", "z^4", "x*z^3", "y^2*z^2", "x*y*z^2", "y^3*z"});
  loewy_check(rep, R, P("y-z", r), "y-z");
  return rep;
}

Report run_ex2(const ScenarioOptions& o) {
  Report rep;
  rep.scenario = "ex2";
  rep.seed = o.seed;
  auto map = make_map(RationalField{}, {"x", "y", "z"}, "t", {"t^8+t^10", "t^9", "t^20+t^36"});
  auto r = map.source;
  GroebnerOptions go;
  go.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(o.budget_seconds * 1000));
  std::optional<Ideal<RationalField>> k;
  auto kc = timed_check("kernel", [&](Check& c) {
    c.expected = "kernel of t -> (t^8+t^10, t^9, t^20+t^36)";
    try {
      k = kernel(map, go);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      c.actual = e.what();
      return Status::SkippedHeavy;
    }
    c.actual = ideal_str(k->generators());
    return Status::Pass;
  });
  rep.checks.push_back(kc);
  auto dependent = [&](const std::string& name, const std::string& expected, const std::function<Status(Check&)>& body) {
    if (k) {
      rep.checks.push_back(timed_check(name, body));
    } else {
      rep.checks.push_back({name, kc.status == Status::SkippedHeavy ? Status::SkippedHeavy : Status::Fail, expected,
                            "kernel unavailable", 0});
    }
  };
  const std::vector<std::string> low{"z^2", "y^4-x^2*z+2*y^2*z"};
  dependent("kernel_mod_n5", ideal_str(low) + " + n^5", [&](Check& c) {
    c.expected = ideal_str(low) + " + n^5";
    bool same = LocalIdeal<RationalField>::truncate(k->generators(), r, 5) ==
                LocalIdeal<RationalField>::truncate(polys(r, low), r, 5);
    c.actual = same ? c.expected : "differs modulo n^5";
    return verdict(same);
  });
  dependent("kernel_substitution", "every generator maps to 0", [&](Check& c) {
    c.expected = "every generator maps to 0";
    std::size_t bad = 0;
    for (const auto& g : k->generators()) bad += verify_in_kernel(g, map) ? 0 : 1;
    c.actual = bad ? std::to_string(bad) + " generators do not map to 0" : c.expected;
    return verdict(bad == 0);
  });
  std::optional<QLocal> R;
  if (k) R.emplace(r, k->generators());
  auto x = P("x", r);
  dependent("multiplicity", "8", [&](Check& c) {
    c.expected = "8";
    c.actual = std::to_string(R->multiplicity());
    return verdict(c.actual == c.expected);
  });
  dependent("loewy_length_mod_x", "6", [&](Check& c) {
    c.expected = "6";
    c.actual = std::to_string(R->loewy_length_mod(x));
    return verdict(c.actual == c.expected);
  });
  dependent("index_via_x", "5", [&](Check& c) {
    c.expected = "5";
    c.actual = std::to_string(R->index(x));
    return verdict(c.actual == c.expected);
  });
  return rep;
}

}  // namespace

Report run_scenario(const std::string& name, const ScenarioOptions& opts) {
  if (name == "main") return run_main(opts);
  if (name == "ex1") return run_ex1(opts);
  if (name == "ex2") return run_ex2(opts);
  throw Error(ErrorKind::InvalidArgument, "unknown scenario '" + name + "' (main, ex1, ex2)");
}

}  // namespace lring::cli
