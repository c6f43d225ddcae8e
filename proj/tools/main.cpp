// lring: command-line front end for the local ring library.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/gll_search.hpp"
#include "cli/ring_file.hpp"
#include "cli/scenarios.hpp"
#include "lring/bounds.hpp"
#include "lring/localring.hpp"
#include "lring/polytope.hpp"
#include "lring/subalgebra.hpp"

using namespace lring;
using namespace lring::cli;

namespace {

struct Args {
  std::string ring_file;
  std::string scenario;
  int max_degree = 8;
  int loewy_bound = 12;
  std::string witness;
  std::vector<std::string> witnesses;
  std::string element;
  int max_n = 10;
  int target = 5;
  std::string orders = "1..2";
  int samples = 500;
  std::uint64_t seed = 42;
  int coeff_box = 3;
  double budget_seconds = 600;
  std::string out;
  bool no_timing = false;
  std::string map_file;
  std::string vars;
  std::string j2;
  int emb = 0, istar2 = -1, d_max = 4;
  std::int64_t mult = 0;
  std::int64_t mb_d = 0;
  int mb_n = 0;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected A..B, got '" + s + "'");
  }
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

template <class F>
std::string ideal_str(const std::vector<Polynomial<F>>& g) {
  std::vector<std::string> s;
  for (const auto& p : g) s.push_back(p.str());
  return "(" + join(s, ", ") + ")";
}

/// Ring from --ring or --scenario; ex2 is built from its parametrization.
RingDescription load_ring(const Args& a) {
  if (!a.ring_file.empty() && !a.scenario.empty()) throw CLI::ValidationError("give either --ring or --scenario");
  if (!a.ring_file.empty()) return read_ring_file(a.ring_file);
  if (a.scenario.empty()) throw CLI::ValidationError("--ring FILE or --scenario NAME is required");
  if (auto t = embedded_ring(a.scenario)) return parse_ring_description(*t);
  if (a.scenario == "ex2") {
    auto map = make_map(RationalField{}, {"x", "y", "z"}, "t", {"t^8+t^10", "t^9", "t^20+t^36"});
    GroebnerOptions go;
    go.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(a.budget_seconds * 1000));
    RingDescription d;
    d.vars = {"x", "y", "z"};
    for (const auto& g : kernel(map, go).generators()) d.gens.push_back(g.str());
    return d;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown scenario '" + a.scenario + "'");
}

/// Runs fn(local ring) for the ring the flags describe.
template <class Fn>
int with_local_ring(const Args& a, Fn&& fn) {
  auto desc = load_ring(a);
  return with_field(desc, [&](auto field) {
    using F = decltype(field);
    auto t = with_local_order(instantiate(desc, field));
    LocalRing<F> R(t.ring, t.gens);
    return fn(R, desc);
  });
}

template <class F>
Polynomial<F> element(const Args& a, const LocalRing<F>& R) {
  if (a.element.empty()) throw CLI::ValidationError("--element EXPR is required");
  return parse_polynomial<F>(a.element, R.ring());
}

int cmd_hilbert(const Args& a) {
  return with_local_ring(a, [&](const auto& R, const RingDescription&) {
    auto h = R.hilbert_function(a.max_degree);
    std::cout << "n    ";
    for (std::size_t i = 0; i < h.values.size(); ++i) std::cout << std::setw(4) << i;
    std::cout << "\nHF(n)";
    for (auto v : h.values) std::cout << std::setw(4) << v;
    std::cout << "\n";
    if (h.multiplicity) {
      std::cout << "constant " << *h.multiplicity << " from n = " << *h.stabilized_at << "\n";
    } else {
      std::cout << "not yet constant for " << h.window << " degrees\n";
    }
    std::cout << "e(R) = " << R.multiplicity() << "\n";
    return 0;
  });
}

int cmd_index(const Args& a) {
  return with_local_ring(a, [&](const auto& R, const RingDescription&) {
    auto x = element(a, R);
    for (int n = 1; n <= a.max_n; ++n) {
      auto b = R.delta_one_test(x, n);
      std::cout << "n=" << n << "  (ii)=" << b.ii << " (iii)=" << b.iii << " (iv)=" << b.iv
                << " mu=" << R.delta_via_mu(x, n) << "  delta=" << b.verdict << "\n";
    }
    std::cout << "index = " << R.index(x, a.max_n) << "\n";
    return 0;
  });
}

int cmd_tangent_cone(const Args& a) {
  return with_local_ring(a, [&](const auto& R, const RingDescription&) {
    auto cone = R.tangent_cone();
    auto names = cone.ring()->variables();
    std::cout << "I* = " << ideal_str(cone.generators()) << "\n";
    if (auto m = as_monomial_ideal(cone)) {
      std::vector<std::string> comps, primes;
      for (const auto& c : irreducible_decomposition(*m)) comps.push_back(c.str(names));
      for (const auto& p : minimal_primes(*m)) {
        std::vector<std::string> v;
        for (auto i : p) v.push_back(names[i]);
        primes.push_back("(" + join(v, ", ") + ")");
      }
      std::cout << "irreducible components: " << join(comps, " ∩ ") << "\n";
      std::cout << "minimal primes: " << join(primes, ", ") << "\n";
    }
    return 0;
  });
}

int cmd_loewy(const Args& a) {
  return with_local_ring(a, [&](const auto& R, const RingDescription&) {
    auto f = element(a, R);
    std::cout << "ll(R/(" << f.str() << ")) = " << R.loewy_length_mod(f, a.loewy_bound) << "\n";
    return 0;
  });
}

int cmd_superficial(const Args& a) {
  return with_local_ring(a, [&](const auto& R, const RingDescription&) {
    auto f = element(a, R);
    auto o = R.ord(f);
    auto e = R.multiplicity();
    std::cout << "ord = " << o.value << (o.capped || o.inside_ideal ? " (at least)" : "") << "\n";
    std::cout << "e(R) = " << e << "\n";
    if (!R.is_nonzerodivisor(f)) {
      std::cout << "zero-divisor\nsuperficial: no\n";
      return 0;
    }
    auto len = R.colength(f);
    std::cout << "length R/fR = " << len << "\n";
    std::cout << "superficial: " << (!o.capped && !o.inside_ideal && len == o.value * e ? "yes" : "no") << "\n";
    return 0;
  });
}

int cmd_case_report(const Args& a) {
  int emb = a.emb, istar2 = a.istar2;
  std::int64_t e = a.mult;
  if (!a.ring_file.empty() || !a.scenario.empty()) {
    with_local_ring(a, [&](const auto& R, const RingDescription&) {
      auto h = R.hilbert_function(2).values;
      emb = static_cast<int>(h[1]);
      e = R.multiplicity();
      istar2 = static_cast<int>(binomial(h[1] + 1, 2) - graded_hilbert_function(R.tangent_cone(), 2)[2]);
      return 0;
    });
  } else if (emb < 1 || e < 1 || istar2 < 0) {
    throw CLI::ValidationError("case-report needs --ring/--scenario or all of --emb, --mult, --istar2");
  }
  std::optional<std::pair<std::int64_t, std::int64_t>> j2;
  if (!a.j2.empty()) j2 = parse_range(a.j2);
  auto rep = order_case_report(emb, e, istar2, a.target, a.d_max, j2);
  std::cout << "emb = " << emb << ", e = " << e << ", lambda((I*)_2) = " << istar2 << ", N = " << a.target
            << ", lambda((J*)_2) in [" << rep.j2_range.first << ", " << rep.j2_range.second << "]\n";
  for (const auto& c : rep.entries) {
    std::cout << "ord " << c.order << "  HF = " << join(c.hf, ",") << "  "
              << (c.eliminated ? "ELIMINATED " : "UNRESOLVED ") << c.reason << "\n";
  }
  std::cout << "ord >= " << rep.tail.order << "  " << (rep.tail.eliminated ? "ELIMINATED " : "UNRESOLVED ")
            << rep.tail.reason << "\n";
  return 0;
}

int cmd_newton(const Args& a) {
  if (a.element.empty()) throw CLI::ValidationError("newton needs a polynomial");
  std::vector<std::string> vars;
  if (!a.vars.empty()) {
    std::istringstream in(a.vars);
    for (std::string v; std::getline(in, v, ',');) vars.push_back(v);
  } else {
    // Variables in order of first appearance.
    for (std::size_t i = 0; i < a.element.size();) {
      if (std::isalpha(static_cast<unsigned char>(a.element[i])) || a.element[i] == '_') {
        std::size_t j = i;
        while (j < a.element.size() && (std::isalnum(static_cast<unsigned char>(a.element[j])) || a.element[j] == '_')) ++j;
        auto name = a.element.substr(i, j - i);
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        i = j;
      } else {
        ++i;
      }
    }
  }
  if (vars.size() == 1) vars.push_back(vars[0] == "y" ? "x" : "y");
  if (vars.size() != 2) throw CLI::ValidationError("newton needs a polynomial in two variables (see --vars)");
  auto r = QRing::make(RationalField{}, vars);
  auto f = parse_polynomial<RationalField>(a.element, r);
  auto crit = poly_irreducibility_criterion(f);
  const auto& np = crit.polygon;
  std::cout << "coordinates (deg " << vars[0] << ", deg " << vars[1] << ")\n";
  std::cout << "vertices: " << np.str() << "\n";
  std::vector<std::string> es;
  for (const auto& e : np.edges()) {
    es.push_back("(" + std::to_string(e.dir.x) + "," + std::to_string(e.dir.y) + ")x" + std::to_string(e.length));
  }
  std::cout << "edges: " << join(es, " ") << "\n";
  if (!np.is_point()) {
    auto edge = coprime_edge_test(np);
    std::cout << "edge test: "
              << (edge ? "applies with (n, m) = (" + std::to_string(edge->first) + ", " + std::to_string(edge->second) + ")"
                       : std::string("does not apply"))
              << "\n";
    auto split = find_edge_splitting(np);
    std::cout << "edge splitting: "
              << (split ? "found, " + split->first.str() + " + " + split->second.str() : std::string("none")) << "\n";
    std::cout << "polygon: " << (split ? "integer reducible" : "integer irreducible") << "\n";
  }
  std::cout << "criterion: " << (crit.verdict == CriterionVerdict::Irreducible ? "IRREDUCIBLE" : "INCONCLUSIVE") << " ("
            << crit.reason << ")\n";
  return 0;
}

int cmd_kernel(const Args& a) {
  ParametrizedMap<RationalField> map;
  if (!a.map_file.empty()) {
    std::ifstream in(a.map_file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + a.map_file);
    std::stringstream ss;
    ss << in.rdbuf();
    map = parse_map_file(ss.str(), RationalField{});
  } else if (a.scenario == "ex2") {
    map = make_map(RationalField{}, {"x", "y", "z"}, "t", {"t^8+t^10", "t^9", "t^20+t^36"});
  } else {
    throw CLI::ValidationError("kernel needs --map FILE or --scenario ex2");
  }
  GroebnerOptions go;
  go.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(a.budget_seconds * 1000));
  auto k = kernel(map, go);
  bool all = true;
  for (const auto& g : k.generators()) {
    bool ok = verify_in_kernel(g, map);
    all = all && ok;
    std::cout << (ok ? "ok   " : "BAD  ") << g.str() << "\n";
  }
  return all ? 0 : 1;
}

int cmd_verify(const Args& a) {
  if (a.scenario.empty()) throw CLI::ValidationError("verify needs --scenario NAME");
  ScenarioOptions so;
  so.seed = a.seed;
  so.budget_seconds = a.budget_seconds;
  so.search_samples = a.samples;
  auto rep = run_scenario(a.scenario, so);
  auto text = rep.to_json(!a.no_timing).dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
    std::cerr << rep.summary();
  } else {
    std::ofstream out(a.out);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.out);
    out << text;
    std::cout << rep.summary();
  }
  return rep.ok() ? 0 : 1;
}

int cmd_gll_search(const Args& a) {
  return with_local_ring(a, [&](const auto& R, const RingDescription&) {
    using F = std::decay_t<decltype(R.ring()->field())>;
    GllOptions g;
    g.target = a.target;
    std::tie(g.order_lo, g.order_hi) = parse_range(a.orders);
    g.samples = a.samples;
    g.seed = a.seed;
    g.coeff_box = a.coeff_box;
    g.witnesses = a.witnesses;
    auto ring = R.ring();
    Report rep;
    rep.scenario = "gll_search";
    rep.seed = a.seed;
    GllResult res;
    rep.checks.push_back(timed_check("no_f_with_max_power_in_fR", [&](Check& c) {
      res = gll_search<F>(ring, R.generators(), g, [&](const std::string& s) { return parse_polynomial<F>(s, ring); });
      c.expected = "0 hits for N=" + std::to_string(g.target) + ", orders " + a.orders + ", " +
                   std::to_string(g.samples) + " samples, coefficients in [-" + std::to_string(g.coeff_box) + ", " +
                   std::to_string(g.coeff_box) + "]";
      c.actual = std::to_string(res.hits.size()) + " hits";
      if (!res.hits.empty()) c.actual += ": " + join(res.hits, "; ");
      return res.hits.empty() ? Status::Pass : Status::Fail;
    }));
    auto text = rep.to_json(!a.no_timing).dump(2) + "\n";
    if (!a.out.empty()) {
      std::ofstream out(a.out);
      if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.out);
      out << text;
    }
    std::cout << "tested " << res.tested << ", rejected " << res.rejected << " draws in I\n";
    for (const auto& h : res.hits) std::cout << "hit: " << h << "\n";
    std::cout << rep.summary();
    return rep.ok() ? 0 : 1;
  });
}

int cmd_macaulay_bound(const Args& a) {
  std::cout << macaulay_bound(a.mb_d, a.mb_n) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of one-dimensional local rings"};
  app.require_subcommand(1);
  Args a;

  auto ring_flags = [&](CLI::App* s) {
    s->add_option("--ring", a.ring_file, "ring description file");
    s->add_option("--scenario", a.scenario, "built-in ring: main, ex1, ex2");
    s->add_option("--budget-seconds", a.budget_seconds, "time allowed for heavy Groebner work");
  };
  std::map<std::string, std::function<int(const Args&)>> commands;

  auto* hil = app.add_subcommand("hilbert", "Hilbert function of the associated graded ring");
  ring_flags(hil);
  hil->add_option("--max-degree", a.max_degree, "last degree shown");
  commands["hilbert"] = cmd_hilbert;

  auto* idx = app.add_subcommand("index", "delta tests and the index via a parameter");
  ring_flags(idx);
  idx->add_option("--element", a.element, "parameter x")->required();
  idx->add_option("--max-n", a.max_n, "largest n tested");
  commands["index"] = cmd_index;

  auto* tc = app.add_subcommand("tangent-cone", "ideal of initial forms");
  ring_flags(tc);
  commands["tangent-cone"] = cmd_tangent_cone;

  auto* lw = app.add_subcommand("loewy", "Loewy length of R/fR");
  ring_flags(lw);
  lw->add_option("--element", a.element, "element f")->required();
  lw->add_option("--max-degree", a.loewy_bound, "largest power tried");
  commands["loewy"] = cmd_loewy;

  auto* sup = app.add_subcommand("superficial", "order, colength and superficiality of f");
  ring_flags(sup);
  sup->add_option("--element", a.element, "element f")->required();
  commands["superficial"] = cmd_superficial;

  auto* cr = app.add_subcommand("case-report", "Hilbert function case split on ord(f)");
  ring_flags(cr);
  cr->add_option("--target", a.target, "N with m^N in fR");
  cr->add_option("--max-n", a.d_max, "largest order listed separately");
  cr->add_option("--emb", a.emb, "embedding dimension (without --ring)");
  cr->add_option("--mult", a.mult, "multiplicity (without --ring)");
  cr->add_option("--istar2", a.istar2, "length of (I*)_2 (without --ring)");
  cr->add_option("--j2", a.j2, "range A..B for the length of (J*)_2 in order one");
  commands["case-report"] = cmd_case_report;

  auto* nw = app.add_subcommand("newton", "Newton polygon and irreducibility criterion");
  nw->add_option("poly", a.element, "bivariate polynomial")->required();
  nw->add_option("--vars", a.vars, "coordinate variables, comma separated");
  commands["newton"] = cmd_newton;

  auto* kr = app.add_subcommand("kernel", "kernel of a monomial-curve style parametrization");
  kr->add_option("--map", a.map_file, "map file: parameter line, then 'x = image' lines");
  kr->add_option("--scenario", a.scenario, "ex2");
  kr->add_option("--budget-seconds", a.budget_seconds, "time allowed for the elimination");
  commands["kernel"] = cmd_kernel;

  auto* mb = app.add_subcommand("macaulay-bound", "d^<n>");
  mb->add_option("d", a.mb_d)->required();
  mb->add_option("n", a.mb_n)->required();
  commands["macaulay-bound"] = cmd_macaulay_bound;

  auto* vf = app.add_subcommand("verify", "run a built-in scenario and emit a JSON report");
  vf->add_option("--scenario", a.scenario, "main, ex1, ex2")->required();
  vf->add_option("--out", a.out, "report file (default stdout)");
  vf->add_option("--seed", a.seed, "seed for randomized checks");
  vf->add_option("--samples", a.samples, "draws for the order search in main (0 skips it)");
  vf->add_option("--budget-seconds", a.budget_seconds, "time allowed for the ex2 kernel");
  vf->add_flag("--no-timing", a.no_timing, "write time_ms as 0 so reports compare byte for byte");
  commands["verify"] = cmd_verify;

  auto* gs = app.add_subcommand("gll-search", "random search for f with m^N in I + (f)");
  ring_flags(gs);
  gs->add_option("--target", a.target, "N");
  gs->add_option("--orders", a.orders, "degree range A..B of the sampled monomials");
  gs->add_option("--samples", a.samples, "number of accepted draws");
  gs->add_option("--seed", a.seed, "SplitMix64 seed");
  gs->add_option("--coeff-box", a.coeff_box, "coefficients drawn from [-B, B]");
  gs->add_option("--witness", a.witnesses, "element tested before the draws (repeatable)");
  gs->add_option("--out", a.out, "JSON report file");
  gs->add_flag("--no-timing", a.no_timing, "write time_ms as 0");
  commands["gll-search"] = cmd_gll_search;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  try {
    for (auto* s : app.get_subcommands()) return commands.at(s->get_name())(a);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
