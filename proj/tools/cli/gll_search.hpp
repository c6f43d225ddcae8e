#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lring/artinian.hpp"
#include "lring/ideal.hpp"
#include "lring/rng.hpp"

namespace lring::cli {

struct GllOptions {
  int target = 5;
  int order_lo = 1;
  int order_hi = 2;
  int samples = 500;
  std::uint64_t seed = 42;
  int coeff_box = 3;
  /// Tested before the random draws.
  std::vector<std::string> witnesses;
};

struct GllResult {
  int tested = 0;
  int rejected = 0;  // draws that were zero or in I
  std::vector<std::string> hits;
};

/// n^N ⊆ I + (f) in the localization. By Nakayama it is enough that n^N
/// lies in I + (f) + n^{N+1}, a single truncated computation.
template <class F>
bool max_power_inside(const std::vector<Polynomial<F>>& gens, const Polynomial<F>& f, int n) {
  auto ring = f.ring();
  auto g = gens;
  g.push_back(f);
  auto t = LocalIdeal<F>::truncate(g, ring, n + 1);
  for (const auto& m : monomials_of_degree(ring->nvars(), n)) {
    if (!t.contains(Polynomial<F>::monomial(ring, m))) return false;
  }
  return true;
}

/// Random search for f with n^N ⊆ I + (f). Coefficients are uniform in
/// [-B, B] on every monomial whose degree lies in the order range; draws
/// that vanish or lie in I are rejected and redrawn.
template <class F>
GllResult gll_search(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const GllOptions& o,
                     const std::function<Polynomial<F>(const std::string&)>& parse) {
  if (o.samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be positive");
  if (o.target < 1 || o.order_lo < 1 || o.order_hi < o.order_lo || o.coeff_box < 1) {
    throw Error(ErrorKind::InvalidArgument, "bad search parameters");
  }
  Ideal<F> ideal(ring, gens);
  GllResult r;
  auto test = [&](const Polynomial<F>& f) {
    ++r.tested;
    if (max_power_inside(gens, f, o.target)) r.hits.push_back(f.str());
  };
  for (const auto& w : o.witnesses) test(parse(w));
  std::vector<Monomial> support;
  for (int d = o.order_lo; d <= o.order_hi; ++d) {
    for (const auto& m : monomials_of_degree(ring->nvars(), d)) support.push_back(m);
  }
  SplitMix64 rng(o.seed);
  const auto& field = ring->field();
  int accepted = 0;
  const int max_draws = 100 * o.samples;
  for (int draws = 0; accepted < o.samples; ++draws) {
    if (draws >= max_draws) throw Error(ErrorKind::BudgetExceeded, "too many rejected draws");
    Polynomial<F> f(ring);
    for (const auto& m : support) {
      auto c = rng.uniform(-o.coeff_box, o.coeff_box);
      if (c != 0) f += Polynomial<F>::monomial(ring, m, field.from_integer(mpz_class(static_cast<long>(c))));
    }
    if (f.is_zero() || ideal.contains(f)) {
      ++r.rejected;
      continue;
    }
    ++accepted;
    test(f);
  }
  return r;
}

}  // namespace lring::cli
