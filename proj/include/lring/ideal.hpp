#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lring/groebner.hpp"

namespace lring {

/// Exact quotient f / g; throws InternalInconsistency when g does not divide f.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  Polynomial<F> q(f.ring()), p = f;
  const auto& lg = g.leading_monomial();
  auto inv = g.leading_coeff().inverse();
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    if (!lg.divides(lt.mono)) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
    Monomial m = lt.mono / lg;
    auto c = lt.coeff * inv;
    q += Polynomial<F>::monomial(f.ring(), m, c);
    p -= g.mul_term(m, c);
  }
  return q;
}

/// Ideal of a polynomial ring given by generators. Groebner bases are
/// computed on demand and cached per term order; copies share the cache.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(RingPtr<F> ring, std::vector<Poly> gens, GroebnerOptions opts = {})
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    cache_->opts = opts;
    for (auto& g : gens) {
      if (!g.ring()->compatible_with(*ring_)) throw Error(ErrorKind::RingMismatch, "generator from another ring");
      if (!g.is_zero()) gens_.push_back(g.reorder(ring_));
    }
  }

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<F> ring) {
    auto one = Poly::constant(ring, ring->field().one());
    return Ideal(std::move(ring), {one});
  }
  /// The ideal generated by all variables.
  static Ideal maximal(RingPtr<F> ring) {
    std::vector<Poly> v;
    for (std::size_t i = 0; i < ring->nvars(); ++i) v.push_back(Poly::variable(ring, i));
    return Ideal(std::move(ring), std::move(v));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const GroebnerOptions& options() const { return cache_->opts; }
  bool is_zero() const { return gens_.empty(); }

  const GroebnerBasis<F>& groebner() const { return groebner(ring_->order()); }

  const GroebnerBasis<F>& groebner(const TermOrder& ord) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->bases.find(ord);
      if (it != cache_->bases.end()) return *it->second;
    }
    auto r = ring_->with_order(ord);
    std::vector<Poly> g;
    for (const auto& p : gens_) g.push_back(p.reorder(r));
    auto gb = std::make_unique<GroebnerBasis<F>>(buchberger<F>(std::move(g), r, cache_->opts));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(ord, std::move(gb));
    return *it->second;
  }

  bool contains(const Poly& f) const {
    const auto& gb = groebner();
    return normal_form(f.reorder(gb.ring), gb).is_zero();
  }

  bool is_unit() const { return groebner().is_unit(); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<TermOrder, std::unique_ptr<GroebnerBasis<F>>> bases;
    GroebnerOptions opts;
  };

  RingPtr<F> ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {
template <class F>
void same_ring(const Ideal<F>& a, const Ideal<F>& b) {
  if (!a.ring()->compatible_with(*b.ring())) throw Error(ErrorKind::RingMismatch, "ideals in different rings");
}
}  // namespace detail

template <class F>
Ideal<F> sum(const Ideal<F>& a, const Ideal<F>& b) {
  detail::same_ring(a, b);
  auto g = a.generators();
  for (const auto& p : b.generators()) g.push_back(p.reorder(a.ring()));
  return Ideal<F>(a.ring(), std::move(g), a.options());
}

template <class F>
Ideal<F> product(const Ideal<F>& a, const Ideal<F>& b) {
  detail::same_ring(a, b);
  std::vector<Polynomial<F>> g;
  for (const auto& p : a.generators()) {
    for (const auto& q : b.generators()) g.push_back(p * q.reorder(a.ring()));
  }
  return Ideal<F>(a.ring(), std::move(g), a.options());
}

/// I^k by iterated products; I^0 is the unit ideal. Monomial generators of
/// the result are deduplicated.
template <class F>
Ideal<F> power(const Ideal<F>& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative ideal power");
  Ideal<F> acc = Ideal<F>::unit(a.ring());
  for (int i = 0; i < k; ++i) {
    std::vector<Polynomial<F>> g;
    for (const auto& p : acc.generators()) {
      for (const auto& q : a.generators()) {
        auto pq = p * q;
        if (std::find(g.begin(), g.end(), pq) == g.end()) g.push_back(pq);
      }
    }
    acc = Ideal<F>(a.ring(), std::move(g), a.options());
  }
  return acc;
}

/// Every generator of b lies in a.
template <class F>
bool contains(const Ideal<F>& a, const Ideal<F>& b) {
  detail::same_ring(a, b);
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

/// Equality through identical reduced bases in a's order.
template <class F>
bool equals(const Ideal<F>& a, const Ideal<F>& b) {
  detail::same_ring(a, b);
  const auto& ga = a.groebner();
  const auto& gb = b.groebner(a.ring()->order());
  if (ga.generators.size() != gb.generators.size()) return false;
  for (std::size_t i = 0; i < ga.generators.size(); ++i) {
    if (!(ga.generators[i] == gb.generators[i].reorder(ga.ring))) return false;
  }
  return true;
}

/// a ∩ b as the t-free part of t·a + (1-t)·b.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  detail::same_ring(a, b);
  const auto& r = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>::zero(r);
  auto tname = fresh_variable(*r, "t");
  auto rt = extend_ring(*r, tname, true, TermOrder::block(1));
  std::vector<int> shift;
  for (std::size_t i = 0; i < r->nvars(); ++i) shift.push_back(static_cast<int>(i) + 1);
  auto t = Polynomial<F>::variable(rt, 0);
  auto one_minus_t = Polynomial<F>::constant(rt, rt->field().one()) - t;
  std::vector<Polynomial<F>> g;
  for (const auto& p : a.generators()) g.push_back(t * p.rename(rt, shift));
  for (const auto& p : b.generators()) g.push_back(one_minus_t * p.rename(rt, shift));
  return Ideal<F>(r, eliminate<F>(g, {0}, r, a.options()), a.options());
}

/// a : (g), read off from a ∩ (g).
template <class F>
Ideal<F> quotient(const Ideal<F>& a, const Polynomial<F>& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroColon, "colon by the zero ideal");
  auto gg = g.reorder(a.ring());
  if (gg.is_constant()) return a;
  auto meet = intersect(a, Ideal<F>(a.ring(), {gg}, a.options()));
  std::vector<Polynomial<F>> q;
  for (const auto& p : meet.generators()) q.push_back(divide_exact(p, gg));
  if (q.empty()) return Ideal<F>::zero(a.ring());
  return Ideal<F>(a.ring(), std::move(q), a.options());
}

/// a : b as the intersection of a : (g) over the generators of b, in order.
template <class F>
Ideal<F> quotient(const Ideal<F>& a, const Ideal<F>& b) {
  detail::same_ring(a, b);
  if (b.is_zero()) throw Error(ErrorKind::ZeroColon, "colon by the zero ideal");
  std::optional<Ideal<F>> acc;
  for (const auto& g : b.generators()) {
    auto q = quotient(a, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

/// a : f^∞ by repeated colon until the reduced basis stops changing.
template <class F>
Ideal<F> saturate(const Ideal<F>& a, const Polynomial<F>& f, int max_iterations = 64) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroColon, "saturation by zero");
  Ideal<F> cur = a;
  for (int i = 0; i < max_iterations; ++i) {
    Ideal<F> next = quotient(cur, f);
    if (equals(next, cur)) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorKind::BudgetExceeded, "saturation did not stabilize in " + std::to_string(max_iterations) + " steps");
}

/// Monomials not divisible by any of `leads`, provided every variable has a
/// pure power among them; nullopt otherwise (infinitely many).
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars);

/// λ(S/I) = number of standard monomials of a degrevlex basis; nullopt when
/// the quotient is infinite dimensional.
template <class F>
std::optional<std::size_t> vector_space_dim(const Ideal<F>& a) {
  const auto& gb = a.groebner(TermOrder::degrevlex());
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(g.leading_monomial());
  if (gb.is_unit()) return 0;
  auto sm = standard_monomials(leads, a.ring()->nvars());
  if (!sm) return std::nullopt;
  return sm->size();
}

/// Smallest N ≤ bound with every degree-N monomial in J.
template <class F>
std::optional<int> min_power_of_max_ideal_in(const Ideal<F>& j, int bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be positive");
  const auto& gb = j.groebner(TermOrder::degrevlex());
  for (int n = 1; n <= bound; ++n) {
    bool all = true;
    for (const auto& m : monomials_of_degree(j.ring()->nvars(), n)) {
      if (!normal_form(Polynomial<F>::monomial(gb.ring, m), gb).is_zero()) {
        all = false;
        break;
      }
    }
    if (all) return n;
  }
  return std::nullopt;
}

}  // namespace lring
