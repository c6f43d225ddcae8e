#pragma once

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lring/groebner.hpp"
#include "lring/ideal.hpp"
#include "lring/rng.hpp"

namespace lring {

/// Sparse coordinate vector, sorted by index, no zero entries.
template <class E>
using SparseVector = std::vector<std::pair<int, E>>;

namespace detail {

/// a + c*b on sparse vectors.
template <class E>
SparseVector<E> axpy(const SparseVector<E>& a, const E& c, const SparseVector<E>& b) {
  SparseVector<E> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back({b[j].first, c * b[j].second});
      ++j;
    } else {
      E s = a[i].second + c * b[j].second;
      if (!s.is_zero()) r.push_back({a[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace detail

/// Basis of the kernel of the linear map whose k-th column is columns[k].
/// Returned vectors are combinations of column indices.
template <class E>
std::vector<SparseVector<E>> sparse_kernel(const std::vector<SparseVector<E>>& columns, const E& one) {
  struct Pivot {
    SparseVector<E> image;  // leading entry is 1 at the pivot coordinate
    SparseVector<E> comb;
  };
  std::unordered_map<int, Pivot> pivots;
  std::vector<SparseVector<E>> kernel;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    SparseVector<E> v = columns[k];
    SparseVector<E> comb{{static_cast<int>(k), one}};
    if (v.empty()) {
      kernel.push_back(comb);
      continue;
    }
    // Reduce until the leading coordinate has no pivot.
    for (;;) {
      if (v.empty()) break;
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      E c = -v.front().second;
      v = detail::axpy(v, c, it->second.image);
      comb = detail::axpy(comb, c, it->second.comb);
    }
    if (v.empty()) {
      kernel.push_back(std::move(comb));
      continue;
    }
    E inv = v.front().second.inverse();
    for (auto& e : v) e.second = e.second * inv;
    for (auto& e : comb) e.second = e.second * inv;
    int at = v.front().first;
    pivots.emplace(at, Pivot{std::move(v), std::move(comb)});
  }
  return kernel;
}

/// An ideal J of the polynomial ring known to contain n^bound (n = all
/// variables), stored through its reduced degrevlex basis and the monomial
/// basis of S/J. Lengths and memberships here equal the local ones.
template <class F>
class LocalIdeal {
 public:
  using Poly = Polynomial<F>;
  using E = typename F::Element;

  /// J = (gens) + n^bound.
  static LocalIdeal truncate(const std::vector<Poly>& gens, const RingPtr<F>& ring, int bound,
                             const GroebnerOptions& opts = {}) {
    if (bound < 1) throw Error(ErrorKind::InvalidArgument, "truncation bound must be positive");
    auto r = ring->with_order(TermOrder::degrevlex());
    std::vector<Poly> g;
    for (const auto& p : gens) g.push_back(p.reorder(r));
    GroebnerOptions o = opts;
    o.truncate_degree = bound;
    return LocalIdeal(r, bound, buchberger<F>(std::move(g), r, o), opts);
  }

  const RingPtr<F>& ring() const { return ring_; }
  int bound() const { return bound_; }
  const GroebnerBasis<F>& basis() const { return gb_; }
  const std::vector<Poly>& generators() const { return gb_.generators; }
  const std::vector<Monomial>& standard() const { return data_->standard; }
  std::size_t colength() const { return data_->standard.size(); }
  bool is_unit() const { return gb_.is_unit(); }
  const GroebnerOptions& options() const { return opts_; }

  Poly normal_form(const Poly& f) const { return lring::normal_form(f.reorder(ring_), gb_); }
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  /// o ⊆ this.
  bool contains(const LocalIdeal& o) const {
    for (const auto& g : o.generators()) {
      if (!contains(g)) return false;
    }
    return true;
  }
  bool operator==(const LocalIdeal& o) const {
    if (gb_.generators.size() != o.gb_.generators.size()) return false;
    for (std::size_t i = 0; i < gb_.generators.size(); ++i) {
      if (!(gb_.generators[i] == o.gb_.generators[i].reorder(ring_))) return false;
    }
    return true;
  }

  /// Coordinates of NF(m) in the standard monomial basis (memoized).
  const SparseVector<E>& monomial_coordinates(const Monomial& m) const {
    auto it = data_->nf.find(m);
    if (it != data_->nf.end()) return it->second;
    SparseVector<E> v;
    if (m.degree() < bound_) {
      auto p = lring::normal_form(Poly::monomial(ring_, m), gb_);
      for (const auto& t : p.terms()) v.push_back({data_->index.at(t.mono), t.coeff});
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return data_->nf.emplace(m, std::move(v)).first->second;
  }

  /// Coordinates of NF(m * g).
  SparseVector<E> coordinates(const Monomial& m, const Poly& g) const {
    SparseVector<E> acc;
    for (const auto& t : g.terms()) {
      const auto& v = monomial_coordinates(m * t.mono);
      if (!v.empty()) acc = detail::axpy(acc, t.coeff, v);
    }
    return acc;
  }

 private:
  struct Data {
    std::vector<Monomial> standard;
    std::unordered_map<Monomial, int, MonomialHash> index;
    std::unordered_map<Monomial, SparseVector<E>, MonomialHash> nf;
  };

  LocalIdeal(RingPtr<F> r, int bound, GroebnerBasis<F> gb, const GroebnerOptions& opts)
      : ring_(std::move(r)), bound_(bound), gb_(std::move(gb)), opts_(opts), data_(std::make_shared<Data>()) {
    std::vector<Monomial> leads;
    for (const auto& g : gb_.generators) leads.push_back(g.leading_monomial());
    auto sm = standard_monomials(leads, ring_->nvars());
    if (!sm) throw Error(ErrorKind::InternalInconsistency, "truncated ideal has infinite colength");
    data_->standard = std::move(*sm);
    for (std::size_t i = 0; i < data_->standard.size(); ++i) data_->index.emplace(data_->standard[i], static_cast<int>(i));
  }

  RingPtr<F> ring_;
  int bound_;
  GroebnerBasis<F> gb_;
  GroebnerOptions opts_;
  std::shared_ptr<Data> data_;
};

/// Candidate parameters of order one: the variables, their sum, then
/// seeded random combinations with coefficients in 1..7.
template <class F>
std::vector<Polynomial<F>> probe_linear_forms(const RingPtr<F>& ring, int random_count = 6) {
  std::vector<Polynomial<F>> out;
  std::size_t n = ring->nvars();
  for (std::size_t i = 0; i < n; ++i) out.push_back(Polynomial<F>::variable(ring, i));
  Polynomial<F> sum(ring);
  for (std::size_t i = 0; i < n; ++i) sum += Polynomial<F>::variable(ring, i);
  if (n > 1) out.push_back(sum);
  SplitMix64 rng(0x5eed);
  for (int k = 0; k < random_count; ++k) {
    Polynomial<F> l(ring);
    for (std::size_t i = 0; i < n; ++i) {
      l += Polynomial<F>::variable(ring, i).scaled(ring->field().from_integer(mpz_class(rng.uniform(1, 7))));
    }
    out.push_back(l);
  }
  return out;
}

namespace detail {

/// Least N with n^N ⊆ (gens), read off a global degrevlex basis computed
/// modulo a large prime (over Q) or directly (over F_p). Only a candidate:
/// an unlucky prime can make it wrong, so callers certify it.
template <class F>
std::optional<int> primary_exponent_hint(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring) {
  using K = PrimeField;
  std::uint32_t p = 2147483647u;
  if constexpr (!F::is_rational) p = ring->field().characteristic();
  auto r = Ring<K>::make(K(p), ring->variables(), TermOrder::degrevlex());
  std::vector<Polynomial<K>> g;
  for (const auto& f : gens) {
    std::vector<Term<K>> ts;
    for (const auto& t : f.terms()) {
      if constexpr (F::is_rational) {
        if (mpz_divisible_ui_p(t.coeff.den().get_mpz_t(), p)) return std::nullopt;
        ts.push_back({t.mono, r->field().from_fraction(t.coeff.num(), t.coeff.den())});
      } else {
        ts.push_back({t.mono, t.coeff});
      }
    }
    g.push_back(Polynomial<K>::from_terms(r, std::move(ts)));
  }
  auto gb = buchberger<K>(std::move(g), r);
  if (gb.is_unit()) return std::nullopt;
  std::vector<Monomial> leads;
  for (const auto& q : gb.generators) leads.push_back(q.leading_monomial());
  auto sm = standard_monomials(leads, r->nvars());
  if (!sm) return std::nullopt;
  // NF(m) for the degree-N monomials m with nonzero NF, as
  // NF(x_i m) = NF(x_i NF(m)).
  const std::size_t nv = r->nvars();
  std::unordered_map<Monomial, Polynomial<K>, MonomialHash> layer{{Monomial(nv), Polynomial<K>::constant(r, r->field().one())}};
  for (int n = 1; n <= static_cast<int>(sm->size()) + 1; ++n) {
    std::unordered_map<Monomial, Polynomial<K>, MonomialHash> next;
    for (const auto& [m, q] : layer) {
      for (std::size_t i = 0; i < nv; ++i) {
        auto x = Monomial::variable(nv, i);
        if (next.count(m * x)) continue;
        auto nf = normal_form(q.mul_term(x, r->field().one()), gb);
        if (!nf.is_zero()) next.emplace(m * x, std::move(nf));
      }
    }
    if (next.empty()) return n;
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

/// Contraction of J S_n for J = (gens): J + n^M for the least M with
/// λ(S/(J+n^M)) = λ(S/(J+n^{M+1})). At such M, n^M ⊆ J + n^{M+1}, hence
/// n^M ⊆ J S_n by Nakayama, and the length never grows again. M is searched
/// up to max_bound; past it, an n-primary J is still accepted at the N with
/// n^N ⊆ J suggested by a modular basis, once the same length test holds
/// at N over the true field. Otherwise throws NotArtinianLocally.
template <class F>
LocalIdeal<F> localize(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring, int max_bound = 20,
                       const GroebnerOptions& opts = {}) {
  auto cur = LocalIdeal<F>::truncate(gens, ring, 1, opts);
  for (int m = 1; m <= max_bound; ++m) {
    auto next = LocalIdeal<F>::truncate(gens, ring, m + 1, opts);
    if (next.colength() == cur.colength()) return cur;
    cur = std::move(next);
  }
  if (auto n = detail::primary_exponent_hint(gens, ring); n && *n > max_bound) {
    auto j = LocalIdeal<F>::truncate(gens, ring, *n, opts);
    if (LocalIdeal<F>::truncate(gens, ring, *n + 1, opts).colength() == j.colength()) return j;
  }
  throw Error(ErrorKind::NotArtinianLocally, "colength of J + n^M still growing at M = " + std::to_string(max_bound));
}

/// J + (extra) for J containing n^bound; the bound carries over.
template <class F>
LocalIdeal<F> add(const LocalIdeal<F>& j, const std::vector<Polynomial<F>>& extra) {
  auto g = j.generators();
  for (const auto& p : extra) g.push_back(p.reorder(j.ring()));
  return LocalIdeal<F>::truncate(g, j.ring(), j.bound(), j.options());
}

/// Polynomials p in the span of `basis` with p*g in Q for every (g, Q) pair.
template <class F>
std::vector<Polynomial<F>> solve_multipliers(const std::vector<Monomial>& basis,
                                             const std::vector<std::pair<Polynomial<F>, const LocalIdeal<F>*>>& conds,
                                             const RingPtr<F>& ring) {
  using E = typename F::Element;
  std::vector<int> offset;
  int total = 0;
  for (const auto& c : conds) {
    offset.push_back(total);
    total += static_cast<int>(c.second->colength());
  }
  std::vector<SparseVector<E>> columns;
  columns.reserve(basis.size());
  for (const auto& m : basis) {
    SparseVector<E> col;
    for (std::size_t k = 0; k < conds.size(); ++k) {
      for (auto& [i, v] : conds[k].second->coordinates(m, conds[k].first)) col.push_back({i + offset[k], v});
    }
    columns.push_back(std::move(col));
  }
  std::vector<Polynomial<F>> out;
  for (const auto& kv : sparse_kernel(columns, ring->field().one())) {
    std::vector<Term<F>> ts;
    for (const auto& [i, c] : kv) ts.push_back({basis[static_cast<std::size_t>(i)], c});
    out.push_back(Polynomial<F>::from_terms(ring, std::move(ts)));
  }
  return out;
}

/// Q : (gs) by linear algebra on S/Q.
template <class F>
LocalIdeal<F> colon(const LocalIdeal<F>& q, const std::vector<Polynomial<F>>& gs) {
  if (gs.empty()) throw Error(ErrorKind::ZeroColon, "colon by the zero ideal");
  std::vector<std::pair<Polynomial<F>, const LocalIdeal<F>*>> conds;
  for (const auto& g : gs) {
    if (!g.is_zero()) conds.push_back({g.reorder(q.ring()), &q});
  }
  if (conds.empty()) throw Error(ErrorKind::ZeroColon, "colon by the zero ideal");
  auto extra = solve_multipliers<F>(q.standard(), conds, q.ring());
  if (extra.empty()) return q;
  return add(q, extra);
}

/// Q : n^k.
template <class F>
LocalIdeal<F> colon_max_power(const LocalIdeal<F>& q, int k) {
  std::vector<Polynomial<F>> vars;
  for (std::size_t i = 0; i < q.ring()->nvars(); ++i) vars.push_back(Polynomial<F>::variable(q.ring(), i));
  LocalIdeal<F> cur = q;
  for (int i = 0; i < k; ++i) cur = colon(cur, vars);
  return cur;
}

/// A ∩ B over the monomials of degree below max(bound A, bound B).
template <class F>
LocalIdeal<F> intersect(const LocalIdeal<F>& a, const LocalIdeal<F>& b) {
  int m = std::max(a.bound(), b.bound());
  std::vector<Monomial> basis;
  for (int d = 0; d < m; ++d) {
    for (auto& mono : monomials_of_degree(a.ring()->nvars(), d)) basis.push_back(mono);
  }
  auto one = Polynomial<F>::constant(a.ring(), a.ring()->field().one());
  auto gens = solve_multipliers<F>(basis, {{one, &a}, {one, &b}}, a.ring());
  return LocalIdeal<F>::truncate(gens, a.ring(), m, a.options());
}

}  // namespace lring
