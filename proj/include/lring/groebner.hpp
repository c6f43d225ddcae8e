#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lring/polynomial.hpp"

namespace lring {

struct GroebnerOptions {
  std::size_t max_pairs = 2'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
  /// When positive, computes a basis of (gens) + n^d where n is the ideal of
  /// all variables: the degree-d monomials are added as generators and
  /// every term of degree >= d is dropped. Requires a degree-compatible order.
  int truncate_degree = 0;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis = 0;
};

/// Reduced Groebner basis under the term order of its ring: monic
/// generators, sorted ascending by leading monomial, no term of any element
/// divisible by another element's leading monomial. Empty for the zero ideal.
template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> generators;
  bool reduced = false;
  GroebnerStats stats;

  const TermOrder& order() const { return ring->order(); }
  bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }
};

namespace detail {

inline mpz_class integer_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Scales p to an integer primitive polynomial with positive leading
/// coefficient (over Q) or to a monic polynomial (over F_p).
template <class F>
Polynomial<F> normalize_for_reduction(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  if constexpr (F::is_rational) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.den().get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.num().get_mpz_t());
    }
    if (p.leading_coeff().sign() < 0) num_gcd = -num_gcd;
    if (den_lcm == 1 && num_gcd == 1) return p;
    return p.scaled(Rational(den_lcm, num_gcd));
  } else {
    return p.monic();
  }
}

/// One elimination of the leading term of `p` by g (LT(g) | LT(p)).
/// Over Q with integer data this is fraction free, p <- a' p - c' (m g), and
/// the returned a' must be applied to whatever was already split off p.
template <class F>
std::optional<typename F::Element> reduction_step(Polynomial<F>& p, const Polynomial<F>& g) {
  const auto& lt = p.leading_term();
  Monomial m = lt.mono / g.leading_monomial();
  if constexpr (F::is_rational) {
    const Rational& a = g.leading_coeff();
    const Rational& c = lt.coeff;
    if (a.is_integer() && c.is_integer()) {
      mpz_class gg = integer_gcd(a.num(), c.num());
      Rational pa(mpz_class(a.num() / gg)), pc(mpz_class(c.num() / gg));
      if (pa.sign() < 0) {
        pa = -pa;
        pc = -pc;
      }
      Polynomial<F> sub = g.mul_term(m, pc);
      if (pa.is_one()) {
        p -= sub;
        return std::nullopt;
      }
      p = p.scaled(pa) - sub;
      return pa;
    }
    p -= g.mul_term(m, c / a);
  } else {
    p -= g.mul_term(m, lt.coeff / g.leading_coeff());
  }
  return std::nullopt;
}

template <class F>
const Polynomial<F>* find_reducer(const Monomial& m, std::span<const Polynomial<F>* const> basis) {
  for (const auto* g : basis) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

/// Full reduction of p modulo `basis`, up to a nonzero scalar factor. With
/// truncate > 0, terms of degree >= truncate are dropped as they appear.
template <class F>
Polynomial<F> reduce_scaled(Polynomial<F> p, std::span<const Polynomial<F>* const> basis, int truncate = 0) {
  std::vector<Term<F>> done;
  int steps = 0;
  if (truncate > 0) p = p.truncated(truncate);
  while (!p.is_zero()) {
    const auto* g = find_reducer<F>(p.leading_monomial(), basis);
    if (!g) {
      done.push_back(p.leading_term());
      p = Polynomial<F>::from_sorted_terms(p.ring(), {p.terms().begin() + 1, p.terms().end()});
      continue;
    }
    if (auto scale = reduction_step(p, *g)) {
      for (auto& t : done) t.coeff *= *scale;
    }
    if (truncate > 0) p = p.truncated(truncate);
    if constexpr (F::is_rational) {
      if (++steps % 8 == 0 && !p.is_zero()) {
        // Divide out the common content on long reductions.
        mpz_class c = 0;
        for (const auto& t : done) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.num().get_mpz_t());
        for (const auto& t : p.terms()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.num().get_mpz_t());
        bool integral = std::all_of(done.begin(), done.end(), [](const Term<F>& t) { return t.coeff.is_integer(); }) &&
                        std::all_of(p.terms().begin(), p.terms().end(), [](const Term<F>& t) { return t.coeff.is_integer(); });
        if (integral && c > 1) {
          Rational inv(mpz_class(1), c);
          p = p.scaled(inv);
          for (auto& t : done) t.coeff *= inv;
        }
      }
    }
  }
  return Polynomial<F>::from_sorted_terms(p.ring(), std::move(done));
}

}  // namespace detail

/// Remainder of f on division by `divisors` (in their list order, exact
/// field arithmetic): no term of the result is divisible by any divisor's
/// leading monomial, and f - result lies in the ideal they generate.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors) {
  for (const auto& g : divisors) {
    if (!g.ring()->same_as(*f.ring())) throw Error(ErrorKind::RingMismatch, "normal_form across rings");
  }
  Polynomial<F> p = f;
  std::vector<Term<F>> rest;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    const Polynomial<F>* red = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red) {
      p -= red->mul_term(lt.mono / red->leading_monomial(), lt.coeff / red->leading_coeff());
    } else {
      rest.push_back(lt);
      p = Polynomial<F>::from_sorted_terms(p.ring(), {p.terms().begin() + 1, p.terms().end()});
    }
  }
  return Polynomial<F>::from_sorted_terms(f.ring(), std::move(rest));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form<F>(f, std::span<const Polynomial<F>>(gb.generators));
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), g.leading_coeff()) -
         g.mul_term(l / g.leading_monomial(), f.leading_coeff());
}

namespace detail {

template <class F>
class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr<F> ring, const GroebnerOptions& opts)
      : ring_(std::move(ring)), opts_(opts), queue_(PairLess{&ring_->order(), opts.truncate_degree == 0 && !ring_->order().is_degree_compatible()}) {
    if (opts_.truncate_degree > 0 && !ring_->order().is_degree_compatible()) {
      throw Error(ErrorKind::InvalidArgument, "degree truncation needs a degree-compatible order");
    }
    start_ = std::chrono::steady_clock::now();
  }

  GroebnerBasis<F> run(std::vector<Polynomial<F>> gens) {
    std::vector<Polynomial<F>> input;
    for (auto& g : gens) {
      if (!g.ring()->same_as(*ring_)) throw Error(ErrorKind::RingMismatch, "generators in different rings");
      if (opts_.truncate_degree > 0) g = g.truncated(opts_.truncate_degree);
      if (!g.is_zero()) input.push_back(normalize_for_reduction(g));
    }
    if (opts_.truncate_degree > 0) {
      for (auto& m : monomials_of_degree(ring_->nvars(), opts_.truncate_degree)) {
        input.push_back(Polynomial<F>::monomial(ring_, m));
      }
    }
    for (const auto& g : input) {
      if (g.is_constant()) return unit_basis();
    }
    // Insert small leading terms first; ties keep input order.
    std::stable_sort(input.begin(), input.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
      return ring_->order().less(a.leading_monomial(), b.leading_monomial());
    });
    for (auto& g : input) {
      auto sugar = g.total_degree();
      update(std::move(g), sugar);
    }

    while (!queue_.empty()) {
      Pair pr = *queue_.begin();
      queue_.erase(queue_.begin());
      check_budget();
      ++stats_.pairs_processed;
      const auto& f = basis_[pr.i];
      const auto& g = basis_[pr.j];
      Polynomial<F> s = s_polynomial(f, g);
      if (opts_.truncate_degree > 0) s = s.truncated(opts_.truncate_degree);
      Polynomial<F> h = reduce(std::move(s));
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.is_constant()) return unit_basis();
      update(h.monic(), pr.sugar);
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t sugar;
  };

  // Sugar first for lex and block orders. Degree orders and truncated runs
  // use the normal strategy (lcm order alone), which avoids severe
  // coefficient growth over Q.
  struct PairLess {
    const TermOrder* ord;
    bool sugar;
    bool operator()(const Pair& a, const Pair& b) const {
      if (sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = ord->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  void check_budget() const {
    if (stats_.pairs_processed >= opts_.max_pairs) {
      throw Error(ErrorKind::BudgetExceeded, "pair budget " + std::to_string(opts_.max_pairs) + " exhausted; " + diagnostics());
    }
    if (opts_.time_budget && (stats_.pairs_processed & 15u) == 0) {
      auto elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed > *opts_.time_budget) {
        throw Error(ErrorKind::BudgetExceeded, "time budget exhausted; " + diagnostics());
      }
    }
  }

  std::string diagnostics() const {
    return "pairs processed " + std::to_string(stats_.pairs_processed) + ", pairs queued " +
           std::to_string(queue_.size()) + ", basis size " + std::to_string(active_.size());
  }

  Polynomial<F> reduce(Polynomial<F> p) {
    std::vector<const Polynomial<F>*> act;
    act.reserve(active_.size());
    for (auto idx : active_) act.push_back(&basis_[idx]);
    return reduce_scaled<F>(std::move(p), act, opts_.truncate_degree);
  }

  std::int64_t sugar_of(std::size_t i, const Monomial& l) const {
    return sugar_[i] + l.degree() - basis_[i].leading_monomial().degree();
  }

  bool is_term(std::size_t i) const { return basis_[i].size() == 1; }

  // Gebauer-Moeller update with the new element h.
  void update(Polynomial<F> h, std::int64_t sugar) {
    std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    const Monomial& lh = basis_[hi].leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> c;
    for (auto g : active_) {
      const Monomial& lg = basis_[g].leading_monomial();
      c.push_back({g, lcm(lh, lg), lh.coprime_with(lg)});
    }
    // Chain criterion among the new pairs: drop (h,g1) if another pair
    // (h,g2) still under consideration has lcm dividing lcm(h,g1).
    std::vector<bool> kept(c.size(), false);
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < c.size() && keep; ++b) {
          if (b == a) continue;
          bool considered = (b > a) || kept[b];
          if (considered && c[b].lcm.divides(c[a].lcm)) keep = false;
        }
      }
      kept[a] = keep;
    }
    // Old pairs whose lcm is a proper multiple through h are redundant.
    for (auto it = queue_.begin(); it != queue_.end();) {
      const Pair& p = *it;
      if (lh.divides(p.lcm) && lcm(basis_[p.i].leading_monomial(), lh) != p.lcm &&
          lcm(basis_[p.j].leading_monomial(), lh) != p.lcm) {
        it = queue_.erase(it);
        ++stats_.pairs_skipped;
      } else {
        ++it;
      }
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (!kept[a] || c[a].coprime) {
        ++stats_.pairs_skipped;
        continue;
      }
      if (is_term(hi) && is_term(c[a].g)) {
        ++stats_.pairs_skipped;
        continue;
      }
      std::size_t g = c[a].g;
      queue_.insert(Pair{g, hi, c[a].lcm, std::max(sugar_of(g, c[a].lcm), sugar_of(hi, c[a].lcm))});
    }
    std::vector<std::size_t> next;
    for (auto g : active_) {
      if (!lh.divides(basis_[g].leading_monomial())) next.push_back(g);
    }
    next.push_back(hi);
    active_ = std::move(next);
    // Keep the active tails reduced by h: coefficients then stay those of a
    // reduced basis instead of compounding through unreduced tails.
    for (auto g : active_) {
      if (g == hi) continue;
      auto& p = basis_[g];
      bool hit = std::any_of(p.terms().begin() + 1, p.terms().end(),
                             [&](const Term<F>& t) { return lh.divides(t.mono); });
      if (hit) p = tail_reduced(p);
    }
    stats_.max_basis = std::max(stats_.max_basis, active_.size());
  }

  // LT(p) plus the normal form of its tail modulo the active set, monic.
  Polynomial<F> tail_reduced(const Polynomial<F>& p) const {
    std::vector<Polynomial<F>> div;
    for (auto a : active_) {
      if (&basis_[a] != &p) div.push_back(basis_[a]);
    }
    const auto& lt = p.leading_term();
    auto tail = Polynomial<F>::from_sorted_terms(ring_, {p.terms().begin() + 1, p.terms().end()});
    auto r = Polynomial<F>::monomial(ring_, lt.mono, lt.coeff) + normal_form<F>(tail, div);
    if (opts_.truncate_degree > 0) r = r.truncated(opts_.truncate_degree);
    return r.monic();
  }

  GroebnerBasis<F> unit_basis() {
    GroebnerBasis<F> gb{ring_, {Polynomial<F>::constant(ring_, ring_->field().one())}, true, stats_};
    return gb;
  }

  GroebnerBasis<F> finish() {
    // Minimalize.
    std::vector<std::size_t> minimal;
    for (auto i : active_) {
      bool redundant = false;
      for (auto j : active_) {
        if (j == i) continue;
        const auto& li = basis_[i].leading_monomial();
        const auto& lj = basis_[j].leading_monomial();
        if (lj.divides(li) && (lj != li || j < i)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(i);
    }
    std::vector<Polynomial<F>> out;
    for (auto i : minimal) out.push_back(basis_[i]);
    std::sort(out.begin(), out.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
      return ring_->order().less(a.leading_monomial(), b.leading_monomial());
    });
    // Interreduce tails against the other elements, then make monic.
    for (std::size_t k = 0; k < out.size(); ++k) {
      std::vector<const Polynomial<F>*> others;
      for (std::size_t l = 0; l < out.size(); ++l) {
        if (l != k) others.push_back(&out[l]);
      }
      const auto& lt = out[k].leading_term();
      Polynomial<F> tail = Polynomial<F>::from_sorted_terms(ring_, {out[k].terms().begin() + 1, out[k].terms().end()});
      Polynomial<F> head = Polynomial<F>::monomial(ring_, lt.mono, lt.coeff);
      // Exact normal form keeps head and tail on the same scale.
      std::vector<Polynomial<F>> div;
      for (auto* o : others) div.push_back(*o);
      out[k] = (head + normal_form<F>(tail, div)).monic();
    }
    return GroebnerBasis<F>{ring_, std::move(out), true, stats_};
  }

  RingPtr<F> ring_;
  GroebnerOptions opts_;
  std::vector<Polynomial<F>> basis_;
  std::vector<std::int64_t> sugar_;
  std::vector<std::size_t> active_;
  std::set<Pair, PairLess> queue_;
  GroebnerStats stats_;
  std::chrono::steady_clock::time_point start_;
};

/// Reduced basis of (gens) + n^d, n the ideal of all variables, by linear
/// algebra on S/n^d: the span of all m*g is closed under the variables and
/// kept in fully reduced echelon form. Every row is then canonical for the
/// span it belongs to, which bounds coefficient growth over Q (Buchberger's
/// intermediate remainders are not canonical and can grow without bound).
template <class F>
GroebnerBasis<F> truncated_basis(std::vector<Polynomial<F>> gens, const RingPtr<F>& ring, const GroebnerOptions& opts) {
  using P = Polynomial<F>;
  const int d = opts.truncate_degree;
  const auto& ord = ring->order();
  if (!ord.is_degree_compatible()) {
    throw Error(ErrorKind::InvalidArgument, "degree truncation needs a degree-compatible order");
  }
  const std::size_t nv = ring->nvars();
  auto start = std::chrono::steady_clock::now();
  GroebnerStats stats;
  auto coeff_at = [&](const P& p, const Monomial& m) -> const typename F::Element* {
    const auto& ts = p.terms();
    auto it = std::lower_bound(ts.begin(), ts.end(), m, [&](const Term<F>& t, const Monomial& x) {
      return ord.compare(t.mono, x) > 0;
    });
    return it != ts.end() && it->mono == m ? &it->coeff : nullptr;
  };

  std::vector<P> rows;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot;
  std::deque<P> queue;
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw Error(ErrorKind::RingMismatch, "generators in different rings");
    auto t = g.truncated(d);
    if (!t.is_zero()) queue.push_back(std::move(t));
  }
  while (!queue.empty()) {
    P v = std::move(queue.front());
    queue.pop_front();
    if (++stats.pairs_processed >= opts.max_pairs) {
      throw Error(ErrorKind::BudgetExceeded, "budget of " + std::to_string(opts.max_pairs) + " rows exhausted");
    }
    if (opts.time_budget && (stats.pairs_processed & 15u) == 0 &&
        std::chrono::steady_clock::now() - start > *opts.time_budget) {
      throw Error(ErrorKind::BudgetExceeded, "time budget exhausted after " + std::to_string(stats.pairs_processed) + " rows");
    }
    // Rows hold their pivot and otherwise only non-pivot monomials, so one
    // pass clears every pivot of v.
    P acc = v;
    for (const auto& t : v.terms()) {
      auto it = pivot.find(t.mono);
      if (it != pivot.end()) acc -= rows[it->second].scaled(t.coeff);
    }
    if (acc.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    acc = acc.monic();
    const Monomial u = acc.leading_monomial();
    if (u.is_one()) {
      return GroebnerBasis<F>{ring, {P::constant(ring, ring->field().one())}, true, stats};
    }
    for (auto& r : rows) {
      if (const auto* c = coeff_at(r, u)) r -= acc.scaled(*c);
    }
    pivot.emplace(u, rows.size());
    rows.push_back(acc);
    stats.max_basis = std::max(stats.max_basis, rows.size());
    for (std::size_t i = 0; i < nv; ++i) {
      auto w = acc.mul_term(Monomial::variable(nv, i), ring->field().one()).truncated(d);
      if (!w.is_zero()) queue.push_back(std::move(w));
    }
  }

  // Minimal generators of the leading ideal: pivots, then degree-d monomials.
  auto has_pivot_divisor = [&](const Monomial& m) {
    for (std::size_t i = 0; i < nv; ++i) {
      if (m[i] > 0 && pivot.count(m / Monomial::variable(nv, i))) return true;
    }
    return false;
  };
  std::vector<P> out;
  for (const auto& r : rows) {
    if (!has_pivot_divisor(r.leading_monomial())) out.push_back(r);
  }
  for (auto& m : monomials_of_degree(nv, d)) {
    if (!has_pivot_divisor(m)) out.push_back(P::monomial(ring, m));
  }
  std::sort(out.begin(), out.end(),
            [&](const P& a, const P& b) { return ord.less(a.leading_monomial(), b.leading_monomial()); });
  return GroebnerBasis<F>{ring, std::move(out), true, stats};
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` under the term
/// order of their (common) ring. Sugar pair selection, Gebauer-Moeller
/// criteria, content removal over Q. Throws BudgetExceeded when the pair or
/// time budget runs out. An empty generator list needs `ring`.
template <class F>
GroebnerBasis<F> buchberger(std::vector<Polynomial<F>> gens, RingPtr<F> ring, const GroebnerOptions& opts = {}) {
  if (opts.truncate_degree > 0) return detail::truncated_basis<F>(std::move(gens), ring, opts);
  return detail::BuchbergerRun<F>(std::move(ring), opts).run(std::move(gens));
}

template <class F>
GroebnerBasis<F> buchberger(std::vector<Polynomial<F>> gens, const GroebnerOptions& opts = {}) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list needs an explicit ring");
  RingPtr<F> ring = gens.front().ring();
  return buchberger<F>(std::move(gens), std::move(ring), opts);
}

/// True iff every S-polynomial of the basis reduces to zero modulo it.
template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
  const auto& g = gb.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j]), gb).is_zero()) return false;
    }
  }
  return true;
}

/// Contraction of (gens) to the variables not listed in `drop`, via a block
/// order with the dropped variables first. The result lives in `target`,
/// whose variables must be the kept ones in their original relative order.
template <class F>
std::vector<Polynomial<F>> eliminate(const std::vector<Polynomial<F>>& gens, const std::vector<std::size_t>& drop,
                                     const RingPtr<F>& target, const GroebnerOptions& opts = {}) {
  if (gens.empty()) return {};
  const auto& src = *gens.front().ring();
  std::vector<bool> dropped(src.nvars(), false);
  for (auto d : drop) {
    if (d >= src.nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    dropped[d] = true;
  }
  std::vector<std::string> names;
  std::vector<int> to_block(src.nvars());
  std::size_t nd = 0;
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (dropped[i]) {
      to_block[i] = static_cast<int>(names.size());
      names.push_back(src.variables()[i]);
      ++nd;
    }
  }
  std::vector<int> to_target(src.nvars(), -1);
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (!dropped[i]) {
      to_block[i] = static_cast<int>(names.size());
      to_target[i] = static_cast<int>(names.size() - nd);
      names.push_back(src.variables()[i]);
    }
  }
  if (target->nvars() != src.nvars() - nd) throw Error(ErrorKind::RingMismatch, "target ring has wrong variable count");
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (!dropped[i] && target->variables()[static_cast<std::size_t>(to_target[i])] != src.variables()[i]) {
      throw Error(ErrorKind::RingMismatch, "target ring variables differ from the kept variables");
    }
  }
  auto block_ring = Ring<F>::make(src.field(), names, TermOrder::block(nd));
  std::vector<Polynomial<F>> mapped;
  for (const auto& g : gens) mapped.push_back(g.rename(block_ring, to_block));
  auto gb = buchberger<F>(std::move(mapped), block_ring, opts);
  // Back-map from block ring positions to target positions.
  std::vector<int> back(block_ring->nvars(), -1);
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (!dropped[i]) back[static_cast<std::size_t>(to_block[i])] = to_target[i];
  }
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.generators) {
    bool free = true;
    for (std::size_t v = 0; v < nd; ++v) free = free && !g.involves(v);
    if (free) out.push_back(g.rename(target, back));
  }
  return out;
}

}  // namespace lring
