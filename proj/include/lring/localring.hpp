#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lring/artinian.hpp"
#include "lring/ideal.hpp"
#include "lring/monomial_ideal.hpp"

namespace lring {

struct LocalBounds {
  /// Largest M tried when stabilizing λ(S/(J+n^M)).
  int stabilization = 20;
  int index_max = 10;
  int loewy = 12;
  int ord = 12;
};

struct HilbertData {
  std::vector<std::int64_t> values;
  std::optional<int> stabilized_at;
  std::optional<std::int64_t> multiplicity;
  int window = 3;
};

struct OrderResult {
  int value = 0;
  /// f ∈ I; value is then the bound.
  bool inside_ideal = false;
  /// f ∈ I + n^bound but not in I: the order is at least value.
  bool capped = false;
};

struct DeltaBreakdown {
  bool ii = false;
  bool iii = false;
  bool iv = false;
  bool verdict = false;
};

/// R = (S/I) localized at n, S = k[vars], n = (vars). Lengths are computed in
/// S on n-primary representatives. `contraction_assumed` records the caller's
/// promise that I equals the contraction of I S_n; it is not verified.
template <class F>
class LocalRing {
 public:
  using Poly = Polynomial<F>;

  LocalRing(RingPtr<F> ring, std::vector<Poly> gens, bool contraction_assumed = true, LocalBounds bounds = {},
            GroebnerOptions opts = {})
      : ring_(std::move(ring)),
        ideal_(ring_, std::move(gens), opts),
        contraction_assumed_(contraction_assumed),
        bounds_(bounds),
        opts_(opts),
        cache_(std::make_shared<Cache>()) {
    for (const auto& g : ideal_.generators()) {
      for (const auto& t : g.terms()) {
        if (t.mono.is_one()) throw Error(ErrorKind::InvalidArgument, "generator " + g.str() + " has a constant term");
      }
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const Ideal<F>& ideal() const { return ideal_; }
  const std::vector<Poly>& generators() const { return ideal_.generators(); }
  bool contraction_assumed() const { return contraction_assumed_; }
  const LocalBounds& bounds() const { return bounds_; }
  const GroebnerOptions& options() const { return opts_; }

  /// I + n^d, memoized.
  LocalIdeal<F> truncation(int d) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->trunc.find(d);
    if (it != cache_->trunc.end()) return it->second;
    auto t = LocalIdeal<F>::truncate(generators(), ring_, d, opts_);
    cache_->trunc.emplace(d, t);
    return t;
  }

  /// λ(S/(I+n^d)).
  std::int64_t truncated_colength(int d) const {
    if (d <= 0) return 0;
    return static_cast<std::int64_t>(truncation(d).colength());
  }

  /// Contraction of (I + extra) S_n.
  LocalIdeal<F> localize_with(const std::vector<Poly>& extra) const {
    auto g = generators();
    for (const auto& p : extra) g.push_back(p.reorder(ring_));
    return localize<F>(g, ring_, bounds_.stabilization, opts_);
  }

  HilbertData hilbert_function(int max_degree, int window = 3) const {
    if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
    if (window < 1) throw Error(ErrorKind::InvalidArgument, "window must be positive");
    HilbertData h;
    h.window = window;
    for (int d = 0; d <= max_degree; ++d) h.values.push_back(truncated_colength(d + 1) - truncated_colength(d));
    int s = max_degree;
    while (s > 0 && h.values[static_cast<std::size_t>(s - 1)] == h.values.back()) --s;
    if (max_degree - s + 1 >= window) {
      h.stabilized_at = s;
      h.multiplicity = h.values.back();
    }
    return h;
  }

  /// Least λ(R/lR) over the probe linear forms of order one with finite
  /// colength; an upper bound for e(R).
  std::optional<std::int64_t> probe_colength() const {
    std::lock_guard<std::mutex> lock(cache_->probe_mu);
    if (cache_->probe_done) return cache_->probe;
    for (const auto& l : probe_linear_forms(ring_)) {
      if (ord(l).value != 1) continue;
      try {
        auto c = colength(l);
        if (!cache_->probe || c < *cache_->probe) cache_->probe = c;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotArtinianLocally) throw;
      }
    }
    cache_->probe_done = true;
    return cache_->probe;
  }

  /// e(R). In a one-dimensional Cohen-Macaulay ring HF(n) ≤ e ≤ λ(R/lR)
  /// for every parameter l of order one, with equality for superficial l;
  /// the value is returned once HF meets the least probe colength. Without a
  /// usable probe, HF constant on `window` consecutive degrees is accepted.
  std::int64_t multiplicity(int window = 3, int max_degree = 30) const {
    auto cap = probe_colength();
    std::int64_t prev = -1;
    int run = 0;
    for (int d = 0; d <= max_degree; ++d) {
      std::int64_t v = truncated_colength(d + 1) - truncated_colength(d);
      if (cap) {
        if (v == *cap) return v;
        if (v > *cap) {
          throw Error(ErrorKind::InternalInconsistency, "HF(" + std::to_string(d) + ") = " + std::to_string(v) +
                                                            " exceeds the colength bound " + std::to_string(*cap));
        }
        continue;
      }
      run = (v == prev) ? run + 1 : 1;
      prev = v;
      if (run >= window) return v;
    }
    throw Error(ErrorKind::NoStabilization, "Hilbert function did not stabilize up to degree " + std::to_string(max_degree));
  }

  OrderResult ord(const Poly& f, std::optional<int> bound = std::nullopt) const {
    int b = bound.value_or(bounds_.ord);
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "order of zero");
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "order bound must be positive");
    for (int d = 1; d <= b; ++d) {
      if (!truncation(d).contains(f)) return {d - 1, false, false};
    }
    if (ideal_.contains(f)) return {b, true, false};
    return {b, false, true};
  }

  bool is_nonzerodivisor(const Poly& f) const {
    if (f.is_zero()) return false;
    auto q = quotient(ideal_, f.reorder(ring_));
    return equals(q, ideal_);
  }

  /// λ(R/fR).
  std::int64_t colength(const Poly& f) const { return static_cast<std::int64_t>(localize_with({f}).colength()); }

  /// λ(R/fR) = ord(f)·e(R).
  bool is_superficial(const Poly& f) const {
    auto o = ord(f);
    if (o.inside_ideal || o.capped) return false;
    return colength(f) == o.value * multiplicity();
  }

  /// Least N ≤ bound with n^N ⊆ I + (f) locally.
  int loewy_length_mod(const Poly& f, std::optional<int> bound = std::nullopt) const {
    int b = bound.value_or(bounds_.loewy);
    auto j = localize_with({f});
    for (int n = 1; n <= b; ++n) {
      if (n >= j.bound() || contains_max_power(j, n)) return n;
    }
    throw Error(ErrorKind::NotFound, "no power of the maximal ideal up to " + std::to_string(b) + " lies in I + (f)");
  }

  /// ((I + x·n^n) : n) lifted to S, as a contracted n-primary ideal.
  LocalIdeal<F> delta_colon(const Poly& x, int n) const {
    std::vector<Poly> extra;
    for (const auto& m : monomials_of_degree(ring_->nvars(), n)) extra.push_back(x.reorder(ring_) * Poly::monomial(ring_, m));
    return colon_max_power(localize_with(extra), 1);
  }

  /// (I + (x^n)) : n^n.
  LocalIdeal<F> delta_c(const Poly& x, int n) const {
    return colon_max_power(localize_with({x.reorder(ring_).pow(static_cast<unsigned>(n))}), n);
  }

  /// Evaluates the three equivalent conditions for δ(R/m^n) = 1 and throws
  /// InternalInconsistency if they disagree.
  DeltaBreakdown delta_one_test(const Poly& x, int n) const {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    auto xr = x.reorder(ring_);
    auto b = localize_with({xr});
    auto a = delta_colon(xr, n);
    DeltaBreakdown r;
    r.iii = b.contains(a);
    auto c = delta_c(xr, n);
    r.ii = times_max_ideal(c).contains(xr.pow(static_cast<unsigned>(n)));
    auto socle = colon_max_power(b, 1);
    r.iv = b.contains(intersect(socle, a));
    if (r.ii != r.iii || r.iii != r.iv) {
      throw Error(ErrorKind::InternalInconsistency, "delta conditions disagree at n = " + std::to_string(n) +
                                                        ": (ii)=" + std::to_string(r.ii) + " (iii)=" +
                                                        std::to_string(r.iii) + " (iv)=" + std::to_string(r.iv));
    }
    r.verdict = r.iii;
    return r;
  }

  /// 1 + μ(C/(x^n)) − μ(C) with C = (x^n) : m^n.
  int delta_via_mu(const Poly& x, int n) const {
    auto xr = x.reorder(ring_);
    auto c = delta_c(xr, n);
    auto nc = times_max_ideal(c);
    auto ncx = add(nc, {xr.pow(static_cast<unsigned>(n))});
    auto lc = static_cast<std::int64_t>(c.colength());
    std::int64_t mu_c = static_cast<std::int64_t>(nc.colength()) - lc;
    std::int64_t mu_cx = static_cast<std::int64_t>(ncx.colength()) - lc;
    auto d = 1 + mu_cx - mu_c;
    if (d != 0 && d != 1) throw Error(ErrorKind::InternalInconsistency, "delta outside {0,1}: " + std::to_string(d));
    return static_cast<int>(d);
  }

  /// Least n with δ(R/m^n) = 1; checks that the verdict stays true up to max_n.
  int index(const Poly& x, std::optional<int> max_n = std::nullopt) const {
    int b = max_n.value_or(bounds_.index_max);
    std::optional<int> first;
    for (int n = 1; n <= b; ++n) {
      bool v = delta_one_test(x, n).verdict;
      if (first && !v) {
        throw Error(ErrorKind::InternalInconsistency,
                    "delta dropped back to 0 at n = " + std::to_string(n) + " after 1 at n = " + std::to_string(*first));
      }
      if (v && !first) first = n;
    }
    if (!first) throw Error(ErrorKind::NotFound, "delta is 0 for every n up to " + std::to_string(b));
    return *first;
  }

  /// μ(J) for J ⊇ I with J/I m-primary: λ(R/mJ) − λ(R/J).
  std::int64_t mu(const std::vector<Poly>& j) const {
    auto jj = localize_with(j);
    return static_cast<std::int64_t>(times_max_ideal(jj).colength()) - static_cast<std::int64_t>(jj.colength());
  }

  /// λ(((I+J) : n)/(I+J)).
  std::int64_t socle_dimension(const std::vector<Poly>& j) const {
    auto q = localize_with(j);
    return static_cast<std::int64_t>(q.colength()) - static_cast<std::int64_t>(colon_max_power(q, 1).colength());
  }

  /// Generators of I*, the ideal of initial forms, in uppercase copies of
  /// the variables: reduced degrevlex basis.
  Ideal<F> tangent_cone() const {
    auto upper = uppercase_ring();
    if (generators().empty()) return Ideal<F>::zero(upper);
    // Homogenize with h last and saturate: in degrevlex, h divides a
    // homogeneous basis element only through its h-power factor.
    auto hname = fresh_variable(*ring_, "h");
    auto rh = extend_ring(*ring_, hname, false, TermOrder::degrevlex());
    std::vector<Poly> hom;
    for (const auto& g : generators()) hom.push_back(homogenize(g, rh));
    auto gb = buchberger<F>(std::move(hom), rh, opts_);
    std::size_t h = ring_->nvars();
    // Degree first, then the larger h-power: the leading term of each
    // homogeneous element sits in its lowest x-degree part.
    std::vector<std::string> names{hname};
    for (const auto& v : ring_->variables()) names.push_back(v);
    auto rl = Ring<F>::make(ring_->field(), names, TermOrder::deglex());
    std::vector<int> to_rl;
    for (std::size_t i = 0; i < h; ++i) to_rl.push_back(static_cast<int>(i) + 1);
    to_rl.push_back(0);
    std::vector<Poly> sat;
    for (const auto& g : gb.generators) {
      int e = g.min_exponent(h);
      Monomial hm = Monomial::variable(rh->nvars(), h, e);
      sat.push_back(divide_exact(g, Poly::monomial(rh, hm)).rename(rl, to_rl));
    }
    auto gl = buchberger<F>(std::move(sat), rl, opts_);
    std::vector<Poly> forms;
    for (const auto& g : gl.generators) {
      auto f = dehomogenize(g, 0, upper);
      if (!f.is_zero()) forms.push_back(f.initial_form());
    }
    Ideal<F> cone(upper, forms, opts_);
    auto red = cone.groebner(TermOrder::degrevlex()).generators;
    std::vector<Poly> out;
    for (const auto& g : red) out.push_back(g.reorder(upper));
    return Ideal<F>(upper, out, opts_);
  }

  RingPtr<F> uppercase_ring() const {
    std::vector<std::string> names;
    for (auto v : ring_->variables()) {
      for (auto& c : v) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      names.push_back(v);
    }
    return Ring<F>::make(ring_->field(), names, TermOrder::degrevlex());
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, LocalIdeal<F>> trunc;
    std::mutex probe_mu;
    bool probe_done = false;
    std::optional<std::int64_t> probe;
  };

  bool contains_max_power(const LocalIdeal<F>& j, int n) const {
    for (const auto& m : monomials_of_degree(ring_->nvars(), n)) {
      if (!j.contains(Poly::monomial(ring_, m))) return false;
    }
    return true;
  }

  /// I + n·C, for C containing n^M; the result contains n^{M+1}.
  LocalIdeal<F> times_max_ideal(const LocalIdeal<F>& c) const {
    std::vector<Poly> g = generators();
    for (const auto& p : c.generators()) {
      for (std::size_t i = 0; i < ring_->nvars(); ++i) g.push_back(p.reorder(ring_) * Poly::variable(ring_, i));
    }
    return LocalIdeal<F>::truncate(g, ring_, c.bound() + 1, opts_);
  }

  RingPtr<F> ring_;
  Ideal<F> ideal_;
  bool contraction_assumed_;
  LocalBounds bounds_;
  GroebnerOptions opts_;
  std::shared_ptr<Cache> cache_;
};

/// HF of P/J for a homogeneous ideal J: standard monomials of a degrevlex
/// basis counted by degree.
template <class F>
std::vector<std::int64_t> graded_hilbert_function(const Ideal<F>& j, int max_degree) {
  const auto& gb = j.groebner(TermOrder::degrevlex());
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(g.leading_monomial());
  std::vector<std::int64_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    std::int64_t c = 0;
    for (const auto& m : monomials_of_degree(j.ring()->nvars(), d)) {
      if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) ++c;
    }
    out.push_back(c);
  }
  return out;
}

/// The ideal as a MonomialIdeal when every generator is a monomial.
template <class F>
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal<F>& j) {
  std::vector<Monomial> g;
  for (const auto& p : j.generators()) {
    if (p.size() != 1) return std::nullopt;
    g.push_back(p.leading_monomial());
  }
  return MonomialIdeal(j.ring()->nvars(), g);
}

/// Every generator is homogeneous for the weights.
template <class F>
bool weighted_homogeneity_check(const std::vector<Polynomial<F>>& gens, const std::vector<int>& weights) {
  for (int w : weights) {
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
  }
  for (const auto& g : gens) {
    if (g.ring()->nvars() != weights.size()) throw Error(ErrorKind::InvalidArgument, "one weight per variable");
    std::optional<std::int64_t> deg;
    for (const auto& t : g.terms()) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < weights.size(); ++i) d += std::int64_t{weights[i]} * t.mono[i];
      if (deg && *deg != d) return false;
      deg = d;
    }
  }
  return true;
}

/// First weight vector with entries in 1..bound and gcd 1 making every
/// generator weighted homogeneous, by weight sum and then lexicographically.
template <class F>
std::optional<std::vector<int>> weight_search(const std::vector<Polynomial<F>>& gens, int bound) {
  if (gens.empty()) return std::nullopt;
  std::size_t n = gens.front().ring()->nvars();
  if (n == 0) return std::nullopt;
  std::vector<int> w(n);
  std::optional<std::vector<int>> hit;
  // Fill w[i..] with entries in 1..bound summing to `left`, lexicographically.
  std::function<bool(std::size_t, int)> fill = [&](std::size_t i, int left) -> bool {
    if (i + 1 == n) {
      if (left < 1 || left > bound) return false;
      w[i] = left;
      int g = 0;
      for (int v : w) g = std::gcd(g, v);
      if (g == 1 && weighted_homogeneity_check(gens, w)) {
        hit = w;
        return true;
      }
      return false;
    }
    int rest = static_cast<int>(n - i - 1);
    for (int v = 1; v <= bound && left - v >= rest; ++v) {
      w[i] = v;
      if (fill(i + 1, left - v)) return true;
    }
    return false;
  };
  for (int s = static_cast<int>(n); s <= bound * static_cast<int>(n); ++s) {
    if (fill(0, s)) return hit;
  }
  return std::nullopt;
}

}  // namespace lring
