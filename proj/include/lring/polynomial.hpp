#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lring/arith.hpp"
#include "lring/monomial.hpp"
#include "lring/term_order.hpp"

namespace lring {

template <class F>
class Ring;

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

/// Polynomial ring context: coefficient field, variable names and the active
/// term order. Polynomials keep their terms sorted under that order, so
/// switching orders means building a new ring and calling reorder().
template <class F>
class Ring : public std::enable_shared_from_this<Ring<F>> {
 public:
  using Element = typename F::Element;

  static RingPtr<F> make(F field, std::vector<std::string> vars,
                         TermOrder order = TermOrder::degrevlex()) {
    return RingPtr<F>(new Ring(std::move(field), std::move(vars), std::move(order)));
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    return std::nullopt;
  }

  RingPtr<F> with_order(TermOrder order) const {
    if (order == order_) return this->shared_from_this();
    return make(field_, vars_, std::move(order));
  }

  /// Same field and variables; orders may differ.
  bool compatible_with(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }
  bool same_as(const Ring& o) const { return this == &o || (compatible_with(o) && order_ == o.order_); }

 private:
  Ring(F field, std::vector<std::string> vars, TermOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(std::move(order)) {
    if (vars_.size() > kMaxVariables) {
      throw Error(ErrorKind::VariableLimit, "too many variables");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (vars_[i] == vars_[j]) throw Error(ErrorKind::VariableClash, "duplicate variable " + vars_[i]);
      }
    }
    if (order_.kind() == TermOrder::Kind::WeightedDegRevLex && order_.weights().size() != vars_.size()) {
      throw Error(ErrorKind::InvalidArgument, "weight vector length differs from variable count");
    }
  }

  F field_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

/// Ring with one more variable appended at the end (or prepended).
template <class F>
RingPtr<F> extend_ring(const Ring<F>& r, const std::string& name, bool prepend, TermOrder order) {
  if (r.index_of(name)) throw Error(ErrorKind::VariableClash, "variable " + name + " already present");
  std::vector<std::string> vars = r.variables();
  if (prepend) {
    vars.insert(vars.begin(), name);
  } else {
    vars.push_back(name);
  }
  return Ring<F>::make(r.field(), std::move(vars), std::move(order));
}

/// A variable name not used in `r`, derived from `base`.
template <class F>
std::string fresh_variable(const Ring<F>& r, const std::string& base) {
  std::string name = base;
  for (int k = 1; r.index_of(name); ++k) name = base + std::to_string(k);
  return name;
}

template <class F>
struct Term {
  Monomial mono;
  typename F::Element coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

namespace detail {
inline bool coeff_negative(const Rational& c) { return c.sign() < 0; }
inline bool coeff_negative(const Fp&) { return false; }
}  // namespace detail

/// Sparse multivariate polynomial. Terms are stored in a vector sorted in
/// strictly descending order under the ring's term order, with no zero
/// coefficients, so the leading term is terms().front().
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using TermT = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    const TermOrder& ord = p.ring_->order();
    std::sort(terms.begin(), terms.end(),
              [&](const TermT& a, const TermT& b) { return ord.greater(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Caller guarantees terms are already sorted descending and nonzero.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, const Element& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
  }
  static Polynomial constant(RingPtr<F> ring, long c) {
    auto e = ring->field().from_integer(mpz_class(c));
    return constant(std::move(ring), e);
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const Element& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m) {
    auto one = ring->field().one();
    return monomial(std::move(ring), m, one);
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    auto m = Monomial::variable(ring->nvars(), index);
    return monomial(std::move(ring), m);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<TermT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const TermT& leading_term() const {
    require_nonzero("leading_term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Element& leading_coeff() const { return leading_term().coeff; }

  /// Leading term under an explicitly given order (no re-sorting).
  TermT leading_term(const TermOrder& ord) const {
    require_nonzero("leading_term");
    const TermT* best = &terms_.front();
    for (const auto& t : terms_) {
      if (ord.greater(t.mono, best->mono)) best = &t;
    }
    return *best;
  }

  /// Highest total degree among terms.
  std::int64_t total_degree() const {
    require_nonzero("total_degree");
    std::int64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Lowest total degree among terms (the order of f in the polynomial ring).
  std::int64_t order() const {
    require_nonzero("order");
    std::int64_t d = terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }

  /// Homogeneous component of the given total degree.
  Polynomial homogeneous_component(std::int64_t degree) const {
    Polynomial p(ring_);
    for (const auto& t : terms_) {
      if (t.mono.degree() == degree) p.terms_.push_back(t);
    }
    return p;
  }

  /// Lowest-degree homogeneous component f*.
  Polynomial initial_form() const { return homogeneous_component(order()); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const TermT& t) { return t.mono.degree() == d; });
  }

  /// Drops every term of total degree >= bound.
  Polynomial truncated(std::int64_t bound) const {
    Polynomial p(ring_);
    for (const auto& t : terms_) {
      if (t.mono.degree() < bound) p.terms_.push_back(t);
    }
    return p;
  }

  /// Same polynomial in a compatible ring with another term order.
  Polynomial reorder(RingPtr<F> target) const {
    if (!ring_->compatible_with(*target)) throw Error(ErrorKind::RingMismatch, "reorder into incompatible ring");
    if (target->order() == ring_->order()) {
      Polynomial p = *this;
      p.ring_ = std::move(target);
      return p;
    }
    return from_terms(std::move(target), terms_);
  }

  /// Moves variables: source variable i becomes target variable map[i];
  /// map[i] < 0 substitutes 1 for variable i.
  Polynomial rename(RingPtr<F> target, std::span<const int> map) const {
    if (!(target->field() == ring_->field())) throw Error(ErrorKind::FieldMismatch, "rename across fields");
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (map[i] >= 0) m.set(static_cast<std::size_t>(map[i]), m[map[i]] + t.mono[i]);
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, true); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, true); }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial p = a;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (a.size() < b.size()) return b * a;
    Polynomial acc(a.ring_);
    for (const auto& t : b.terms_) acc = add(acc, a.mul_term(t.mono, t.coeff), false);
    return acc;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Scalar multiple.
  Polynomial scaled(const Element& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }

  /// Product with c*m. Term order is multiplicative, so sortedness survives.
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ring_, ring_->field().one());
    Polynomial base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  /// Makes the leading coefficient one.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
  }

  /// Exponent of variable i: maximum and minimum over the support.
  int max_exponent(std::size_t i) const {
    int e = 0;
    for (const auto& t : terms_) e = std::max(e, t.mono[i]);
    return e;
  }
  int min_exponent(std::size_t i) const {
    require_nonzero("min_exponent");
    int e = terms_.front().mono[i];
    for (const auto& t : terms_) e = std::min(e, t.mono[i]);
    return e;
  }
  bool involves(std::size_t i) const { return max_exponent(i) > 0; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto& names = ring_->variables();
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      bool neg = detail::coeff_negative(t.coeff);
      Element mag = neg ? -t.coeff : t.coeff;
      if (k == 0) {
        if (neg) out += '-';
      } else {
        out += neg ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += t.mono.str(names);
      } else {
        out += mag.str() + "*" + t.mono.str(names);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, std::string(what) + " of zero polynomial");
  }

  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_ || !a.ring_->same_as(*b.ring_)) {
      throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
    }
  }

  static Polynomial add(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_ring(a, b);
    const TermOrder& ord = a.ring_->order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        Element s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

using QRing = Ring<RationalField>;
using QPoly = Polynomial<RationalField>;

/// Homogenizes f with the variable `h` of `target`, which must be f's ring
/// with h appended as the last variable. Every term is filled up to deg(f).
template <class F>
Polynomial<F> homogenize(const Polynomial<F>& f, RingPtr<F> target) {
  const auto& src = *f.ring();
  if (target->nvars() != src.nvars() + 1) throw Error(ErrorKind::RingMismatch, "target must add one variable");
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (src.variables()[i] == target->variables().back()) {
      throw Error(ErrorKind::VariableClash, "homogenizing variable already in ring");
    }
    if (src.variables()[i] != target->variables()[i]) {
      throw Error(ErrorKind::RingMismatch, "target variables must extend the source variables");
    }
  }
  if (f.is_zero()) return Polynomial<F>(target);
  std::int64_t d = f.total_degree();
  std::size_t h = src.nvars();
  std::vector<Term<F>> out;
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i) m.set(i, t.mono[i]);
    m.set(h, static_cast<int>(d - t.mono.degree()));
    out.push_back({m, t.coeff});
  }
  return Polynomial<F>::from_terms(std::move(target), std::move(out));
}

/// Sets the variable at `h_index` to 1, landing in `target` (the ring
/// without that variable).
template <class F>
Polynomial<F> dehomogenize(const Polynomial<F>& f, std::size_t h_index, RingPtr<F> target) {
  std::vector<int> map;
  int next = 0;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) map.push_back(i == h_index ? -1 : next++);
  return f.rename(std::move(target), map);
}

/// Substitutes images[i] (polynomials in `target`) for variable i of f.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::vector<Polynomial<F>>& images,
                         const RingPtr<F>& target) {
  if (images.size() != f.ring()->nvars()) throw Error(ErrorKind::InvalidArgument, "one image per variable required");
  Polynomial<F> acc(target);
  // Cache of powers per variable.
  std::vector<std::vector<Polynomial<F>>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial<F>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial<F>::constant(target, target->field().one()));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[static_cast<std::size_t>(e)];
  };
  for (const auto& t : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i] > 0) term *= power(i, t.mono[i]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace lring
