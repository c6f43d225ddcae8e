#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lring/monomial.hpp"

namespace lring {

/// A monomial order. Immutable value; compare() returns -1, 0 or 1.
///
/// Kinds:
///  - lex:           x0 > x1 > ... lexicographically
///  - degrevlex:     total degree, ties broken reverse-lexicographically
///  - deglex:        total degree, ties broken lexicographically
///  - block:         variables [0, split) compared first with `first`,
///                   then [split, n) with `second` (elimination order for
///                   the first block)
///  - weighted_degrevlex: weighted degree, ties broken reverse-lexicographically
class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, DegLex, Block, WeightedDegRevLex };

  TermOrder() = default;

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder degrevlex() { return TermOrder(Kind::DegRevLex); }
  static TermOrder deglex() { return TermOrder(Kind::DegLex); }
  static TermOrder block(std::size_t split, Kind first = Kind::DegRevLex,
                         Kind second = Kind::DegRevLex);
  static TermOrder weighted_degrevlex(std::vector<int> weights);

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  const std::vector<int>& weights() const { return weights_; }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex: return compare_lex(a, b, 0, a.size());
      case Kind::DegRevLex: return compare_degrevlex(a, b, 0, a.size());
      case Kind::DegLex: return compare_deglex(a, b, 0, a.size());
      case Kind::Block: {
        int c = compare_simple(first_, a, b, 0, split_);
        return c != 0 ? c : compare_simple(second_, a, b, split_, a.size());
      }
      case Kind::WeightedDegRevLex: return compare_weighted(a, b);
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// True when the order refines total degree (needed for degree truncation).
  bool is_degree_compatible() const { return kind_ == Kind::DegRevLex || kind_ == Kind::DegLex; }

  std::string name() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_ && a.first_ == b.first_ &&
           a.second_ == b.second_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const TermOrder& a, const TermOrder& b) { return !(a == b); }
  friend bool operator<(const TermOrder& a, const TermOrder& b) { return a.key() < b.key(); }

 private:
  explicit TermOrder(Kind k) : kind_(k) {}

  static int compare_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  static int compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    if (lo == 0 && hi == a.size()) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  static int compare_deglex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    return compare_lex(a, b, lo, hi);
  }

  static int compare_simple(Kind k, const Monomial& a, const Monomial& b, std::size_t lo,
                            std::size_t hi) {
    switch (k) {
      case Kind::Lex: return compare_lex(a, b, lo, hi);
      case Kind::DegLex: return compare_deglex(a, b, lo, hi);
      default: return compare_degrevlex(a, b, lo, hi);
    }
  }

  int compare_weighted(const Monomial& a, const Monomial& b) const {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += std::int64_t{weights_[i]} * a[i];
      wb += std::int64_t{weights_[i]} * b[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  std::string key() const;

  Kind kind_ = Kind::DegRevLex;
  std::size_t split_ = 0;
  Kind first_ = Kind::DegRevLex;
  Kind second_ = Kind::DegRevLex;
  std::vector<int> weights_;
};

}  // namespace lring
