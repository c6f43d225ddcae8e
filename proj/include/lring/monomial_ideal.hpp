#pragma once

#include <string>
#include <vector>

#include "lring/monomial.hpp"

namespace lring {

/// Monomial ideal held by its minimal generators, lexicographically
/// descending.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : n_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;
  /// Every generator is a pure power of a variable.
  bool is_irreducible() const;
  /// Indices of the variables occurring in some generator.
  std::vector<std::size_t> support() const;

  std::string str(std::span<const std::string> names) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.n_ == b.n_ && a.gens_ == b.gens_; }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// A : (m).
MonomialIdeal mono_quotient(const MonomialIdeal& a, const Monomial& m);
/// A ⊆ B.
bool mono_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// Irredundant decomposition into ideals generated by pure powers, sorted.
/// Throws UnitIdeal on the unit ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a);

/// Minimal primes as sorted variable index sets.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& a);

struct LinearNzdDiagnostic {
  bool exists = false;
  /// Support of a witness linear form (all coefficients 1); empty if none.
  std::vector<std::size_t> witness;
  /// Only minimal primes are consulted; embedded primes are not computed.
  std::string caveat = "minimal-primes-only";
};

/// Whether some linear form lies outside every minimal prime of A. Primes of
/// monomial ideals are generated by variables, so a form lies in one exactly
/// when its support does; the answer is the same over every field.
LinearNzdDiagnostic linear_nzd_exists(const MonomialIdeal& a);

}  // namespace lring
