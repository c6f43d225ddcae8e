#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lring/error.hpp"

namespace lring {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with a cached total degree. Storage is inline, so
/// monomials are cheap to copy; the variable count is capped at
/// kMaxVariables and exponent overflow throws.
class Monomial {
 public:
  using exponent_type = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(checked_size(nvars)) {}
  Monomial(std::initializer_list<exponent_type> exps) : Monomial(std::span(exps.begin(), exps.size())) {}
  explicit Monomial(std::span<const exponent_type> exps) : n_(checked_size(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, exponent_type power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return n_; }
  exponent_type operator[](std::size_t i) const { return e_[i]; }
  std::int64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, exponent_type value) {
    if (value < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    std::int64_t d = deg_ - e_[i] + value;
    if (d > kMaxDegree) throw Error(ErrorKind::DegreeOverflow, "monomial degree overflow");
    deg_ = d;
    e_[i] = value;
  }

  std::span<const exponent_type> exponents() const { return {e_.data(), n_}; }

  /// Number of variables with a positive exponent.
  std::size_t support_size() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += e_[i] > 0;
    return s;
  }

  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  bool coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] > 0 && other.e_[i] > 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    std::int64_t d = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      std::int64_t e = std::int64_t{a.e_[i]} + b.e_[i];
      if (e > kMaxDegree) throw Error(ErrorKind::DegreeOverflow, "exponent overflow");
      r.e_[i] = static_cast<exponent_type>(e);
      d += e;
    }
    if (d > kMaxDegree) throw Error(ErrorKind::DegreeOverflow, "monomial degree overflow");
    r.deg_ = d;
    return r;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.e_[i] < b.e_[i]) throw Error(ErrorKind::InvalidArgument, "monomial does not divide");
      r.e_[i] = a.e_[i] - b.e_[i];
    }
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = std::min(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  Monomial pow(exponent_type k) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, static_cast<exponent_type>(std::int64_t{e_[i]} * k));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.e_[i] != b.e_[i]) return false;
    }
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Plain lexicographic comparison of exponent vectors; a container order,
  /// not a term order.
  friend bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(e_[i]);
    return h;
  }

  /// "x^2*y" style rendering given variable names; "1" for the unit monomial.
  std::string str(std::span<const std::string> names) const;

 private:
  static constexpr std::int64_t kMaxDegree = (std::int64_t{1} << 30);

  static std::uint8_t checked_size(std::size_t n) {
    if (n > kMaxVariables) {
      throw Error(ErrorKind::VariableLimit,
                  "at most " + std::to_string(kMaxVariables) + " variables supported");
    }
    return static_cast<std::uint8_t>(n);
  }

  std::array<exponent_type, kMaxVariables> e_{};
  std::int64_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree `degree` in `nvars` variables, in
/// descending lexicographic order (x0^d first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace lring
