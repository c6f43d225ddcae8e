#include "lring/arith.hpp"

namespace lring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::VariableClash: return "VariableClash";
    case ErrorKind::VariableLimit: return "VariableLimit";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroColon: return "ZeroColon";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotArtinianLocally: return "NotArtinianLocally";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by 0");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp::Fp(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
  if (modulus == 0) throw Error(ErrorKind::InvalidArgument, "modulus 0");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  v_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same_field(const Fp& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorKind::FieldMismatch,
                "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }
}

Fp& Fp::operator+=(const Fp& o) {
  check_same_field(o);
  std::uint64_t s = std::uint64_t{v_} + o.v_;
  v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same_field(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same_field(o);
  v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
  return *this;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

Fp& Fp::operator/=(const Fp& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime below 2^31");
  }
}

Fp PrimeField::from_integer(const mpz_class& n) const {
  mpz_class r = n % p_;
  if (r < 0) r += p_;
  return Fp(static_cast<std::int64_t>(r.get_si()), p_);
}

Fp PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  Fp d = from_integer(den);
  if (d.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "denominator vanishes in F_" + std::to_string(p_));
  }
  return from_integer(num) / d;
}

}  // namespace lring
