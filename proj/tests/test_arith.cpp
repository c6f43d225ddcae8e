#include "doctest.h"

#include "lring/arith.hpp"
#include "lring/rng.hpp"

using namespace lring;

TEST_CASE("rational basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  Rational r(2, 4);
  CHECK(r.num() == 1);
  CHECK(r.den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).den() == 2);
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational(3, 7).str() == "3/7");
  CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), Error);
  try {
    (void)(Rational(1) / Rational(0));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("rational field axioms on random values") {
  SplitMix64 rng(42);
  auto draw = [&] {
    auto n = rng.uniform(-50, 50);
    auto d = rng.uniform(1, 30);
    return Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  };
  for (int i = 0; i < 300; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    // Canonical form is unique per value.
    Rational scaled(mpz_class(a.num() * 7), mpz_class(a.den() * 7));
    CHECK(scaled.num() == a.num());
    CHECK(scaled.den() == a.den());
  }
}

TEST_CASE("prime field") {
  PrimeField f7(7);
  CHECK(f7.from_integer(3).inverse() == f7.from_integer(5));
  CHECK(f7.from_integer(-1).value() == 6);
  CHECK(f7.from_fraction(1, 2).value() == 4);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(f7.from_fraction(1, 14), Error);
  try {
    (void)(Fp(1, 7) + Fp(1, 11));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  CHECK_THROWS_AS(Fp(0, 5).inverse(), Error);
}

TEST_CASE("prime field agrees with integer arithmetic mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (int a = 0; a < static_cast<int>(p); ++a) {
      for (int b = 0; b < static_cast<int>(p); ++b) {
        Fp x(a, p), y(b, p);
        CHECK((x + y).value() == static_cast<std::uint32_t>((a + b) % p));
        CHECK((x - y).value() == static_cast<std::uint32_t>(((a - b) % static_cast<int>(p) + p) % p));
        CHECK((x * y).value() == static_cast<std::uint32_t>((a * b) % p));
        if (b != 0) CHECK(((x / y) * y) == x);
      }
      CHECK((-Fp(a, p) + Fp(a, p)).is_zero());
    }
  }
}

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(2147483649u));
  CHECK_FALSE(is_prime(1));
  CHECK(PrimeField(2147483629u).characteristic() == 2147483629u);
}

TEST_CASE("splitmix64 is reproducible") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(0);
  // Reference value of SplitMix64 seeded with 0.
  CHECK(c.next() == 0xE220A8397B1DCDAFull);
  SplitMix64 d(7);
  for (int i = 0; i < 1000; ++i) {
    auto v = d.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}
