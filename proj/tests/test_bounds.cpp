#include "doctest.h"

#include "lring/bounds.hpp"
#include "lring/error.hpp"

using namespace lring;

namespace {

using V = std::vector<std::int64_t>;

std::int64_t rep_value(const MacaulayRep& r) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < r.ks.size(); ++j) s += binomial(r.ks[j], r.n - static_cast<int>(j));
  return s;
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424);
  CHECK_THROWS_AS(binomial(200, 100), Error);
}

TEST_CASE("Macaulay representations") {
  auto r = macaulay_rep(5, 2);
  CHECK(r.ks == V{3, 2});
  CHECK(macaulay_rep(1, 4).ks == V{4});
  CHECK(macaulay_rep(10, 3).ks == V{5});
  for (std::int64_t d = 1; d <= 200; ++d) {
    for (int n = 1; n <= 5; ++n) {
      auto m = macaulay_rep(d, n);
      CHECK(rep_value(m) == d);
      for (std::size_t j = 1; j < m.ks.size(); ++j) CHECK(m.ks[j] < m.ks[j - 1]);
      CHECK(static_cast<int>(m.ks.size()) <= n);
    }
  }
  CHECK_THROWS_AS(macaulay_rep(0, 2), Error);
}

TEST_CASE("Macaulay bounds") {
  CHECK(macaulay_bound(5, 2) == 7);
  CHECK(macaulay_bound(2, 2) == 2);
  CHECK(macaulay_bound(4, 2) == 5);
  CHECK(macaulay_bound(3, 1) == 6);
  CHECK(macaulay_bound(6, 2) == 10);
  CHECK(macaulay_bound(0, 3) == 0);
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t k = n; k <= 8; ++k) CHECK(macaulay_bound(binomial(k, n), n) == binomial(k + 1, n + 1));
    for (std::int64_t d = 1; d < 60; ++d) CHECK(macaulay_bound(d, n) <= macaulay_bound(d + 1, n));
  }
}

TEST_CASE("lex segment oracle agrees with the Macaulay bound") {
  for (std::int64_t d = 1; d <= 12; ++d) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CHECK(lex_segment_oracle(d, n, n + static_cast<int>(d)) == macaulay_bound(d, n));
    }
  }
  CHECK(lex_segment_oracle(5, 2, 7) == 7);
  CHECK(lex_segment_oracle(0, 3, 5) == 0);
  // In degree one the kept variables span a polynomial ring.
  for (std::int64_t d = 1; d <= 5; ++d) CHECK(lex_segment_oracle(d, 1, 6) == binomial(d + 1, 2));
  CHECK_THROWS_AS(lex_segment_oracle(5, 2, 6), Error);
  CHECK_THROWS_AS(lex_segment_oracle(3, 4, 7, 10), Error);
}

TEST_CASE("feasible lengths") {
  CHECK(hf_feasible_sequence({1, 3, 6, 10}, 5) == V{1, 3, 6, 10, 1});
  CHECK(hf_feasible_max_length({1, 3, 6, 10}, 5) == 21);
  CHECK(hf_feasible_sequence({1, 3, 4}, 5) == V{1, 3, 4, 5, 1});
  CHECK(hf_feasible_max_length({1, 3, 4}, 5) == 14);
  CHECK(hf_feasible_max_length({1, 3, 5}, 5) == 17);
  CHECK(hf_feasible_max_length({1}, 2) == 2);
  CHECK(hf_feasible_max_length({1, 2, 2}, 5) == 8);
  CHECK(hf_feasible_sequence({1, 3, 5}, 3) == V{1, 3, 1});
  CHECK_THROWS_AS(hf_feasible_max_length({2, 3}, 5), Error);
  CHECK_THROWS_AS(hf_feasible_max_length({1, 3, 5}, 2), Error);
  CHECK_THROWS_AS(hf_feasible_max_length({1}, 4), Error);
}

TEST_CASE("order case report for the main ring") {
  auto rep = order_case_report(3, 8, 1, 5, 4);
  CHECK(rep.j2_range == std::pair<std::int64_t, std::int64_t>{3, 4});
  auto find = [&](int d, std::int64_t h2) -> const CaseEntry* {
    for (const auto& c : rep.entries) {
      if (c.order == d && c.hf.size() > 2 && c.hf[2] == h2) return &c;
    }
    return nullptr;
  };
  for (int d : {3, 4}) {
    std::int64_t worst = 0;
    for (const auto& c : rep.entries) {
      if (c.order != d) continue;
      CHECK(c.eliminated);
      worst = std::max(worst, c.max_length);
    }
    CHECK(worst == 21);
  }
  REQUIRE(find(3, 6));
  CHECK(find(3, 6)->reason == "lambda(R/fR) <= 21 < 24 = 3e");
  REQUIRE(find(4, 6));
  CHECK(find(4, 6)->required == 32);
  REQUIRE(find(2, 4));
  CHECK(find(2, 4)->eliminated);
  CHECK(find(2, 4)->max_length == 14);
  CHECK(find(2, 4)->required == 16);
  REQUIRE(find(2, 5));
  CHECK_FALSE(find(2, 5)->eliminated);
  int order_one = 0;
  for (const auto& c : rep.entries) {
    if (c.order != 1) continue;
    ++order_one;
    CHECK_FALSE(c.eliminated);
  }
  CHECK(order_one == 2);
  CHECK(rep.tail.eliminated);
  CHECK(rep.tail.max_length == 21);
  // Every eliminated entry re-verifies from its own numbers.
  for (const auto& c : rep.entries) {
    std::int64_t s = 0;
    for (auto h : c.hf) s += h;
    CHECK(s == c.max_length);
    CHECK(c.eliminated == (s < c.order * rep.e));
  }
}

TEST_CASE("order case report in other regimes") {
  auto big = order_case_report(3, 100, 1, 5, 4);
  for (const auto& c : big.entries) CHECK(c.eliminated);
  auto regular = order_case_report(1, 1, 0, 2, 1);
  REQUIRE(regular.entries.size() == 1);
  CHECK_FALSE(regular.entries[0].eliminated);
  auto knob = order_case_report(3, 8, 1, 5, 2, std::pair<std::int64_t, std::int64_t>{4, 4});
  int order_one = 0;
  for (const auto& c : knob.entries) order_one += c.order == 1;
  CHECK(order_one == 1);
}
