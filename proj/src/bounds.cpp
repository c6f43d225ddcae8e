#include "lring/bounds.hpp"

#include <algorithm>
#include <unordered_set>

#include "lring/error.hpp"
#include "lring/monomial.hpp"

namespace lring {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative binomial index");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative binomial top");
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact: r is C(n-k+i-1, i-1).
    std::int64_t num;
    if (__builtin_mul_overflow(r, n - k + i, &num)) {
      throw Error(ErrorKind::DegreeOverflow, "binomial C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
    r = num / i;
  }
  return r;
}

MacaulayRep macaulay_rep(std::int64_t d, int n) {
  if (d < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "macaulay_rep needs d >= 1 and n >= 1");
  MacaulayRep rep{d, n, {}};
  std::int64_t rest = d;
  for (int i = n; i >= 1 && rest > 0; --i) {
    std::int64_t k = i;  // C(i, i) = 1 <= rest
    while (binomial(k + 1, i) <= rest) ++k;
    rep.ks.push_back(k);
    rest -= binomial(k, i);
  }
  return rep;
}

std::int64_t macaulay_bound(std::int64_t d, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "macaulay_bound needs n >= 1");
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "macaulay_bound needs d >= 0");
  if (d == 0) return 0;
  auto rep = macaulay_rep(d, n);
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rep.ks.size(); ++j) {
    auto i = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(j);
    s += binomial(rep.ks[j] + 1, i + 1);
  }
  return s;
}

std::int64_t lex_segment_oracle(std::int64_t d, int n, int v, std::int64_t max_monomials) {
  if (d < 0 || n < 1 || v < 1) throw Error(ErrorKind::InvalidArgument, "lex_segment_oracle needs d >= 0, n >= 1, v >= 1");
  if (v < n + d) throw Error(ErrorKind::InvalidArgument, "lex_segment_oracle needs v >= n + d");
  if (d == 0) return 0;
  auto total_next = binomial(v + n, n + 1);
  if (total_next > max_monomials) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(total_next) + " monomials of degree " + std::to_string(n + 1) +
                                               " exceed the budget of " + std::to_string(max_monomials));
  }
  auto mons = monomials_of_degree(static_cast<std::size_t>(v), n);
  auto lex_greater = [](const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  };
  std::sort(mons.begin(), mons.end(), lex_greater);
  auto out_count = static_cast<std::int64_t>(mons.size()) - d;
  std::unordered_set<Monomial, MonomialHash> products;
  for (std::int64_t k = 0; k < out_count; ++k) {
    for (int i = 0; i < v; ++i) products.insert(mons[static_cast<std::size_t>(k)] * Monomial::variable(static_cast<std::size_t>(v), static_cast<std::size_t>(i)));
  }
  return total_next - static_cast<std::int64_t>(products.size());
}

std::vector<std::int64_t> hf_feasible_sequence(const std::vector<std::int64_t>& prefix, int N) {
  if (prefix.empty() || prefix[0] != 1) throw Error(ErrorKind::InvalidArgument, "prefix must start with HF(0) = 1");
  if (N < static_cast<int>(prefix.size())) throw Error(ErrorKind::InvalidArgument, "N must exceed the prefix degrees");
  for (auto h : prefix) {
    if (h < 0) throw Error(ErrorKind::InvalidArgument, "negative Hilbert function value");
  }
  std::vector<std::int64_t> hf = prefix;
  for (int j = static_cast<int>(prefix.size()); j < N; ++j) {
    if (j == N - 1) {
      // Socle cap; HF(N-1) <= 1 holds whatever the growth bound.
      hf.push_back(j == 1 ? 1 : std::min<std::int64_t>(1, macaulay_bound(hf.back(), j - 1)));
      continue;
    }
    if (j == 1) throw Error(ErrorKind::InvalidArgument, "HF(1) is unbounded by HF(0); give it in the prefix");
    hf.push_back(macaulay_bound(hf.back(), j - 1));
  }
  hf[static_cast<std::size_t>(N - 1)] = std::min<std::int64_t>(hf[static_cast<std::size_t>(N - 1)], 1);
  return hf;
}

std::int64_t hf_feasible_max_length(const std::vector<std::int64_t>& prefix, int N) {
  std::int64_t s = 0;
  for (auto h : hf_feasible_sequence(prefix, N)) s += h;
  return s;
}

namespace {

CaseEntry make_entry(int order, std::int64_t e, std::vector<std::int64_t> prefix, int N) {
  if (static_cast<int>(prefix.size()) > N) prefix.resize(static_cast<std::size_t>(N));
  CaseEntry c;
  c.order = order;
  c.hf = hf_feasible_sequence(prefix, N);
  for (auto h : c.hf) c.max_length += h;
  c.required = order * e;
  c.eliminated = c.max_length < c.required;
  auto bound = std::to_string(c.required) + " = " + std::to_string(order) + "e";
  c.reason = c.eliminated ? "lambda(R/fR) <= " + std::to_string(c.max_length) + " < " + bound
                          : "lambda(R/fR) <= " + std::to_string(c.max_length) + " >= " + bound +
                                ": no contradiction from the Hilbert function";
  return c;
}

// Entries of one order, one per admissible HF(2).
std::vector<CaseEntry> entries_for(int d, int emb, std::int64_t e, std::int64_t istar2, int N,
                                   std::pair<std::int64_t, std::int64_t> j2) {
  std::int64_t s2 = binomial(emb + 1, 2);
  std::int64_t h1 = d == 1 ? emb - 1 : emb;
  std::int64_t lo = 0, hi = 0;
  if (d >= 3) {
    lo = s2 - istar2;
    hi = macaulay_bound(h1, 1);
  } else if (d == 2) {
    lo = s2 - istar2 - 1;
    hi = s2 - istar2;
  } else {
    lo = s2 - j2.second;
    hi = s2 - j2.first;
  }
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, h1 == 0 ? 0 : macaulay_bound(h1, 1));
  std::vector<CaseEntry> out;
  if (N <= 2 || lo > hi) {
    if (N <= 2) out.push_back(make_entry(d, e, {1, h1}, N));
    return out;
  }
  for (std::int64_t h2 = lo; h2 <= hi; ++h2) out.push_back(make_entry(d, e, {1, h1, h2}, N));
  return out;
}

}  // namespace

CaseReport order_case_report(int emb, std::int64_t e, std::int64_t istar2, int N, int d_max,
                             std::optional<std::pair<std::int64_t, std::int64_t>> j2_range) {
  if (emb < 1 || e < 1 || N < 2 || d_max < 1 || istar2 < 0) {
    throw Error(ErrorKind::InvalidArgument, "case report needs emb, e, d_max >= 1, N >= 2, istar2 >= 0");
  }
  CaseReport rep;
  rep.emb = emb;
  rep.e = e;
  rep.N = N;
  rep.istar2 = istar2;
  rep.d_max = d_max;
  rep.j2_range = j2_range.value_or(std::pair<std::int64_t, std::int64_t>{emb, emb + istar2});
  for (int d = 1; d <= d_max; ++d) {
    for (auto& c : entries_for(d, emb, e, istar2, N, rep.j2_range)) rep.entries.push_back(std::move(c));
  }
  // Orders past d_max: recipes no longer change from order 3 on, while the
  // required length d·e only grows.
  std::int64_t worst = 0;
  for (int d = d_max + 1; d <= std::max(d_max + 1, 3); ++d) {
    for (const auto& c : entries_for(d, emb, e, istar2, N, rep.j2_range)) worst = std::max(worst, c.max_length);
  }
  rep.tail.order = d_max + 1;
  rep.tail.max_length = worst;
  rep.tail.required = (d_max + 1) * e;
  rep.tail.eliminated = worst < rep.tail.required;
  rep.tail.reason = "every order >= " + std::to_string(d_max + 1) + ": lambda(R/fR) <= " + std::to_string(worst) +
                    (rep.tail.eliminated ? " < " : " >= ") + std::to_string(rep.tail.required) + " = " +
                    std::to_string(d_max + 1) + "e";
  return rep;
}

}  // namespace lring
