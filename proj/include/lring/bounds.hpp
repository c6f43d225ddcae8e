#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lring {

/// C(n, k) for 0 <= k; zero when k > n. Throws on int64 overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// d = C(k_n, n) + C(k_{n-1}, n-1) + ... with k_n > k_{n-1} > ... ; terms
/// after the remainder reaches zero are omitted, so ks may be shorter than n.
struct MacaulayRep {
  std::int64_t d = 0;
  int n = 0;
  std::vector<std::int64_t> ks;  // ks[0] = k_n, ks[1] = k_{n-1}, ...
};

MacaulayRep macaulay_rep(std::int64_t d, int n);

/// d^<n>: every C(k_i, i) of the representation replaced by C(k_i + 1, i + 1).
std::int64_t macaulay_bound(std::int64_t d, int n);

/// Degree n+1 dimension of S/L, S in v variables and L generated by all but
/// the d lex-smallest monomials of degree n. Needs v >= n + d.
std::int64_t lex_segment_oracle(std::int64_t d, int n, int v, std::int64_t max_monomials = 2'000'000);

/// Largest Hilbert function compatible with the prefix HF(0..t) when m^N
/// kills the ring and the socle is one-dimensional: each later value is the
/// Macaulay bound of the previous one, HF(N-1) is capped at 1, and HF
/// vanishes from N on. Entries 0..N-1.
std::vector<std::int64_t> hf_feasible_sequence(const std::vector<std::int64_t>& prefix, int N);

/// Sum of hf_feasible_sequence: an upper bound for λ(R/fR).
std::int64_t hf_feasible_max_length(const std::vector<std::int64_t>& prefix, int N);

struct CaseEntry {
  int order = 0;
  std::vector<std::int64_t> hf;  // extended Hilbert function, degrees 0..N-1
  std::int64_t max_length = 0;
  std::int64_t required = 0;  // order * e, from the superficial-element inequality
  bool eliminated = false;
  std::string reason;
};

struct CaseReport {
  int emb = 0;
  std::int64_t e = 0;
  int N = 0;
  std::int64_t istar2 = 0;
  std::pair<std::int64_t, std::int64_t> j2_range;
  int d_max = 0;
  std::vector<CaseEntry> entries;
  /// All orders above d_max at once: the generic bound against (d_max+1)·e.
  CaseEntry tail;
};

/// Case split on ord(f) for a hypothetical f with m^N ⊆ fR in a
/// one-dimensional Gorenstein ring of embedding dimension emb and
/// multiplicity e, where λ((I*)_2) = istar2.
///
/// Order d >= 3: HF(1) = emb and HF(2) runs from C(emb+1,2) - istar2 up to
/// the Macaulay bound. Order 2: HF(2) is C(emb+1,2) - istar2 or one less.
/// Order 1: HF(1) = emb - 1 and HF(2) = C(emb+1,2) - λ((J*)_2) for λ((J*)_2)
/// in j2_range, which defaults to [emb, emb + istar2]. An entry is
/// eliminated when the feasible length stays below d·e.
CaseReport order_case_report(int emb, std::int64_t e, std::int64_t istar2, int N, int d_max,
                             std::optional<std::pair<std::int64_t, std::int64_t>> j2_range = std::nullopt);

}  // namespace lring
