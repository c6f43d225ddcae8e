#include "lring/monomial_ideal.hpp"

#include <algorithm>

#include "lring/error.hpp"

namespace lring {

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return lex_less(b, a);
}

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), canonical_less);
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> out;
  for (const auto& m : g) {
    // Sorted by degree, so any divisor of m is already in out.
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return lex_less(b, a); });
  return out;
}

std::vector<int> pure_powers(const MonomialIdeal& a) {
  std::vector<int> e(a.nvars(), 0);
  for (const auto& g : a.generators()) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (g[i] > 0) e[i] = g[i];
    }
  }
  return e;
}

void split(const MonomialIdeal& a, std::vector<MonomialIdeal>& out) {
  const auto& gens = a.generators();
  auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& m) { return m.support_size() > 1; });
  if (mixed == gens.end()) {
    out.push_back(a);
    return;
  }
  std::size_t i = 0;
  while ((*mixed)[i] == 0) ++i;
  Monomial u = Monomial::variable(a.nvars(), i, (*mixed)[i]);
  Monomial v = *mixed / u;
  split(mono_sum(a, MonomialIdeal(a.nvars(), {u})), out);
  split(mono_sum(a, MonomialIdeal(a.nvars(), {v})), out);
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : n_(nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw Error(ErrorKind::RingMismatch, "monomial with wrong variable count");
  }
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_irreducible() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.support_size() == 1; });
}

std::vector<std::size_t> MonomialIdeal::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g[i] > 0; })) s.push_back(i);
  }
  return s;
}

std::string MonomialIdeal::str(std::span<const std::string> names) const {
  std::string s = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    s += gens_[k].str(names);
  }
  return s + ")";
}

bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.gens_.size() != b.gens_.size()) return a.gens_.size() < b.gens_.size();
  auto ea = pure_powers(a), eb = pure_powers(b);
  if (ea != eb) return ea > eb;
  return std::lexicographical_compare(a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end(),
                                      [](const Monomial& x, const Monomial& y) { return lex_less(y, x); });
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) g.push_back(x * y);
  }
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  }
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_quotient(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators()) g.push_back(x / gcd(x, m));
  return MonomialIdeal(a.nvars(), std::move(g));
}

bool mono_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const Monomial& g) { return b.contains(g); });
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a) {
  if (a.is_unit()) throw Error(ErrorKind::UnitIdeal, "decomposition of the unit ideal");
  std::vector<MonomialIdeal> parts;
  split(a, parts);
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < parts.size() && !redundant; ++j) {
      if (j != i && mono_subset(parts[j], parts[i])) redundant = true;
    }
    if (!redundant) out.push_back(parts[i]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& a) {
  std::vector<std::vector<std::size_t>> sup;
  for (const auto& c : irreducible_decomposition(a)) sup.push_back(c.support());
  std::sort(sup.begin(), sup.end());
  sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sup) {
    bool minimal = true;
    for (const auto& t : sup) {
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

LinearNzdDiagnostic linear_nzd_exists(const MonomialIdeal& a) {
  auto primes = minimal_primes(a);
  std::size_t n = a.nvars();
  LinearNzdDiagnostic d;
  // Candidate supports by size, then lexicographically.
  for (std::size_t size = 1; size <= n && !d.exists; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> t;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) t.push_back(i);
      }
      bool avoids = std::none_of(primes.begin(), primes.end(), [&](const std::vector<std::size_t>& p) {
        return std::includes(p.begin(), p.end(), t.begin(), t.end());
      });
      if (avoids) {
        d.exists = true;
        d.witness = t;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return d;
}

}  // namespace lring
