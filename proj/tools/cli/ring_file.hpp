#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lring/localring.hpp"
#include "lring/parse.hpp"

namespace lring::cli {

/// Parsed ring file, still untyped: the field decides the coefficient type.
struct RingDescription {
  std::string field = "Q";  // "Q" or "Fp"
  std::uint32_t prime = 0;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  std::string order = "degrevlex";
  std::vector<int> weights;
};

/// Format:
///   field Q | field Fp <prime>
///   vars <name> ...
///   gen <expression>        (any number)
///   order degrevlex|lex     (optional)
///   weights <w> ...         (optional)
/// Blank lines and lines starting with '#' are ignored.
RingDescription parse_ring_description(const std::string& text);
RingDescription read_ring_file(const std::string& path);

template <class F>
struct TypedRing {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;
};

template <class F>
TypedRing<F> instantiate(const RingDescription& d, const F& field) {
  auto ord = d.order == "lex" ? TermOrder::lex() : TermOrder::degrevlex();
  TypedRing<F> t{Ring<F>::make(field, d.vars, ord), {}};
  for (const auto& g : d.gens) {
    auto p = parse_polynomial<F>(g, t.ring);
    if (p.is_zero()) continue;
    for (const auto& term : p.terms()) {
      if (term.mono.is_one()) throw Error(ErrorKind::InvalidArgument, "generator " + g + " is not in the ideal of the variables");
    }
    t.gens.push_back(std::move(p));
  }
  return t;
}

/// Same ring with degrevlex, which every local computation needs.
template <class F>
TypedRing<F> with_local_order(const TypedRing<F>& t) {
  if (t.ring->order().is_degree_compatible()) return t;
  TypedRing<F> out{Ring<F>::make(t.ring->field(), t.ring->variables(), TermOrder::degrevlex()), {}};
  for (const auto& g : t.gens) out.gens.push_back(g.reorder(out.ring));
  return out;
}

/// Calls fn(field) with RationalField or PrimeField as the description asks.
template <class Fn>
decltype(auto) with_field(const RingDescription& d, Fn&& fn) {
  if (d.field == "Fp") return fn(PrimeField(d.prime));
  return fn(RationalField{});
}

/// Built-in ring text for "main" and "ex1".
std::optional<std::string> embedded_ring(const std::string& name);

}  // namespace lring::cli
