#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lring/ideal.hpp"
#include "lring/parse.hpp"

namespace lring {

/// x_i ↦ g_i(t) from k[x⃗] to k[t].
template <class F>
struct ParametrizedMap {
  RingPtr<F> source;
  RingPtr<F> target;
  std::vector<Polynomial<F>> images;
};

/// Validates and builds a map; images are parsed in a ring with the single
/// variable `t`.
template <class F>
ParametrizedMap<F> make_map(const F& field, const std::vector<std::string>& source_vars, const std::string& t,
                            const std::vector<std::string>& images) {
  if (source_vars.size() != images.size()) throw Error(ErrorKind::InvalidArgument, "one image per source variable");
  for (const auto& v : source_vars) {
    if (v == t) throw Error(ErrorKind::VariableClash, "parameter " + t + " is also a source variable");
  }
  ParametrizedMap<F> m{Ring<F>::make(field, source_vars), Ring<F>::make(field, {t}), {}};
  for (const auto& s : images) {
    auto g = parse_polynomial<F>(s, m.target);
    if (g.is_constant()) throw Error(ErrorKind::InvalidArgument, "image " + s + " is constant");
    for (const auto& term : g.terms()) {
      if (term.mono.is_one()) throw Error(ErrorKind::InvalidArgument, "image " + s + " has a constant term");
    }
    m.images.push_back(std::move(g));
  }
  return m;
}

/// Map file: the parameter name on the first line, then `x = g(t)` lines.
/// Blank lines and lines starting with '#' are skipped.
template <class F>
ParametrizedMap<F> parse_map_file(const std::string& text, const F& field) {
  std::istringstream in(text);
  std::string line, t;
  std::vector<std::string> vars, images;
  int lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (t.empty()) {
      t = line;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected `x = ...`");
    vars.push_back(trim(line.substr(0, eq)));
    images.push_back(trim(line.substr(eq + 1)));
  }
  if (t.empty() || vars.empty()) throw Error(ErrorKind::ParseError, "map file needs a parameter line and at least one image");
  return make_map(field, vars, t, images);
}

/// Substitutes the images and tests for zero in k[t].
template <class F>
bool verify_in_kernel(const Polynomial<F>& f, const ParametrizedMap<F>& map) {
  if (!f.ring()->compatible_with(*map.source)) throw Error(ErrorKind::RingMismatch, "polynomial not in the source ring");
  return substitute(f, map.images, map.target).is_zero();
}

/// Kernel of the map: t eliminated from (x_i − g_i(t)) with t in a block of
/// its own. Generators are the t-free part of the reduced basis.
template <class F>
Ideal<F> kernel(const ParametrizedMap<F>& map, const GroebnerOptions& opts = {}) {
  const auto& src = *map.source;
  auto tname = map.target->variables()[0];
  auto big = extend_ring(src, tname, true, TermOrder::block(1));
  std::vector<int> t_to_big{0};
  std::vector<int> x_to_big;
  for (std::size_t i = 0; i < src.nvars(); ++i) x_to_big.push_back(static_cast<int>(i) + 1);
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    gens.push_back(Polynomial<F>::variable(big, i + 1) - map.images[i].rename(big, t_to_big));
  }
  return Ideal<F>(map.source, eliminate<F>(gens, {0}, map.source, opts), opts);
}

}  // namespace lring
