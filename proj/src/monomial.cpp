#include "lring/monomial.hpp"

#include <functional>

#include "lring/term_order.hpp"

namespace lring {

std::string Monomial::str(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // Recursive fill of exponents, first variable taking the largest share first.
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      fill(i + 1, left - e);
    }
    m.set(i, 0);
  };
  fill(0, degree);
  return out;
}

TermOrder TermOrder::block(std::size_t split, Kind first, Kind second) {
  if (first == Kind::Block || first == Kind::WeightedDegRevLex || second == Kind::Block ||
      second == Kind::WeightedDegRevLex) {
    throw Error(ErrorKind::InvalidArgument, "block inner orders must be lex, deglex or degrevlex");
  }
  TermOrder o(Kind::Block);
  o.split_ = split;
  o.first_ = first;
  o.second_ = second;
  return o;
}

TermOrder TermOrder::weighted_degrevlex(std::vector<int> weights) {
  for (int w : weights) {
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
  }
  TermOrder o(Kind::WeightedDegRevLex);
  o.weights_ = std::move(weights);
  return o;
}

namespace {
const char* simple_name(TermOrder::Kind k) {
  switch (k) {
    case TermOrder::Kind::Lex: return "lex";
    case TermOrder::Kind::DegRevLex: return "degrevlex";
    case TermOrder::Kind::DegLex: return "deglex";
    case TermOrder::Kind::Block: return "block";
    case TermOrder::Kind::WeightedDegRevLex: return "wdegrevlex";
  }
  return "?";
}
}  // namespace

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Block:
      return "block(" + std::to_string(split_) + "," + simple_name(first_) + "," +
             simple_name(second_) + ")";
    case Kind::WeightedDegRevLex: {
      std::string s = "wdegrevlex(";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
      }
      return s + ")";
    }
    default: return simple_name(kind_);
  }
}

std::string TermOrder::key() const { return name(); }

}  // namespace lring
