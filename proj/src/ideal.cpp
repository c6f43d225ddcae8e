#include "lring/ideal.hpp"

namespace lring {

namespace {

void walk(const std::vector<Monomial>& leads, Monomial& cur, std::size_t var, const std::vector<int>& box,
          std::vector<Monomial>& out) {
  if (var == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e < box[var]; ++e) {
    cur.set(var, e);
    // Any lead dividing cur with zeros in later slots divides every extension.
    bool blocked = false;
    for (const auto& l : leads) {
      if (l.divides(cur)) {
        blocked = true;
        break;
      }
    }
    if (blocked) break;
    walk(leads, cur, var + 1, box, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars) {
  std::vector<int> box(nvars, -1);
  for (const auto& l : leads) {
    if (l.is_one()) return std::vector<Monomial>{};
    if (l.support_size() == 1) {
      for (std::size_t i = 0; i < nvars; ++i) {
        if (l[i] > 0 && (box[i] < 0 || l[i] < box[i])) box[i] = l[i];
      }
    }
  }
  for (int b : box) {
    if (b < 0) return std::nullopt;
  }
  std::vector<Monomial> out;
  Monomial cur(nvars);
  walk(leads, cur, 0, box, out);
  return out;
}

}  // namespace lring
