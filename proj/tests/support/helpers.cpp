#include "helpers.hpp"

#include "brute.hpp"

namespace th {

std::vector<std::vector<int>> exponent_vectors(const cstar::Ring& r, std::int64_t d) {
  return brute::monomials(r, d);
}

cstar::Polynomial random_form(const cstar::RingPtr& r, std::int64_t d, std::mt19937_64& rng,
                              int density_percent) {
  std::uniform_int_distribution<int> pct(0, 99), coeff(-4, 4);
  cstar::Polynomial f(r);
  for (const auto& e : exponent_vectors(*r, d)) {
    if (pct(rng) >= density_percent) continue;
    const int c = coeff(rng);
    if (c != 0) f += cstar::Polynomial::term(r, r->monomial(e), cstar::Scalar(r->field(), c));
  }
  return f;
}

}  // namespace th
