// Small constructors shared by the unit tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "cstar/complex.hpp"
#include "cstar/groebner.hpp"
#include "cstar/polynomial.hpp"

namespace th {

inline cstar::RingPtr ring(std::vector<std::string> names,
                           cstar::Field f = cstar::Field::rational(),
                           std::vector<int> weights = {}) {
  return cstar::make_ring(f, std::move(names), std::move(weights));
}

inline cstar::Polynomial P(const cstar::RingPtr& r, const std::string& s) {
  return cstar::parse_polynomial(r, s);
}

inline std::vector<cstar::Polynomial> Ps(const cstar::RingPtr& r, const std::string& s) {
  return cstar::parse_polynomial_list(r, s);
}

inline cstar::ModuleVector vec(const cstar::RingPtr& r, const cstar::GradedFreeModule& f,
                               const std::vector<std::string>& coords) {
  std::vector<cstar::Polynomial> c;
  for (const auto& s : coords) c.push_back(P(r, s));
  return cstar::ModuleVector(r, f, std::move(c));
}

inline std::vector<std::string> strings(const cstar::SubmoduleGB& m) {
  std::vector<std::string> out;
  for (const auto& v : m.basis()) out.push_back(v.rank() == 1 ? v[0].to_string() : v.to_string());
  return out;
}

/// Random homogeneous polynomial of degree d with small integer coefficients.
cstar::Polynomial random_form(const cstar::RingPtr& r, std::int64_t d, std::mt19937_64& rng,
                              int density_percent = 50);

/// Coordinates of every monomial of degree d (weighted).
std::vector<std::vector<int>> exponent_vectors(const cstar::Ring& r, std::int64_t d);

}  // namespace th
