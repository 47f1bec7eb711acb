// Hilbert series of graded quotients F/M, from the leading terms of a
// Gröbner basis.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cstar/groebner.hpp"

namespace cstar {

/// numerator(t) / prod_k (1 - t^denominator[k]), with the numerator a Laurent
/// polynomial and common factors cancelled.
struct HilbertSeries {
  std::map<std::int64_t, mpz_class> numerator;  // zero coefficients omitted
  std::vector<int> denominator;                 // sorted

  bool is_polynomial() const { return denominator.empty(); }
  /// Total dimension (sum of the numerator) when the series is a polynomial.
  std::optional<mpz_class> length() const;
  /// Dimension of the degree-d component.
  mpz_class coefficient(std::int64_t d) const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Hilbert series of ambient / M, over the ring modulo its quotient ideal.
HilbertSeries hilbert_series(const SubmoduleGB& m);

/// a - b over a common denominator, cancelled.
HilbertSeries series_difference(const HilbertSeries& a, const HilbertSeries& b);

/// dim_k(big / small) for submodules small ⊆ big of the same free module,
/// as the difference of the two Hilbert series. Throws
/// NonPolynomialDifference when the difference is not a polynomial.
mpz_class quotient_length(const SubmoduleGB& small, const SubmoduleGB& big);

/// Numerator of k[x]/I for a monomial ideal I (as exponent vectors), over
/// prod (1 - t^w_i). Exposed for testing.
std::map<std::int64_t, mpz_class> monomial_numerator(
    const Ring& ring, std::vector<Monomial> gens);

}  // namespace cstar
