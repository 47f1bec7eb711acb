#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cstar/ring.hpp"
#include "cstar/scalar.hpp"

namespace cstar {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Result of Polynomial::homogeneous_degree().
struct HomogeneousDegree {
  enum class Kind { Degree, NotHomogeneous, ZeroPoly };
  Kind kind;
  std::int64_t degree = 0;

  bool is_degree() const { return kind == Kind::Degree; }
};

/// Sparse polynomial; terms strictly decreasing in the ring's monomial order
/// with nonzero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);
  /// Arbitrary order and repeated monomials allowed; zero terms dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Coefficient of the monomial 1 (the degree-0 part for positive weights).
  Scalar constant_term() const;
  HomogeneousDegree homogeneous_degree() const;
  /// Largest term degree; 0 for the zero polynomial.
  std::int64_t max_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  /// Divide by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Text form accepted by parse_polynomial, e.g. "-1/2*x^2*y + y^3".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  void check_field(const Scalar& c) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Binary ring operation; throws IncompatibleField on mixed fields.
Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, const Scalar& c);

/// Parses the polynomial grammar over the ring's variable names.
/// Throws ParseError with the offending column.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Comma-separated list of polynomials ("x^2, x*y").
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring,
                                              std::string_view text);

/// Identifiers appearing in polynomial text, in first-appearance order.
std::vector<std::string> scan_variable_names(std::string_view text);

}  // namespace cstar
