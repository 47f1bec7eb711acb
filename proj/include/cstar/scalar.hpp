// Coefficient fields: exact rationals or integers modulo a prime.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace cstar {

/// Identifies a coefficient field. modulus() == 0 means the rationals.
class Field {
 public:
  static Field rational() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t modulus() const { return p_; }
  std::string describe() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Default prime for fast runs.
inline constexpr std::uint32_t kDefaultPrime = 32003;

class Scalar {
 public:
  /// Zero of the given field.
  explicit Scalar(Field f = Field::rational());
  Scalar(Field f, long value);
  /// num/den; throws std::domain_error on zero denominator (or den ≡ 0 mod p).
  Scalar(Field f, const mpz_class& num, const mpz_class& den);
  static Scalar from_rational(Field f, const mpq_class& q);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Negative in the symmetric sense (rationals < 0, residues > p/2).
  bool is_negative() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Residue in [0, p); only valid for prime fields.
  std::uint32_t residue() const;
  /// Rational value; only valid for the rational field.
  const mpq_class& rational() const;

  /// Rationals as "a" or "a/b"; residues in the symmetric range (-p/2, p/2].
  std::string to_string() const;
  /// to_string() of the absolute value in the symmetric sense.
  std::string abs_string() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace cstar
