#include "cstar/scalar.hpp"

#include <stdexcept>

#include "cstar/errors.hpp"

namespace cstar {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("field modulus must be a prime below 2^31: " +
                                std::to_string(p));
  return Field(p);
}

std::string Field::describe() const {
  return is_rational() ? "rational" : "p:" + std::to_string(p_);
}

Scalar::Scalar(Field f) : field_(f) {
  if (f.is_rational())
    value_ = mpq_class(0);
  else
    value_ = std::uint32_t{0};
}

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(mpz_class(value), f.modulus());
  }
}

Scalar::Scalar(Field f, const mpz_class& num, const mpz_class& den)
    : field_(f) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const std::uint32_t p = f.modulus();
    const std::uint32_t d = reduce(den, p);
    if (d == 0)
      throw std::domain_error("denominator vanishes modulo " +
                              std::to_string(p));
    value_ = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(reduce(num, p)) * mod_pow(d, p - 2, p) % p);
  }
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  return Scalar(f, q.get_num(), q.get_den());
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

bool Scalar::is_negative() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) < 0;
  return std::get<std::uint32_t>(value_) > field_.modulus() / 2;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw IncompatibleField("mixed coefficient fields: " + field_.describe() +
                            " and " + o.field_.describe());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto& v = std::get<std::uint32_t>(r.value_);
    v = v == 0 ? 0 : field_.modulus() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(v) + std::get<std::uint32_t>(o.value_)) %
        field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.modulus();
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>((v + p - std::get<std::uint32_t>(o.value_)) %
                                   p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) *
                                   std::get<std::uint32_t>(o.value_) %
                                   field_.modulus());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r(*this);
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  } else {
    const std::uint32_t p = field_.modulus();
    r.value_ = mod_pow(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::uint32_t Scalar::residue() const {
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  const std::uint32_t v = std::get<std::uint32_t>(value_);
  if (is_negative())
    return "-" + std::to_string(field_.modulus() - v);
  return std::to_string(v);
}

std::string Scalar::abs_string() const {
  return is_negative() ? (-*this).to_string() : to_string();
}

}  // namespace cstar
