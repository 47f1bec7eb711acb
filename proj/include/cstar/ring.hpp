// Monomials, monomial orders and the weighted-graded polynomial ring.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cstar/kernels.hpp"
#include "cstar/scalar.hpp"

namespace cstar {

class Polynomial;

/// Exponent vector plus its cached weighted degree.
class Monomial {
 public:
  Monomial() = default;  // the monomial 1
  Monomial(const kernels::ExpVec& exps, std::int64_t degree)
      : exps_(exps), degree_(degree) {}

  const kernels::ExpVec& exps() const { return exps_; }
  std::int64_t degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_.e[i]; }
  bool is_one() const { return degree_ == 0 && exps_ == kernels::ExpVec{}; }

  /// this | other
  bool divides(const Monomial& other) const {
    return kernels::active().divides(exps_, other.exps_);
  }
  bool coprime(const Monomial& other) const {
    return kernels::active().coprime(exps_, other.exps_);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    kernels::active().mul(a.exps_, b.exps_, r.exps_);
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    kernels::active().quot(a.exps_, b.exps_, r.exps_);
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  kernels::ExpVec exps_{};
  std::int64_t degree_ = 0;
};

enum class RingOrder { DegRevLex, DegLex, Lex };

/// Ordering of free-module terms m·e_i. Position-over-term puts e_0 above
/// e_1 above ...; term-over-position compares deg(m) + deg(e_i) first.
enum class ModuleOrder { PositionOverTerm, TermOverPosition };

struct MonomialOrder {
  RingOrder ring = RingOrder::DegRevLex;
  ModuleOrder module = ModuleOrder::PositionOverTerm;

  /// -1, 0, +1. Degrees are the cached weighted degrees.
  int compare(const Monomial& a, const Monomial& b) const {
    const auto& k = kernels::active();
    switch (ring) {
      case RingOrder::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return k.revlex_cmp(a.exps(), b.exps());
      case RingOrder::DegLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return k.lex_cmp(a.exps(), b.exps());
      case RingOrder::Lex:
        return k.lex_cmp(a.exps(), b.exps());
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// k[x_1..x_m] with positive integer weights, optionally modulo a homogeneous
/// ideal J (stored as its reduced Gröbner basis; see groebner.hpp).
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names, std::vector<int> weights,
       MonomialOrder order = {});

  Field field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }

  Monomial monomial(std::span<const int> exps) const;
  Monomial variable(std::size_t i) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;
  std::int64_t degree_of(const kernels::ExpVec& e) const {
    return kernels::active().weighted_degree(e, wvec_);
  }
  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }

  /// Same field, variables, weights and order (quotient ideal not compared).
  bool same_base(const Ring& other) const;

  bool has_quotient() const { return quotient_ && !quotient_->empty(); }
  /// Reduced Gröbner basis of J over the base ring; empty for a polynomial ring.
  const std::vector<Polynomial>& quotient_basis() const;
  /// Copy of this ring modulo J; `basis` must be a reduced Gröbner basis of J.
  std::shared_ptr<const Ring> with_quotient_basis(
      std::vector<Polynomial> basis) const;

  std::string monomial_string(const Monomial& m) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  kernels::WeightVec wvec_;
  MonomialOrder order_;
  std::shared_ptr<const std::vector<Polynomial>> quotient_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> names,
                  std::vector<int> weights = {}, MonomialOrder order = {});

}  // namespace cstar
