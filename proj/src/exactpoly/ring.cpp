#include "cstar/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "cstar/errors.hpp"
#include "cstar/polynomial.hpp"

namespace cstar {

Ring::Ring(Field field, std::vector<std::string> names,
           std::vector<int> weights, MonomialOrder order)
    : field_(field),
      names_(std::move(names)),
      weights_(std::move(weights)),
      order_(order) {
  if (names_.size() > kernels::kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kernels::kMaxVars) +
                                " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw std::invalid_argument("one weight per variable required");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (weights_[i] < 1)
      throw std::invalid_argument("variable weights must be positive");
    if (names_[i].empty())
      throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate variable name " + names_[i]);
    wvec_.w[i] = weights_[i];
  }
}

Monomial Ring::monomial(std::span<const int> exps) const {
  if (exps.size() != nvars())
    throw DimensionMismatch("exponent vector length does not match ring");
  kernels::ExpVec e;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 0xFFFF)
      throw std::out_of_range("exponent out of range");
    e.e[i] = static_cast<std::uint16_t>(exps[i]);
  }
  return Monomial(e, degree_of(e));
}

Monomial Ring::variable(std::size_t i) const {
  if (i >= nvars()) throw std::out_of_range("variable index");
  kernels::ExpVec e;
  e.e[i] = 1;
  return Monomial(e, weights_[i]);
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  kernels::ExpVec e;
  kernels::active().lcm(a.exps(), b.exps(), e);
  return Monomial(e, degree_of(e));
}

Monomial Ring::gcd(const Monomial& a, const Monomial& b) const {
  kernels::ExpVec e;
  kernels::active().gcd(a.exps(), b.exps(), e);
  return Monomial(e, degree_of(e));
}

bool Ring::same_base(const Ring& other) const {
  return this == &other ||
         (field_ == other.field_ && names_ == other.names_ &&
          weights_ == other.weights_ && order_ == other.order_);
}

const std::vector<Polynomial>& Ring::quotient_basis() const {
  static const std::vector<Polynomial> empty;
  return quotient_ ? *quotient_ : empty;
}

std::shared_ptr<const Ring> Ring::with_quotient_basis(
    std::vector<Polynomial> basis) const {
  auto r = std::make_shared<Ring>(*this);
  r->quotient_ =
      std::make_shared<const std::vector<Polynomial>>(std::move(basis));
  return r;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr make_ring(Field field, std::vector<std::string> names,
                  std::vector<int> weights, MonomialOrder order) {
  return std::make_shared<const Ring>(field, std::move(names),
                                      std::move(weights), order);
}

}  // namespace cstar
