#include "cstar/polynomial.hpp"

#include <algorithm>

#include "cstar/errors.hpp"

namespace cstar {
namespace {

// Merge a + sign*b, both sorted descending.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return term(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  const Field f = ring->field();
  return term(std::move(ring), Monomial(), Scalar(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  const Monomial m = ring->variable(i);
  const Field f = ring->field();
  return term(std::move(ring), m, Scalar(f, 1));
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ring));
  p.check_field(c);
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  for (const auto& t : terms) p.check_field(t.coeff);
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.mono, b.mono) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void Polynomial::check_field(const Scalar& c) const {
  if (!(c.field() == ring_->field()))
    throw IncompatibleField("scalar field " + c.field().describe() +
                            " does not match ring field " +
                            ring_->field().describe());
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!(ring_->field() == o.ring_->field()))
    throw IncompatibleField("mixed coefficient fields: " +
                            ring_->field().describe() + " and " +
                            o.ring_->field().describe());
  if (!ring_->same_base(*o.ring_))
    throw IncompatibleRing("polynomials from different rings");
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(ring_->field());
}

HomogeneousDegree Polynomial::homogeneous_degree() const {
  using K = HomogeneousDegree::Kind;
  if (terms_.empty()) return {K::ZeroPoly, 0};
  const std::int64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return {K::NotHomogeneous, 0};
  return {K::Degree, d};
}

std::int64_t Polynomial::max_degree() const {
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(*ring_, terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(*ring_, terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  // Multiply the shorter operand into the longer one term by term; each
  // partial product is already sorted (the order is multiplicative).
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  std::vector<Term> acc;
  for (const auto& t : outer.terms_) {
    std::vector<Term> part;
    part.reserve(inner.terms_.size());
    for (const auto& u : inner.terms_)
      part.push_back(Term{t.mono * u.mono, t.coeff * u.coeff});
    acc = merge(*a.ring_, acc, part, false);
  }
  Polynomial r(a.ring_);
  r.terms_ = std::move(acc);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  check_field(c);
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  check_field(c);
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead().coeff.is_one()) return *this;
  return scaled(lead().coeff.inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_base(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  }
  return true;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
  }
  return f;
}

Polynomial poly_scale(const Polynomial& f, const Scalar& c) {
  return f.scaled(c);
}

}  // namespace cstar
