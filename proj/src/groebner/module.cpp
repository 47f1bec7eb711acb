#include <algorithm>

#include "cstar/errors.hpp"
#include "cstar/groebner.hpp"

namespace cstar {

ModuleVector::ModuleVector(RingPtr ring, GradedFreeModule ambient)
    : ring_(std::move(ring)), ambient_(std::move(ambient)) {
  coords_.assign(ambient_.rank(), Polynomial(ring_));
}

ModuleVector::ModuleVector(GradedFreeModule ambient,
                           std::vector<Polynomial> coords)
    : ambient_(std::move(ambient)), coords_(std::move(coords)) {
  if (coords_.size() != ambient_.rank())
    throw DimensionMismatch("vector length " + std::to_string(coords_.size()) +
                            " does not match module rank " +
                            std::to_string(ambient_.rank()));
  if (coords_.empty())
    throw DimensionMismatch("rank-0 vectors need an explicit ring");
  ring_ = coords_.front().ring();
}

ModuleVector::ModuleVector(RingPtr ring, GradedFreeModule ambient,
                           std::vector<Polynomial> coords)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), coords_(std::move(coords)) {
  if (coords_.size() != ambient_.rank())
    throw DimensionMismatch("vector length " + std::to_string(coords_.size()) +
                            " does not match module rank " +
                            std::to_string(ambient_.rank()));
}

ModuleVector ModuleVector::unit(RingPtr ring, GradedFreeModule ambient,
                                std::size_t i) {
  ModuleVector v(ring, std::move(ambient));
  v.coords_.at(i) = Polynomial::constant(ring, 1);
  return v;
}

bool ModuleVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<std::int64_t> ModuleVector::homogeneous_degree() const {
  std::optional<std::int64_t> d;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const auto h = coords_[k].homogeneous_degree();
    if (h.kind == HomogeneousDegree::Kind::ZeroPoly) continue;
    if (!h.is_degree()) return std::nullopt;
    const std::int64_t dk = h.degree + ambient_.degree(k);
    if (d && *d != dk) return std::nullopt;
    d = dk;
  }
  return d;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (o.rank() != rank()) throw DimensionMismatch("vector sum ranks differ");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  if (o.rank() != rank())
    throw DimensionMismatch("vector difference ranks differ");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

ModuleVector ModuleVector::times(const Polynomial& f) const {
  ModuleVector r(*this);
  for (auto& c : r.coords_) c = c * f;
  return r;
}

ModuleVector ModuleVector::scaled(const Scalar& s) const {
  ModuleVector r(*this);
  for (auto& c : r.coords_) c = c.scaled(s);
  return r;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  return a.coords_ == b.coords_;
}

std::string ModuleVector::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out += ", ";
    out += coords_[k].to_string();
  }
  return out + "]";
}

std::vector<ModuleVector> columns_of(const PolyMatrix& a,
                                     const GradedFreeModule& target) {
  if (target.rank() != a.rows())
    throw DimensionMismatch("target rank does not match matrix rows");
  std::vector<ModuleVector> out;
  out.reserve(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    ModuleVector v(a.ring(), target);
    if (a.rows() > 0) v = ModuleVector(target, a.column(c));
    out.push_back(std::move(v));
  }
  return out;
}

ModuleVector combine(const std::vector<Polynomial>& coeffs,
                     const std::vector<ModuleVector>& gens,
                     const RingPtr& ring, const GradedFreeModule& ambient) {
  if (coeffs.size() != gens.size())
    throw DimensionMismatch("coefficient count does not match generators");
  ModuleVector acc(ring, ambient);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!coeffs[i].is_zero()) acc += gens[i].times(coeffs[i]);
  return acc;
}

std::int64_t generator_degree(const ModuleVector& v) {
  if (auto d = v.homogeneous_degree()) return *d;
  std::int64_t best = 0;
  bool any = false;
  for (std::size_t k = 0; k < v.rank(); ++k) {
    if (v[k].is_zero()) continue;
    const std::int64_t d = v[k].max_degree() + v.ambient().degree(k);
    if (!any || d > best) best = d;
    any = true;
  }
  return best;
}

std::vector<Polynomial> irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    out.push_back(Polynomial::variable(ring, i));
  return out;
}

}  // namespace cstar
