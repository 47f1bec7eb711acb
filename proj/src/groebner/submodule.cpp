#include <algorithm>

#include "cstar/errors.hpp"
#include "cstar/groebner.hpp"
#include "engine.hpp"

namespace cstar {

namespace {

std::uint32_t u32(std::size_t n) { return static_cast<std::uint32_t>(n); }

void check_vector(const ModuleVector& v, const RingPtr& ring,
                  const GradedFreeModule& ambient) {
  if (!(v.ring()->field() == ring->field()))
    throw IncompatibleField("vector field " + v.ring()->field().describe() +
                            " differs from " + ring->field().describe());
  if (!v.ring()->same_base(*ring))
    throw IncompatibleRing("vector from a different ring");
  if (v.rank() != ambient.rank())
    throw DimensionMismatch("vector rank differs from ambient rank");
}

}  // namespace

SubmoduleGB buchberger(const RingPtr& ring, const GradedFreeModule& ambient,
                       std::vector<ModuleVector> gens, MonomialOrder order) {
  for (const auto& g : gens) check_vector(g, ring, ambient);
  gb::TermOrder ord(*ring, order, ambient.degrees());
  std::vector<gb::MPoly> polys;
  for (const auto& g : gens) polys.push_back(gb::to_mpoly(ord, g));
  gb::append_quotient_multiples(*ring, 0, u32(ambient.rank()), polys);
  const auto basis = gb::groebner(ord, std::move(polys));

  SubmoduleGB out;
  out.ring_ = ring;
  out.ambient_ = ambient;
  out.generators_ = std::move(gens);
  out.order_ = order;
  for (const auto& p : basis)
    out.basis_.push_back(gb::from_mpoly(ring, ambient, p));
  return out;
}

SubmoduleGB buchberger(const RingPtr& ring, const GradedFreeModule& ambient,
                       std::vector<ModuleVector> gens) {
  MonomialOrder order = ring->order();
  order.module = ModuleOrder::PositionOverTerm;
  return buchberger(ring, ambient, std::move(gens), order);
}

SubmoduleGB ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  const GradedFreeModule r1 = GradedFreeModule::uniform(1, 0);
  std::vector<ModuleVector> vs;
  for (const auto& g : gens) vs.emplace_back(r1, std::vector<Polynomial>{g});
  return buchberger(ring, r1, std::move(vs));
}

SubmoduleGB image(const PolyMatrix& a, const GradedFreeModule& target) {
  return buchberger(a.ring(), target, columns_of(a, target));
}

ModuleVector normal_form(const ModuleVector& v, const SubmoduleGB& b) {
  check_vector(v, b.ring(), b.ambient());
  if (v.rank() == 0) return v;
  gb::TermOrder ord(*b.ring(), b.order(), b.ambient().degrees());
  std::vector<gb::MPoly> basis;
  basis.reserve(b.basis().size());
  for (const auto& g : b.basis()) basis.push_back(gb::to_mpoly(ord, g));
  return gb::from_mpoly(b.ring(), b.ambient(),
                        gb::reduce(ord, gb::to_mpoly(ord, v), basis, true));
}

bool SubmoduleGB::contains(const ModuleVector& v) const {
  return normal_form(v, *this).is_zero();
}

bool SubmoduleGB::contains(const SubmoduleGB& other) const {
  if (!(other.ambient_ == ambient_))
    throw DimensionMismatch("submodules of different free modules");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const ModuleVector& v) { return contains(v); });
}

bool SubmoduleGB::is_everything() const {
  for (std::size_t k = 0; k < ambient_.rank(); ++k)
    if (!contains(ModuleVector::unit(ring_, ambient_, k))) return false;
  return true;
}

bool submodule_equal(const SubmoduleGB& a, const SubmoduleGB& b) {
  return a.contains(b) && b.contains(a);
}

// Lifting data: Gröbner basis of the graph module in F ⊕ R^s, position over
// term with the F block first, so that elements with a zero F block are an
// elimination basis of the syzygies.
struct Lifter::Impl {
  gb::TermOrder ord;
  std::vector<gb::MPoly> basis;
  std::vector<gb::MPoly> quotient;  // J·e_k in F, a Gröbner basis of J·F
};

Lifter::Lifter(const RingPtr& ring, const GradedFreeModule& ambient,
               std::vector<ModuleVector> gens)
    : ring_(ring), ambient_(ambient), gens_(std::move(gens)) {
  std::vector<std::int64_t> sdeg;
  for (const auto& g : gens_) {
    check_vector(g, ring, ambient);
    sdeg.push_back(generator_degree(g));
  }
  source_ = GradedFreeModule(sdeg);

  const std::uint32_t r = u32(ambient.rank());
  const std::uint32_t s = u32(gens_.size());
  MonomialOrder order = ring->order();
  order.module = ModuleOrder::PositionOverTerm;
  std::vector<std::int64_t> all = ambient.degrees();
  all.insert(all.end(), sdeg.begin(), sdeg.end());
  auto impl = std::make_shared<Impl>(Impl{gb::TermOrder(*ring, order, all), {}, {}});

  std::vector<gb::MPoly> polys;
  for (std::uint32_t i = 0; i < s; ++i) {
    gb::MPoly p;
    gb::append_vector(gens_[i], 0, p);
    p.push_back({Monomial(), r + i, Scalar(ring->field(), 1)});
    gb::sort_terms(impl->ord, p);
    polys.push_back(std::move(p));
  }
  gb::append_quotient_multiples(*ring, 0, r + s, polys);
  impl->basis = gb::groebner(impl->ord, std::move(polys));
  gb::append_quotient_multiples(*ring, 0, r, impl->quotient);

  // Tag parts are reduced modulo J·ε_i; the J·ε_i themselves drop out.
  std::vector<gb::MPoly> jtag;
  gb::append_quotient_multiples(*ring, r, s, jtag);
  for (const auto& p : impl->basis) {
    if (p.front().comp < r) continue;
    gb::MPoly tag = gb::reduce(impl->ord, p, jtag, true);
    if (tag.empty()) continue;
    syzygies_.push_back(gb::from_mpoly(ring, source_, tag, r));
  }
  impl_ = std::move(impl);
}

std::optional<std::vector<Polynomial>> Lifter::lift(const ModuleVector& v) const {
  check_vector(v, ring_, ambient_);
  const std::uint32_t r = u32(ambient_.rank());
  gb::MPoly p;
  gb::append_vector(v, 0, p);
  gb::sort_terms(impl_->ord, p);
  gb::MPoly rem = gb::reduce(impl_->ord, std::move(p), impl_->basis, true);
  for (const auto& t : rem)
    if (t.comp < r) return std::nullopt;

  std::vector<Polynomial> coeffs(gens_.size(), Polynomial(ring_));
  if (!gens_.empty()) {
    const ModuleVector tag = gb::from_mpoly(ring_, source_, rem, r);
    for (std::size_t i = 0; i < gens_.size(); ++i) coeffs[i] = -tag[i];
  }

  // Re-check the witness: v - sum c_i g_i must vanish modulo J·F.
  if (r > 0) {
    ModuleVector diff = v - combine(coeffs, gens_, ring_, ambient_);
    gb::MPoly d;
    gb::append_vector(diff, 0, d);
    gb::sort_terms(impl_->ord, d);
    if (!gb::reduce(impl_->ord, std::move(d), impl_->quotient, true).empty())
      throw InternalError("lift witness does not recombine to the target");
  }
  return coeffs;
}

std::optional<std::vector<Polynomial>> lift_witness(
    const ModuleVector& v, const std::vector<ModuleVector>& gens) {
  return Lifter(v.ring(), v.ambient(), gens).lift(v);
}

Syzygies syzygies(const RingPtr& ring, const GradedFreeModule& ambient,
                  const std::vector<ModuleVector>& gens) {
  Lifter l(ring, ambient, gens);
  return Syzygies{l.source(), l.syzygies()};
}

SubmoduleGB colon(const SubmoduleGB& m, const Polynomial& q) {
  const std::size_t r = m.ambient().rank();
  if (r == 0) return m;
  std::vector<ModuleVector> gens;
  for (std::size_t k = 0; k < r; ++k)
    gens.push_back(ModuleVector::unit(m.ring(), m.ambient(), k).times(q));
  for (const auto& g : m.generators()) gens.push_back(g);
  const Syzygies syz = syzygies(m.ring(), m.ambient(), gens);
  std::vector<ModuleVector> out;
  for (const auto& s : syz.generators) {
    std::vector<Polynomial> head(s.coords().begin(),
                                 s.coords().begin() + static_cast<std::ptrdiff_t>(r));
    out.emplace_back(m.ambient(), std::move(head));
  }
  return buchberger(m.ring(), m.ambient(), std::move(out), m.order());
}

SubmoduleGB colon(const SubmoduleGB& m, const std::vector<Polynomial>& q) {
  std::vector<ModuleVector> units;
  for (std::size_t k = 0; k < m.ambient().rank(); ++k)
    units.push_back(ModuleVector::unit(m.ring(), m.ambient(), k));
  SubmoduleGB acc = buchberger(m.ring(), m.ambient(), units, m.order());
  for (const auto& f : q) acc = intersect(acc, colon(m, f));
  return acc;
}

SubmoduleGB intersect(const SubmoduleGB& a, const SubmoduleGB& b) {
  if (!(a.ambient() == b.ambient()))
    throw DimensionMismatch("intersection of submodules of different modules");
  const RingPtr& ring = a.ring();
  const GradedFreeModule& f = a.ambient();
  const std::uint32_t r = u32(f.rank());
  MonomialOrder order = a.order();
  order.module = ModuleOrder::PositionOverTerm;
  gb::TermOrder ord(*ring, order, direct_sum(f, f).degrees());

  // (x + y, x) with x in A, y in B; a zero first block leaves x in A ∩ B.
  std::vector<gb::MPoly> polys;
  for (const auto& g : a.generators()) {
    gb::MPoly p;
    gb::append_vector(g, 0, p);
    gb::append_vector(g, r, p);
    gb::sort_terms(ord, p);
    polys.push_back(std::move(p));
  }
  for (const auto& g : b.generators()) {
    gb::MPoly p;
    gb::append_vector(g, 0, p);
    gb::sort_terms(ord, p);
    polys.push_back(std::move(p));
  }
  gb::append_quotient_multiples(*ring, 0, 2 * r, polys);
  const auto basis = gb::groebner(ord, std::move(polys));
  std::vector<ModuleVector> out;
  for (const auto& p : basis)
    if (p.front().comp >= r) out.push_back(gb::from_mpoly(ring, f, p, r));
  return buchberger(ring, f, std::move(out), a.order());
}

RingPtr with_quotient(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.homogeneous_degree().is_degree())
      throw ValidationError("quotient ideal generator " + g.to_string() +
                            " is not homogeneous");
  }
  const SubmoduleGB j = ideal(ring, gens);
  std::vector<Polynomial> basis;
  for (const auto& v : j.basis()) basis.push_back(v[0]);
  return ring->with_quotient_basis(std::move(basis));
}

Polynomial reduce_quotient(const Polynomial& f) {
  const Ring& ring = *f.ring();
  if (!ring.has_quotient() || f.is_zero()) return f;
  gb::TermOrder ord(ring, ring.order(), {0});
  std::vector<gb::MPoly> j;
  gb::append_quotient_multiples(ring, 0, 1, j);
  gb::MPoly p;
  for (const auto& t : f.terms()) p.push_back({t.mono, 0, t.coeff});
  const gb::MPoly r = gb::reduce(ord, std::move(p), j, true);
  std::vector<Term> terms;
  for (const auto& t : r) terms.push_back({t.m, t.c});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

PolyMatrix reduce_quotient(const PolyMatrix& a) {
  if (!a.ring()->has_quotient()) return a;
  PolyMatrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, reduce_quotient(a.at(r, c)));
  if (a.grading()) out.certify(a.grading()->source, a.grading()->target);
  return out;
}

bool is_zero_in_ring(const Polynomial& f) { return reduce_quotient(f).is_zero(); }

}  // namespace cstar
