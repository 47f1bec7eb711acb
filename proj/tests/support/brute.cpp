#include "brute.hpp"

#include <stdexcept>

namespace brute {

using cstar::GradedFreeModule;
using cstar::Polynomial;
using cstar::RingPtr;

Vec Span::reduce(Vec v) const {
  for (const auto& [piv, row] : rows_) {
    if (v[piv] == 0) continue;
    const mpq_class f = v[piv];
    for (std::size_t k = 0; k < len_; ++k)
      if (row[k] != 0) v[k] -= f * row[k];
  }
  return v;
}

bool Span::add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < len_ && r[piv] == 0) ++piv;
  if (piv == len_) return false;
  const mpq_class inv = 1 / r[piv];
  for (auto& x : r) x *= inv;
  rows_.emplace_back(piv, std::move(r));
  return true;
}

bool Span::contains(const Vec& v) const {
  for (const auto& x : reduce(v))
    if (x != 0) return false;
  return true;
}

namespace {

void enumerate(const cstar::Ring& ring, std::size_t var, std::int64_t left, Exps& cur,
               std::vector<Exps>& out) {
  if (var == ring.nvars()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  const int w = ring.weights()[var];
  for (int e = static_cast<int>(left / w); e >= 0; --e) {
    cur[var] = e;
    enumerate(ring, var + 1, left - static_cast<std::int64_t>(e) * w, cur, out);
  }
  cur[var] = 0;
}

Exps exps_of(const cstar::Monomial& m, std::size_t nvars) {
  Exps e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = m[i];
  return e;
}

Polynomial monomial_poly(const RingPtr& ring, const Exps& e) {
  return Polynomial::term(ring, ring->monomial(e), cstar::Scalar(ring->field(), 1));
}

std::vector<Polynomial> times(const std::vector<Polynomial>& g, const Polynomial& m) {
  std::vector<Polynomial> out;
  for (const auto& c : g) out.push_back(c * m);
  return out;
}

/// Images of the degree-d basis of F under q, as coordinates in degree d + deg q.
std::vector<Vec> shifted_images(const RingPtr& ring, const GradedFreeModule& f,
                                const DegreeBasis& src, const Polynomial& q,
                                const DegreeBasis& dst) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::vector<Polynomial> v(f.rank(), Polynomial(ring));
    v[src[i].first] = monomial_poly(ring, src[i].second) * q;
    out.push_back(dst.coords(v));
  }
  return out;
}

}  // namespace

std::vector<Exps> monomials(const cstar::Ring& ring, std::int64_t d) {
  std::vector<Exps> out;
  if (d < 0) return out;
  Exps cur(ring.nvars(), 0);
  enumerate(ring, 0, d, cur, out);
  return out;
}

DegreeBasis::DegreeBasis(const cstar::Ring& ring, const GradedFreeModule& f, std::int64_t d)
    : d_(d), f_(&f) {
  for (std::size_t k = 0; k < f.rank(); ++k)
    for (auto& e : monomials(ring, d - f.degree(k))) {
      index_[{k, e}] = elems_.size();
      elems_.emplace_back(k, std::move(e));
    }
}

Vec DegreeBasis::coords(const std::vector<Polynomial>& v) const {
  Vec out(elems_.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    for (const auto& t : v[k].terms()) {
      if (t.mono.degree() + f_->degree(k) != d_)
        throw std::logic_error("term of the wrong degree in brute-force coordinates");
      const auto it = index_.find({k, exps_of(t.mono, v[k].ring()->nvars())});
      out[it->second] = t.coeff.rational();
    }
  return out;
}

std::optional<std::int64_t> degree_in(const GradedFreeModule& f,
                                      const std::vector<Polynomial>& g) {
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!g[k].is_zero()) return g[k].lead().mono.degree() + f.degree(k);
  return std::nullopt;
}

Span submodule_part(const RingPtr& ring, const GradedFreeModule& f, const Gens& gens,
                    std::int64_t d) {
  const DegreeBasis basis(*ring, f, d);
  Span span(basis.size());
  for (const auto& g : gens) {
    const auto dg = degree_in(f, g);
    if (!dg) continue;
    for (const auto& e : monomials(*ring, d - *dg))
      span.add(basis.coords(times(g, monomial_poly(ring, e))));
  }
  return span;
}

std::size_t quotient_dim(const RingPtr& ring, const GradedFreeModule& f, const Gens& gens,
                         std::int64_t d) {
  return DegreeBasis(*ring, f, d).size() - submodule_part(ring, f, gens, d).dim();
}

std::size_t colon_dim(const RingPtr& ring, const GradedFreeModule& f, const Gens& gens,
                      const std::vector<Polynomial>& q, std::int64_t d) {
  const DegreeBasis src(*ring, f, d);
  // Kernel of F_d -> prod_q F_{d + deg q} / M_{d + deg q}, by rank.
  std::vector<Vec> rows(src.size());
  for (const auto& qi : q) {
    const std::int64_t dq = qi.lead().mono.degree();
    const DegreeBasis dst(*ring, f, d + dq);
    const Span m = submodule_part(ring, f, gens, d + dq);
    const auto imgs = shifted_images(ring, f, src, qi, dst);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const Vec r = m.reduce(imgs[i]);
      rows[i].insert(rows[i].end(), r.begin(), r.end());
    }
  }
  if (src.size() == 0) return 0;
  Span image(rows[0].size());
  for (const auto& r : rows) image.add(r);
  return src.size() - image.dim();
}

std::size_t intersection_dim(const RingPtr& ring, const GradedFreeModule& f, const Gens& a,
                             const Gens& b, std::int64_t d) {
  Gens both = a;
  both.insert(both.end(), b.begin(), b.end());
  return submodule_part(ring, f, a, d).dim() + submodule_part(ring, f, b, d).dim() -
         submodule_part(ring, f, both, d).dim();
}

std::size_t syzygy_dim(const RingPtr& ring, const GradedFreeModule& f, const Gens& gens,
                       std::int64_t d) {
  const DegreeBasis basis(*ring, f, d);
  std::size_t source = 0;
  Span span(basis.size());
  for (const auto& g : gens) {
    const auto dg = degree_in(f, g);
    if (!dg) throw std::logic_error("zero generator in syzygy oracle");
    for (const auto& e : monomials(*ring, d - *dg)) {
      ++source;
      span.add(basis.coords(times(g, monomial_poly(ring, e))));
    }
  }
  return source - span.dim();
}

bool member(const RingPtr& ring, const GradedFreeModule& f, const Gens& gens,
            const std::vector<Polynomial>& v, std::int64_t d) {
  return submodule_part(ring, f, gens, d).contains(DegreeBasis(*ring, f, d).coords(v));
}

Gens columns(const cstar::PolyMatrix& m) {
  Gens out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

std::size_t homology_dim(const cstar::FreeComplex& c, std::size_t p, std::int64_t d) {
  const RingPtr& ring = c.ring();
  // Kernel of phi_p in degree d: rank-nullity over the degree-d basis of F_p.
  const DegreeBasis src(*ring, c.module(p), d);
  const DegreeBasis dst(*ring, c.module(p - 1), d);
  Span image_of_p(dst.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::vector<Polynomial> col = c.map(p).column(src[i].first);
    image_of_p.add(dst.coords(times(col, monomial_poly(ring, src[i].second))));
  }
  const std::size_t kernel = src.size() - image_of_p.dim();
  std::size_t boundaries = 0;
  if (p < c.length())
    boundaries = submodule_part(ring, c.module(p), columns(c.map(p + 1)), d).dim();
  return kernel - boundaries;
}

}  // namespace brute
