// Sparse module polynomials and the Buchberger core. Internal header.
#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cstar/groebner.hpp"
#include "cstar/ring.hpp"
#include "cstar/scalar.hpp"

namespace cstar::gb {

struct MTerm {
  Monomial m;
  std::uint32_t comp;
  Scalar c;
};

/// Terms strictly decreasing in the term order, nonzero coefficients.
using MPoly = std::vector<MTerm>;

class TermOrder {
 public:
  TermOrder(const Ring& ring, MonomialOrder order,
            std::vector<std::int64_t> comp_degrees)
      : ring_(&ring), order_(order), comp_deg_(std::move(comp_degrees)) {}

  const Ring& ring() const { return *ring_; }
  std::size_t ncomps() const { return comp_deg_.size(); }
  std::int64_t degree(const Monomial& m, std::uint32_t c) const {
    return m.degree() + comp_deg_[c];
  }

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b,
          std::uint32_t cb) const {
    if (order_.module == ModuleOrder::PositionOverTerm) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return order_.compare(a, b);
    }
    const std::int64_t da = degree(a, ca), db = degree(b, cb);
    if (da != db) return da < db ? -1 : 1;
    if (int c = order_.compare(a, b)) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int cmp(const MTerm& a, const MTerm& b) const {
    return cmp(a.m, a.comp, b.m, b.comp);
  }

 private:
  const Ring* ring_;
  MonomialOrder order_;
  std::vector<std::int64_t> comp_deg_;
};

void sort_terms(const TermOrder& ord, MPoly& p);
MPoly add(const TermOrder& ord, const MPoly& a, const MPoly& b);
/// a[start..] - f * m * g
MPoly sub_multiple(const TermOrder& ord, const MPoly& a, std::size_t start,
                   const Scalar& f, const Monomial& m, const MPoly& g);
MPoly scale(const MPoly& p, const Scalar& c);
void make_monic(MPoly& p);

inline constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

/// Remainder of f modulo g (skipping g[skip]). Full reduction reduces every
/// term, otherwise only the leading term is reduced repeatedly.
MPoly reduce(const TermOrder& ord, MPoly f, const std::vector<MPoly>& g,
             bool full = true, std::size_t skip = kNoSkip);

/// Reduced Gröbner basis, monic, sorted by decreasing leading term.
std::vector<MPoly> groebner(const TermOrder& ord, std::vector<MPoly> gens);

/// Conversion between coordinate vectors and sparse module polynomials.
/// `offset` shifts component indices.
void append_vector(const ModuleVector& v, std::uint32_t offset, MPoly& out);
MPoly to_mpoly(const TermOrder& ord, const ModuleVector& v);
/// Coordinates [first, first + rank) of p as a vector in `ambient`.
ModuleVector from_mpoly(const RingPtr& ring, const GradedFreeModule& ambient,
                        const MPoly& p, std::uint32_t first = 0);

/// J·e_k for k in [first, first + count), with J the ring's quotient basis.
void append_quotient_multiples(const Ring& ring, std::uint32_t first,
                               std::uint32_t count, std::vector<MPoly>& out);

}  // namespace cstar::gb
