#include "cstar/errors.hpp"
#include "cstar/hilbert.hpp"
#include "cstar/star.hpp"

namespace cstar {

namespace {

Polynomial signed_poly(const Polynomial& f, int exponent) {
  return exponent % 2 == 0 ? f : -f;
}

ModuleVector signed_vector(const ModuleVector& v, int exponent) {
  return exponent % 2 == 0 ? v : -v;
}

std::size_t binom(int n, int p) { return koszul_subsets(n, p).size(); }

ModuleVector apply(const PolyMatrix& m, const GradedFreeModule& target,
                   const ModuleVector& v, const RingPtr& ring) {
  return ModuleVector(ring, target, m.apply(v.coords()));
}

bool zero_mod_quotient(const PolyMatrix& m) {
  return reduce_quotient(m).is_zero();
}

bool zero_mod_quotient(const ModuleVector& v) {
  for (const auto& c : v.coords())
    if (!is_zero_in_ring(c)) return false;
  return true;
}

}  // namespace

GradedFreeModule tensor_module(const GradedFreeModule& fn, const SopData& sop,
                               int p) {
  const int n = static_cast<int>(sop.n());
  std::int64_t total = 0;
  for (auto d : sop.degrees) total += d;
  const auto subsets = koszul_subsets(n, p);
  std::vector<std::int64_t> deg;
  for (std::size_t lam = 0; lam < fn.rank(); ++lam) {
    for (const auto& I : subsets) {
      std::int64_t d = fn.degree(lam) - total;
      for (int i : I) d += sop.degrees[static_cast<std::size_t>(i - 1)];
      deg.push_back(d);
    }
  }
  return GradedFreeModule(std::move(deg));
}

namespace {

/// Block diagonal with `copies` copies of the Koszul differential ∂_p.
PolyMatrix block_koszul(const SopData& sop, std::size_t copies, int p) {
  const int n = static_cast<int>(sop.n());
  const auto src = koszul_subsets(n, p);
  const std::size_t rows = binom(n, p - 1);
  PolyMatrix m(sop.ring, copies * rows, copies * src.size());
  for (std::size_t blk = 0; blk < copies; ++blk) {
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (int i : src[c]) {
        const Polynomial& xi = sop.elements[static_cast<std::size_t>(i - 1)];
        const std::size_t r = koszul_position(n, koszul_without(src[c], i));
        m.set(blk * rows + r, blk * src.size() + c,
              signed_poly(xi, koszul_s(i, src[c])));
      }
    }
  }
  return m;
}

}  // namespace

PolyMatrix tensor_koszul(const SopData& sop, std::size_t rank_fn, int p) {
  return block_koszul(sop, rank_fn, p);
}

const ModuleVector& SigmaChainMap::at(std::size_t lambda,
                                      const KoszulIndex& I) const {
  return w.at(lambda).at(I.size()).at(
      koszul_position(static_cast<int>(n), I));
}

SigmaChainMap build_sigma(const FreeComplex& f, const SopData& sop,
                          const Decomposition& dec) {
  const int n = static_cast<int>(sop.n());
  if (static_cast<int>(f.length()) != n)
    throw DimensionMismatch("complex length differs from the number of parameters");
  const RingPtr& ring = f.ring();
  const GradedFreeModule& fn = f.module(static_cast<std::size_t>(n));
  const std::size_t rank_top = fn.rank();

  SigmaChainMap s;
  s.n = static_cast<std::size_t>(n);
  s.top = fn;
  s.w.assign(rank_top, std::vector<std::vector<ModuleVector>>(
                           static_cast<std::size_t>(n + 1)));

  const auto top_subsets = koszul_subsets(n, n - 1);
  for (std::size_t lam = 0; lam < rank_top; ++lam) {
    s.w[lam][n].push_back(
        signed_vector(ModuleVector::unit(ring, fn, lam), n));
    for (const auto& I : top_subsets) {
      const int i = koszul_complement(n, I).front();
      s.w[lam][n - 1].push_back(
          signed_vector(dec.v[lam][static_cast<std::size_t>(i - 1)], n + i - 1));
    }
  }

  // Level p: the w_J (|J| = p - 1) solve phi_p(w_I) = sum ± x_i w_{I\i} for
  // all |I| = p at once. In the double complex F ⊗ K this reads
  // (-1)^p (1 ⊗ ∂)(ξ_{p-1}) = (phi_p ⊗ 1)(ξ_p) with
  // ξ_p = (-1)^{p(p+1)/2} sum_I (-1)^{t(I)} w_I ⊗ e_{I^c}.
  const FreeComplex kz = koszul(sop);
  for (int p = n - 1; p >= 1; --p) {
    const int q = n - p + 1;
    const GradedFreeModule& fp = f.module(static_cast<std::size_t>(p - 1));
    const std::size_t cq = binom(n, q), cq1 = binom(n, q - 1);

    std::vector<std::int64_t> sdeg, tdeg;
    for (std::size_t b = 0; b < fp.rank(); ++b) {
      for (std::size_t k = 0; k < cq; ++k)
        sdeg.push_back(fp.degree(b) + kz.module(static_cast<std::size_t>(q)).degree(k));
      for (std::size_t k = 0; k < cq1; ++k)
        tdeg.push_back(fp.degree(b) + kz.module(static_cast<std::size_t>(q - 1)).degree(k));
    }
    const GradedFreeModule src(sdeg), tgt(tdeg);
    PolyMatrix d = block_koszul(sop, fp.rank(), q);
    if (p % 2 != 0) d = d.scaled(Scalar(ring->field(), -1));
    const Lifter lifter(ring, tgt, columns_of(d, tgt));

    const auto level = koszul_subsets(n, p);
    const auto below = koszul_subsets(n, p - 1);
    const PolyMatrix& phi = f.map(static_cast<std::size_t>(p));
    for (std::size_t lam = 0; lam < rank_top; ++lam) {
      std::vector<Polynomial> target(tgt.rank(), Polynomial(ring));
      for (std::size_t k = 0; k < level.size(); ++k) {
        const auto img = phi.apply(s.w[lam][p][k].coords());
        const int sign = p * (p + 1) / 2 + koszul_t(level[k]);
        const std::size_t pos = koszul_position(n, koszul_complement(n, level[k]));
        for (std::size_t b = 0; b < fp.rank(); ++b)
          target[b * cq1 + pos] += signed_poly(img[b], sign);
      }
      const auto c = lifter.lift(ModuleVector(ring, tgt, std::move(target)));
      if (!c)
        throw LiftFailed("no lift at level " + std::to_string(p) + " for basis element " +
                         std::to_string(lam) + " of the top module; is the complex acyclic?");
      for (const auto& J : below) {
        const int sign = (p - 1) * p / 2 + koszul_t(J);
        const std::size_t pos = koszul_position(n, koszul_complement(n, J));
        std::vector<Polynomial> coords;
        for (std::size_t b = 0; b < fp.rank(); ++b)
          coords.push_back(signed_poly((*c)[b * cq + pos], sign));
        s.w[lam][p - 1].emplace_back(ring, fp, std::move(coords));
      }
    }
  }

  for (int p = 0; p <= n; ++p) {
    const GradedFreeModule& fp = f.module(static_cast<std::size_t>(p));
    const std::size_t cp = binom(n, p);
    PolyMatrix m(ring, fp.rank(), rank_top * cp);
    for (std::size_t lam = 0; lam < rank_top; ++lam)
      for (std::size_t k = 0; k < cp; ++k)
        for (std::size_t r = 0; r < fp.rank(); ++r)
          m.set(r, lam * cp + k, s.w[lam][p][k][r]);
    s.tensor.push_back(tensor_module(fn, sop, p));
    m.certify(s.tensor.back(), fp);
    s.sigma.push_back(std::move(m));
  }

  for (int p = 1; p <= n; ++p) {
    const PolyMatrix lhs = f.map(static_cast<std::size_t>(p)) * s.sigma[p];
    const PolyMatrix rhs = s.sigma[p - 1] * tensor_koszul(sop, rank_top, p);
    if (!zero_mod_quotient(lhs - rhs))
      throw InternalError("chain map square at position " + std::to_string(p) +
                          " does not commute");
  }
  return s;
}

std::vector<CheckResult> sigma_structure_checks(const SigmaChainMap& s,
                                                const FreeComplex& f,
                                                const SopData& sop,
                                                const Decomposition& dec) {
  const int n = static_cast<int>(s.n);
  const RingPtr& ring = f.ring();
  const std::size_t rank_top = s.top.rank();
  std::vector<CheckResult> out;

  CheckResult squares{"commuting_squares", true, "", 0};
  for (int p = 1; p <= n && squares.pass; ++p) {
    const PolyMatrix lhs = f.map(static_cast<std::size_t>(p)) * s.sigma[p];
    const PolyMatrix rhs = s.sigma[p - 1] * tensor_koszul(sop, rank_top, p);
    if (!zero_mod_quotient(lhs - rhs)) {
      squares.pass = false;
      squares.detail = "square at position " + std::to_string(p) + " does not commute";
    }
  }
  if (squares.pass) squares.detail = std::to_string(n) + " squares commute";
  out.push_back(squares);

  CheckResult sharp{"recursive_identity", true, "", 0};
  std::size_t count = 0;
  for (std::size_t lam = 0; lam < rank_top && sharp.pass; ++lam) {
    for (int p = 1; p <= n && sharp.pass; ++p) {
      for (const auto& I : koszul_subsets(n, p)) {
        const ModuleVector lhs = apply(f.map(static_cast<std::size_t>(p)),
                                       f.module(static_cast<std::size_t>(p - 1)),
                                       s.at(lam, I), ring);
        ModuleVector rhs(ring, f.module(static_cast<std::size_t>(p - 1)));
        for (int i : I) {
          const Polynomial xi = signed_poly(
              sop.elements[static_cast<std::size_t>(i - 1)], koszul_s(i, I));
          rhs += s.at(lam, koszul_without(I, i)).times(xi);
        }
        ++count;
        if (!zero_mod_quotient(lhs - rhs)) {
          sharp.pass = false;
          sharp.detail = "fails for basis element " + std::to_string(lam) +
                         " and I = " + koszul_string(I);
          break;
        }
      }
    }
  }
  if (sharp.pass) sharp.detail = std::to_string(count) + " identities hold";
  out.push_back(sharp);

  CheckResult top{"top_component_sign", true, "", 0};
  PolyMatrix expect = PolyMatrix::identity(ring, rank_top);
  if (n % 2 != 0) expect = expect.scaled(Scalar(ring->field(), -1));
  if (!(s.sigma[n] == expect)) {
    top.pass = false;
    top.detail = "top component is not (-1)^n times the identity";
  } else {
    top.detail = "top component is (-1)^" + std::to_string(n) + " times the identity";
  }
  out.push_back(top);

  CheckResult next{"decomposition_signs", true, "", 0};
  for (std::size_t lam = 0; lam < rank_top && next.pass; ++lam) {
    for (int i = 1; i <= n; ++i) {
      const ModuleVector want =
          signed_vector(dec.v[lam][static_cast<std::size_t>(i - 1)], n + i - 1);
      if (!(s.at(lam, koszul_complement(n, {i})) == want)) {
        next.pass = false;
        next.detail = "component at N\\{" + std::to_string(i) +
                      "} differs for basis element " + std::to_string(lam);
        break;
      }
    }
  }
  if (next.pass) next.detail = "next-to-top components match the decomposition";
  out.push_back(next);
  return out;
}

std::vector<CheckResult> sigma_image_checks(const SigmaChainMap& s,
                                            const FreeComplex& f,
                                            const SopData& sop) {
  const RingPtr& ring = f.ring();
  const GradedFreeModule& f0 = f.module(0);
  std::vector<CheckResult> out;
  const SubmoduleGB m = image(f.map(1), f0);
  const SubmoduleGB colon_m = colon(m, sop.elements);

  std::vector<ModuleVector> gens = columns_of(s.sigma[0], f0);
  for (auto& g : columns_of(f.map(1), f0)) gens.push_back(std::move(g));
  const SubmoduleGB sum = buchberger(ring, f0, gens);
  CheckResult eq{"sigma_colon_equality", submodule_equal(sum, colon_m), "", 0};
  eq.detail = eq.pass ? "Im sigma_0 + M equals M : Q"
                      : "Im sigma_0 + M differs from M : Q";
  out.push_back(eq);

  CheckResult cnt{"sigma_length_count", false, "", 0};
  try {
    const mpz_class lhs = quotient_length(m, colon_m);
    const mpz_class rhs = mpz_class(static_cast<unsigned long>(s.top.rank())) * sop.colength;
    cnt.pass = lhs == rhs;
    cnt.detail = "dim (M:Q)/M = " + lhs.get_str() + ", rank F_n * dim R/Q = " + rhs.get_str();
  } catch (const NonPolynomialDifference& e) {
    cnt.detail = e.what();
  }
  out.push_back(cnt);
  return out;
}

}  // namespace cstar
