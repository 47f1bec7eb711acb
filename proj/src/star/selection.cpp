#include "cstar/dense.hpp"
#include "cstar/errors.hpp"
#include "cstar/star.hpp"

namespace cstar {

namespace {

Polynomial signed_poly(const Polynomial& f, int exponent) {
  return exponent % 2 == 0 ? f : -f;
}

/// Position of v_lambda ⊗ ě_i in F_n ⊗ K_{n-1}.
std::size_t check_index(int n, std::size_t lambda, int i) {
  return lambda * static_cast<std::size_t>(n) +
         koszul_position(n, koszul_complement(n, {i}));
}

}  // namespace

BasisSelection select_basis(const Decomposition& dec, const SopData& sop) {
  const int n = static_cast<int>(sop.n());
  const RingPtr& ring = sop.ring;
  const Field field = ring->field();
  const GradedFreeModule& target = dec.target;
  const std::size_t r = target.rank();
  const std::size_t rank_top = dec.v.size();

  // Degree-0 parts: entry (u, (lambda, i)) is the constant coefficient of
  // coordinate u of v_(lambda,i).
  DenseMatrix residues(field, r, rank_top * static_cast<std::size_t>(n));
  for (std::size_t lam = 0; lam < rank_top; ++lam)
    for (int i = 1; i <= n; ++i)
      for (std::size_t u = 0; u < r; ++u)
        residues.set(u, lam * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1),
                     dec.v[lam][static_cast<std::size_t>(i - 1)][u].constant_term());
  const DenseMatrix::Pivots piv = residues.eliminate();

  BasisSelection sel;
  std::vector<bool> pivot_col(rank_top * static_cast<std::size_t>(n), false);
  std::vector<bool> pivot_row(r, false);
  for (std::size_t k = 0; k < piv.cols.size(); ++k) {
    pivot_col[piv.cols[k]] = true;
    pivot_row[piv.rows[k]] = true;
  }
  for (std::size_t c = 0; c < pivot_col.size(); ++c) {
    const BasisSelection::Pair pr{c / static_cast<std::size_t>(n),
                                  static_cast<int>(c % static_cast<std::size_t>(n)) + 1};
    (pivot_col[c] ? sel.chosen : sel.remaining).push_back(pr);
  }
  for (std::size_t u = 0; u < r; ++u)
    if (!pivot_row[u]) sel.unit_rows.push_back(u);

  auto vec = [&dec](const BasisSelection::Pair& pr) -> const ModuleVector& {
    return dec.v[pr.first][static_cast<std::size_t>(pr.second - 1)];
  };
  std::vector<ModuleVector> basis;
  for (const auto& pr : sel.chosen) basis.push_back(vec(pr));
  for (std::size_t u : sel.unit_rows) basis.push_back(ModuleVector::unit(ring, target, u));
  if (basis.size() != r)
    throw InternalError("selected " + std::to_string(basis.size()) +
                        " basis vectors for a module of rank " + std::to_string(r));

  DenseMatrix transition(field, r, r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t u = 0; u < r; ++u)
      transition.set(u, c, basis[c][u].constant_term());
  if (transition.rank() != r)
    throw InternalError("selected vectors do not form a basis: singular degree-0 part");

  const Lifter lifter(ring, target, basis);
  const std::size_t nc = sel.chosen.size();
  for (const auto& pr : sel.remaining) {
    auto c = lifter.lift(vec(pr));
    if (!c)
      throw InternalError("v_(" + std::to_string(pr.first) + "," +
                          std::to_string(pr.second) + ") is not in the span of the selected basis");
    std::vector<Polynomial> a(c->begin(), c->begin() + static_cast<std::ptrdiff_t>(nc));
    std::vector<Polynomial> b(c->begin() + static_cast<std::ptrdiff_t>(nc), c->end());
    for (const auto& bu : b)
      if (!bu.constant_term().is_zero())
        throw InternalError("coefficient " + bu.to_string() +
                            " on a unit row has a nonzero constant term");
    sel.a.push_back(std::move(a));
    sel.b.push_back(std::move(b));
  }
  return sel;
}

std::string StarLabel::to_string() const {
  switch (kind) {
    case Kind::Bracket:
      return "[" + std::to_string(index) + "," + koszul_string(subset) + "]";
    case Kind::Angle:
      return "<" + std::to_string(index) + ">";
    case Kind::Star:
      return "*v(" + std::to_string(index) + "," + std::to_string(j) + ")";
  }
  return "";
}

StarTop build_star_top(const BasisSelection& sel, const SplitComplex& split,
                       const SigmaChainMap& s, const SopData& sop) {
  const int n = static_cast<int>(sop.n());
  const std::size_t nn = s.n;
  const RingPtr& ring = sop.ring;
  const std::size_t rank_top = s.top.rank();
  const FreeComplex& sf = split.complex;
  const GradedFreeModule& prime_top = sf.module(nn);  // F_n ⊗ K_{n-1}
  const GradedFreeModule& cone_next = sf.module(nn - 1);
  const std::size_t brackets = s.tensor[nn - 2].rank();
  const auto lower = koszul_subsets(n, n - 2);

  StarTop out{GradedFreeModule(), GradedFreeModule(), PolyMatrix(ring, 0, 0),
              PolyMatrix(ring, 0, 0), PolyMatrix(ring, 0, 0),
              PolyMatrix(ring, 0, 0), {}, {}};

  // ∗F_{n-1}: all brackets, then the unit rows U.
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < brackets; ++k) rows.push_back(k);
  for (std::size_t u : sel.unit_rows) rows.push_back(brackets + u);
  out.next = cone_next.select(rows);
  for (std::size_t lam = 0; lam < rank_top; ++lam)
    for (const auto& K : lower)
      out.next_labels.push_back({StarLabel::Kind::Bracket, lam, K, 0});
  for (std::size_t u : sel.unit_rows)
    out.next_labels.push_back({StarLabel::Kind::Angle, u, {}, 0});

  // ∗v_(mu,j) = (-1)^j v_mu ⊗ ě_j + sum over Λ′ of (-1)^(i-1) a v_lambda ⊗ ě_i.
  std::vector<std::int64_t> top_deg;
  PolyMatrix star(ring, prime_top.rank(), sel.remaining.size());
  for (std::size_t k = 0; k < sel.remaining.size(); ++k) {
    const auto [mu, j] = sel.remaining[k];
    const std::size_t at = check_index(n, mu, j);
    star.set(at, k, star.at(at, k) + signed_poly(Polynomial::constant(ring, 1), j));
    for (std::size_t l = 0; l < sel.chosen.size(); ++l) {
      const auto [lam, i] = sel.chosen[l];
      const std::size_t pos = check_index(n, lam, i);
      star.set(pos, k, star.at(pos, k) + signed_poly(sel.a[k][l], i - 1));
    }
    top_deg.push_back(prime_top.degree(at));
    out.top_labels.push_back({StarLabel::Kind::Star, mu, {}, j});
  }
  out.top = GradedFreeModule(top_deg);
  star.certify(out.top, prime_top);
  out.star_vectors = star;

  // Restriction of ′φ_n; the F_{n-1} block must vanish off U.
  const PolyMatrix image = reduce_quotient(sf.map(nn) * star);
  std::vector<bool> kept(cone_next.rank(), false);
  for (std::size_t r : rows) kept[r] = true;
  for (std::size_t r = 0; r < image.rows(); ++r)
    for (std::size_t c = 0; c < image.cols(); ++c)
      if (!kept[r] && !image.at(r, c).is_zero())
        throw ClosedFormMismatch("top map has a component on basis row " +
                                 std::to_string(r - brackets) + " outside U");
  out.phi_top = image.select_rows(rows);
  out.phi_top.certify(out.top, out.next);

  // Closed form: (-1)^j [v_mu ⊗ ∂ě_j] + sum (-1)^(i-1) a [v_lambda ⊗ ∂ě_i]
  // + sum b_u <u>.
  PolyMatrix closed(ring, rows.size(), sel.remaining.size());
  auto add_boundary = [&](std::size_t col, std::size_t lam, int i,
                          const Polynomial& coeff) {
    const KoszulIndex check = koszul_complement(n, {i});
    for (int m : check) {
      const std::size_t r =
          lam * lower.size() + koszul_position(n, koszul_without(check, m));
      const Polynomial term =
          signed_poly(sop.elements[static_cast<std::size_t>(m - 1)] * coeff,
                      koszul_s(m, check));
      closed.set(r, col, closed.at(r, col) + term);
    }
  };
  for (std::size_t k = 0; k < sel.remaining.size(); ++k) {
    const auto [mu, j] = sel.remaining[k];
    add_boundary(k, mu, j, signed_poly(Polynomial::constant(ring, 1), j));
    for (std::size_t l = 0; l < sel.chosen.size(); ++l) {
      const auto [lam, i] = sel.chosen[l];
      if (!sel.a[k][l].is_zero()) add_boundary(k, lam, i, signed_poly(sel.a[k][l], i - 1));
    }
    for (std::size_t m = 0; m < sel.unit_rows.size(); ++m)
      closed.set(brackets + m, k, sel.b[k][m]);
  }
  out.closed_form = reduce_quotient(closed);
  if (!(out.closed_form == out.phi_top))
    throw ClosedFormMismatch("restricted top map differs from its closed form");

  out.phi_next = reduce_quotient(sf.map(nn - 1).select_columns(rows));
  out.phi_next.certify(out.next, sf.module(nn - 2));
  return out;
}

}  // namespace cstar
