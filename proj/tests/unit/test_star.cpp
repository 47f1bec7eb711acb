#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "cstar/corpus.hpp"
#include "cstar/errors.hpp"
#include "cstar/star.hpp"
#include "helpers.hpp"

using namespace cstar;
using th::P;
using th::Ps;

namespace {

const std::vector<CorpusInstance>& corpus() {
  static const auto c = standard_corpus(10, 300);
  return c;
}

}  // namespace

TEST_CASE("sigma on the running example") {
  const auto ex = example_a();
  const auto& f = ex.problem.complex;
  const auto& sop = ex.problem.sop;
  const auto r = f.ring();
  const auto dec = decompose_images(f.map(2), f.module(1), sop);
  const auto s = build_sigma(f, sop, dec);
  CHECK(s.at(0, {1}) == th::vec(r, f.module(1), {"y", "0"}));
  CHECK(s.at(0, {2}) == th::vec(r, f.module(1), {"0", "x"}));
  CHECK(s.at(0, {}) == th::vec(r, f.module(0), {"x*y"}));
  CHECK(s.sigma[2] == PolyMatrix::identity(r, 1));
  for (const auto& c : sigma_structure_checks(s, f, sop, dec)) CHECK_MESSAGE(c.pass, c.name);
  for (const auto& c : sigma_image_checks(s, f, sop)) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("cone and split on the running example") {
  const auto ex = example_a();
  const auto& f = ex.problem.complex;
  const auto& sop = ex.problem.sop;
  const auto r = f.ring();
  const auto s = build_sigma(f, sop, decompose_images(f.map(2), f.module(1), sop));
  const auto cone = mapping_cone(f, s, sop);
  CHECK(cone.length() == 3);
  CHECK(cone.map(1).at(0, 0) == P(r, "x*y"));
  CHECK(cone.map(1).at(0, 1) == P(r, "x^2"));
  CHECK(cone.map(1).at(0, 2) == P(r, "y^2"));
  CHECK_FALSE(check_complex(cone));
  CHECK(certify_acyclic(cone).ok);

  const auto split = split_top(cone, s);
  CHECK(split.splitting * cone.map(3) == PolyMatrix::identity(r, 1));
  const auto& top = split.complex.map(2);
  REQUIRE(top.cols() == 2);
  CHECK(top.column(0) == std::vector<Polynomial>{P(r, "x"), P(r, "-y"), P(r, "0")});
  CHECK(top.column(1) == std::vector<Polynomial>{P(r, "y"), P(r, "0"), P(r, "-x")});
  CHECK(split.complex.module(2).rank() == 2);
  CHECK((split.complex.map(1) * top).is_zero());
  CHECK(certify_acyclic(split.complex).ok);
}

TEST_CASE("basis selection and top maps on the running example") {
  const auto ex = example_a();
  const auto pl = run_star_pipeline(ex.problem.complex, ex.problem.sop);
  const auto r = ex.problem.ring;
  const auto& sel = *pl.selection;
  CHECK(sel.chosen.empty());
  CHECK(sel.unit_rows == std::vector<std::size_t>{0, 1});
  REQUIRE(sel.b.size() == 2);
  CHECK(sel.b[0] == std::vector<Polynomial>{P(r, "0"), P(r, "x")});
  CHECK(sel.b[1] == std::vector<Polynomial>{P(r, "-y"), P(r, "0")});

  const auto& top = *pl.top;
  CHECK(top.star_vectors.column(0) == std::vector<Polynomial>{P(r, "0"), P(r, "-1")});
  CHECK(top.star_vectors.column(1) == std::vector<Polynomial>{P(r, "1"), P(r, "0")});
  CHECK(top.phi_top.column(0) == std::vector<Polynomial>{P(r, "-y"), P(r, "0"), P(r, "x")});
  CHECK(top.phi_top.column(1) == std::vector<Polynomial>{P(r, "x"), P(r, "-y"), P(r, "0")});
  CHECK(top.closed_form == top.phi_top);

  const auto& star = pl.star;
  CHECK(star.complex.module(2) == GradedFreeModule({3, 3}));
  CHECK(star.complex.module(1) == GradedFreeModule({2, 2, 2}));
  CHECK_FALSE(star.top_vanished);
  CHECK(star.labels[1][0] == StarLabel{StarLabel::Kind::Bracket, 0, {}, 0});
  CHECK(star.labels[1][1] == StarLabel{StarLabel::Kind::Angle, 0, {}, 0});
  CHECK(star.labels[2][1] == StarLabel{StarLabel::Kind::Star, 0, {}, 2});
  CHECK(submodule_equal(image(star.complex.map(1), star.complex.module(0)),
                        ideal(r, Ps(r, "x^2, x*y, y^2"))));
}

TEST_CASE("a unit decomposition vector is chosen and removed from U") {
  const auto ex = example_unit_top();
  const auto pl = run_star_pipeline(ex.problem.complex, ex.problem.sop);
  CHECK(pl.selection->chosen.size() == 2);
  CHECK(pl.selection->unit_rows.empty());
  CHECK(pl.star.top_vanished);
  CHECK(pl.star.complex.module(2).rank() == 0);
  CHECK(pl.star.complex.length() == 2);
}

TEST_CASE("three-variable complete intersection") {
  const auto ex = example_ci3();
  const auto star = star_transform(ex.problem.complex, ex.problem.sop);
  const auto r = ex.problem.ring;
  CHECK(star.complex.module(1).rank() == 4);
  CHECK(submodule_equal(image(star.complex.map(1), star.complex.module(0)),
                        ideal(r, Ps(r, "x^2, y^2, z^2, x*y*z"))));
}

TEST_CASE("zero top module is the identity transform") {
  const auto r = th::ring({"x", "y"});
  // 0 -> 0 -> R(-2) -> R.
  PolyMatrix phi1(r, 1, 1);
  phi1.set(0, 0, P(r, "x^2"));
  const FreeComplex f(r, {GradedFreeModule({0}), GradedFreeModule({2}), GradedFreeModule()},
                      {phi1, PolyMatrix(r, 1, 0)});
  const auto sop = validate_sop(r, Ps(r, "x, y"));
  const auto star = star_transform(f, sop);
  CHECK(star.complex == f);
  CHECK(star.top_vanished);
  CHECK(submodule_equal(colon(ideal(r, Ps(r, "x^2")), sop.elements), ideal(r, Ps(r, "x^2"))));
}

TEST_CASE("preconditions") {
  const auto r = th::ring({"x", "y"});
  const auto sop = validate_sop(r, Ps(r, "x, y"));
  PolyMatrix phi1(r, 1, 2), phi2(r, 2, 1);
  phi1.set(0, 0, P(r, "x"));
  phi2.set(1, 0, P(r, "1"));
  const FreeComplex unit(r, {GradedFreeModule({0}), GradedFreeModule({1, 1}), GradedFreeModule({1})},
                         {phi1, phi2});
  try {
    star_transform(unit, sop);
    FAIL("expected a precondition failure");
  } catch (const PreconditionFailed& e) {
    CHECK(std::string(e.what()).find("Im φn ⊆ QFn−1") != std::string::npos);
  }

  const auto r3 = th::ring({"x", "y", "z"});
  const auto k2 = koszul(validate_sop(r, Ps(r, "x, y")));
  CHECK_THROWS_AS(star_transform(k2, validate_sop(r3, Ps(r3, "x, y, z"))), Error);

  PolyMatrix a(r, 1, 2), b(r, 2, 1);
  a.set(0, 0, P(r, "x"));
  a.set(0, 1, P(r, "y"));
  b.set(0, 0, P(r, "-x*y"));
  b.set(1, 0, P(r, "x^2"));
  const FreeComplex holey(r, {GradedFreeModule({0}), GradedFreeModule({1, 1}), GradedFreeModule({3})},
                          {a, b});
  CHECK_THROWS_AS(star_transform(holey, sop), PreconditionFailed);
}

TEST_CASE("structural identities on the corpus") {
  for (const auto& inst : corpus()) {
    CAPTURE(inst.name);
    const auto& f = inst.problem.complex;
    const auto& sop = inst.problem.sop;
    const std::size_t n = sop.n();
    const auto pl = run_star_pipeline(f, sop);
    const auto& s = *pl.sigma;
    for (std::size_t p = 1; p <= n; ++p)
      CHECK(reduce_quotient(f.map(p) * s.sigma[p] -
                            s.sigma[p - 1] * tensor_koszul(sop, s.top.rank(), static_cast<int>(p)))
                .is_zero());
    for (const auto& c : sigma_structure_checks(s, f, sop, *pl.dec)) CHECK_MESSAGE(c.pass, c.name);
    for (const auto& c : sigma_image_checks(s, f, sop)) CHECK_MESSAGE(c.pass, c.name);

    CHECK_FALSE(check_complex(*pl.cone));
    CHECK(certify_acyclic(*pl.cone).ok);
    CHECK(certify_acyclic(pl.split->complex).ok);
    CHECK(pl.split->splitting * pl.cone->map(n + 1) ==
          PolyMatrix::identity(f.ring(), f.module(n).rank()));

    const auto& sel = *pl.selection;
    CHECK(sel.chosen.size() + sel.unit_rows.size() == f.module(n - 1).rank());
    CHECK(sel.remaining.size() == n * f.module(n).rank() - sel.chosen.size());
    for (std::size_t k = 0; k < sel.remaining.size(); ++k) {
      ModuleVector rebuilt(f.ring(), f.module(n - 1));
      for (std::size_t l = 0; l < sel.chosen.size(); ++l)
        rebuilt += pl.dec->v[sel.chosen[l].first][sel.chosen[l].second - 1].times(sel.a[k][l]);
      for (std::size_t m = 0; m < sel.unit_rows.size(); ++m) {
        CHECK(sel.b[k][m].constant_term().is_zero());
        rebuilt += ModuleVector::unit(f.ring(), f.module(n - 1), sel.unit_rows[m]).times(sel.b[k][m]);
      }
      const auto [mu, j] = sel.remaining[k];
      CHECK(rebuilt == pl.dec->v[mu][j - 1]);
    }
    CHECK(pl.top->closed_form == pl.top->phi_top);

    const auto& star = pl.star.complex;
    CHECK_FALSE(check_complex(star));
    CHECK(certify_acyclic(star).ok);
    for (std::int64_t d = 0; d <= 6; ++d)
      for (std::size_t p = 1; p <= star.length(); ++p)
        CHECK(brute::homology_dim(star, p, d) == 0);
  }
}

TEST_CASE("image of the first map does not depend on the decomposition") {
  const auto ex = example_a();
  const auto& f = ex.problem.complex;
  const auto& sop = ex.problem.sop;
  const auto r = f.ring();
  Decomposition alt{f.module(1),
                    {{th::vec(r, f.module(1), {"y", "x"}), th::vec(r, f.module(1), {"-x-y", "0"})}}};
  // x*(y, x) + y*(-x-y, 0) = (-y^2, x^2).
  const auto s = build_sigma(f, sop, alt);
  const auto split = split_top(mapping_cone(f, s, sop), s);
  const auto top = build_star_top(select_basis(alt, sop), split, s, sop);
  const auto canonical = star_transform(f, sop);
  CHECK(submodule_equal(image(top.phi_next, f.module(0)),
                        image(canonical.complex.map(1), f.module(0))));
  CHECK(top.closed_form == top.phi_top);
}

TEST_CASE("prime field run matches the rational one on the running example") {
  const auto q = example_a();
  const auto p = example_a(Field::prime(32003));
  const auto sq = star_transform(q.problem.complex, q.problem.sop);
  const auto sp = star_transform(p.problem.complex, p.problem.sop);
  REQUIRE(sq.complex.length() == sp.complex.length());
  for (std::size_t k = 0; k <= sq.complex.length(); ++k)
    CHECK(sq.complex.module(k) == sp.complex.module(k));
  CHECK(sq.labels == sp.labels);
  CHECK(sq.complex.map(2).at(0, 0).to_string() == sp.complex.map(2).at(0, 0).to_string());
}
