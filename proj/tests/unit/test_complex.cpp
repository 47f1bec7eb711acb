#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "cstar/corpus.hpp"
#include "cstar/errors.hpp"
#include "cstar/hilbert.hpp"
#include "helpers.hpp"

using namespace cstar;
using th::P;
using th::Ps;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FreeComplex exa_complex(const RingPtr& r) {
  PolyMatrix phi1(r, 1, 2), phi2(r, 2, 1);
  phi1.set(0, 0, P(r, "x^2"));
  phi1.set(0, 1, P(r, "y^2"));
  phi2.set(0, 0, P(r, "-y^2"));
  phi2.set(1, 0, P(r, "x^2"));
  return FreeComplex(r, {GradedFreeModule({0}), GradedFreeModule({2, 2}), GradedFreeModule({4})},
                     {phi1, phi2});
}

}  // namespace

TEST_CASE("Koszul sign conventions") {
  CHECK(koszul_s(1, {1, 2}) == 0);
  CHECK(koszul_s(2, {1, 2}) == 1);
  CHECK(koszul_t({1, 3}) == 2);
  CHECK(koszul_subsets(3, 2) == std::vector<KoszulIndex>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(koszul_position(3, {2, 3}) == 2);
  CHECK(koszul_complement(3, {2}) == KoszulIndex{1, 3});
  CHECK(koszul_without({1, 2, 3}, 2) == KoszulIndex{1, 3});

  const auto r = th::ring({"x", "y"});
  const auto k = koszul(validate_sop(r, Ps(r, "x, y")));
  CHECK(k.map(2).at(0, 0) == P(r, "-y"));
  CHECK(k.map(2).at(1, 0) == P(r, "x"));
  CHECK(k.map(1).at(0, 0) == P(r, "x"));
  CHECK(k.map(1).at(0, 1) == P(r, "y"));
}

TEST_CASE("Koszul complexes: ranks, composition, acyclicity") {
  const std::vector<std::string> names{"x", "y", "z", "w"};
  std::mt19937_64 rng(8);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto r = th::ring(std::vector<std::string>(names.begin(), names.begin() + n));
    std::vector<Polynomial> x;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1 + static_cast<int>(rng() % 3);
      x.push_back(Polynomial::term(r, r->monomial(e), Scalar(r->field(), 1)));
    }
    const auto sop = validate_sop(r, x);
    const auto k = koszul(sop);
    std::size_t total = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      CHECK(k.module(p).rank() == binom(n, p));
      total += k.module(p).rank();
    }
    CHECK(total == (std::size_t{1} << n));
    CHECK_FALSE(check_complex(k));
    CHECK(certify_acyclic(k).ok);
    CHECK(check_QF_containment(k, sop));
  }
}

TEST_CASE("validate_sop examples") {
  const auto r = th::ring({"x", "y"});
  CHECK(validate_sop(r, Ps(r, "x, y")).colength == 1);
  CHECK(validate_sop(r, Ps(r, "x^2, y^3")).colength == 6);
  CHECK_THROWS_AS(validate_sop(r, Ps(r, "x^2, x*y")), NotASop);
  CHECK_THROWS_AS(validate_sop(r, Ps(r, "x")), PreconditionFailed);
  CHECK_THROWS_AS(validate_sop(r, Ps(r, "x + y^2, y")), ValidationError);
  CHECK_THROWS_AS(validate_sop(r, Ps(r, "1, y")), ValidationError);
}

TEST_CASE("check_complex examples") {
  const auto r = th::ring({"x", "y"});
  const auto c = exa_complex(r);
  CHECK_FALSE(check_complex(c));

  auto maps = c.maps();
  maps[1].set(0, 0, P(r, "y^2"));
  const auto flipped = check_complex(FreeComplex(r, c.modules(), maps));
  REQUIRE(flipped);
  CHECK(flipped->kind == ComplexDefect::Kind::Composition);
  CHECK(flipped->p == 2);

  PolyMatrix m(r, 1, 1);
  m.set(0, 0, P(r, "x + 1"));
  const auto inhom = check_complex(
      FreeComplex(r, {GradedFreeModule({0}), GradedFreeModule({1})}, {m}));
  REQUIRE(inhom);
  CHECK(inhom->kind == ComplexDefect::Kind::Homogeneity);
}

TEST_CASE("certify_acyclic examples") {
  const auto r = th::ring({"x", "y"});
  const auto c = exa_complex(r);
  const auto cert = certify_acyclic(c);
  CHECK(cert.ok);
  PolyMatrix zero(r, 1, 1);
  const auto bad = certify_acyclic(FreeComplex(r, {GradedFreeModule({0}), GradedFreeModule({0})}, {zero}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failed_position == 1);

  // phi_1 = (x y), phi_2 = (-xy, x^2)^T: a complex whose H_1 contains the
  // Koszul relation (-y, x).
  PolyMatrix phi1(r, 1, 2), phi2(r, 2, 1);
  phi1.set(0, 0, P(r, "x"));
  phi1.set(0, 1, P(r, "y"));
  phi2.set(0, 0, P(r, "-x*y"));
  phi2.set(1, 0, P(r, "x^2"));
  const FreeComplex holey(r, {GradedFreeModule({0}), GradedFreeModule({1, 1}), GradedFreeModule({3})},
                          {phi1, phi2});
  CHECK_FALSE(check_complex(holey));
  const auto h = certify_acyclic(holey);
  CHECK_FALSE(h.ok);
  CHECK(h.failed_position == 1);
  // The dense oracle agrees: H_1 is nonzero in degree 2.
  CHECK(brute::homology_dim(holey, 1, 2) == 1);
  for (std::int64_t d = 0; d <= 6; ++d) {
    CHECK(brute::homology_dim(c, 1, d) == 0);
    CHECK(brute::homology_dim(c, 2, d) == 0);
  }
}

TEST_CASE("check_QF_containment examples") {
  const auto r = th::ring({"x", "y"});
  const auto sop = validate_sop(r, Ps(r, "x, y"));
  CHECK(check_QF_containment(exa_complex(r), sop));
  PolyMatrix phi1(r, 1, 2), phi2(r, 2, 1);
  phi1.set(0, 0, P(r, "x"));
  phi2.set(1, 0, P(r, "1"));
  const FreeComplex unit(r, {GradedFreeModule({0}), GradedFreeModule({1, 1}), GradedFreeModule({1})},
                         {phi1, phi2});
  CHECK_FALSE(check_QF_containment(unit, sop));
  const FreeComplex zero_top(r, {GradedFreeModule({0}), GradedFreeModule({1, 1}), GradedFreeModule()},
                             {phi1, PolyMatrix(r, 2, 0)});
  CHECK(check_QF_containment(zero_top, sop));
}

TEST_CASE("decompose_images on the running example") {
  const auto r = th::ring({"x", "y"});
  const auto c = exa_complex(r);
  const auto sop = validate_sop(r, Ps(r, "x, y"));
  const auto dec = decompose_images(c.map(2), c.module(1), sop);
  REQUIRE(dec.v.size() == 1);
  CHECK(dec.v[0][0] == th::vec(r, c.module(1), {"0", "x"}));
  CHECK(dec.v[0][1] == th::vec(r, c.module(1), {"-y", "0"}));

  const auto zero = decompose_images(PolyMatrix(r, 2, 1), c.module(1), sop);
  CHECK(zero.v[0][0].is_zero());
  CHECK(zero.v[0][1].is_zero());
}

TEST_CASE("decompose_images recombines on the corpus") {
  for (const auto& inst : standard_corpus(12, 100)) {
    const auto& f = inst.problem.complex;
    const auto& sop = inst.problem.sop;
    const std::size_t n = sop.n();
    const auto dec = decompose_images(f.map(n), f.module(n - 1), sop);
    for (std::size_t lam = 0; lam < f.module(n).rank(); ++lam) {
      ModuleVector sum(f.ring(), f.module(n - 1));
      for (std::size_t i = 0; i < n; ++i) sum += dec.v[lam][i].times(sop.elements[i]);
      CHECK(sum == ModuleVector(f.ring(), f.module(n - 1), f.map(n).column(lam)));
    }
    CHECK(check_QF_containment(f, sop));
  }
}
