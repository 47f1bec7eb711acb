#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cstar/corpus.hpp"
#include "cstar/errors.hpp"
#include "cstar/verifier.hpp"
#include "helpers.hpp"

using namespace cstar;
using th::P;
using th::Ps;

namespace {

StarComplex tamper(const StarComplex& s, std::size_t p, std::size_t row, std::size_t col,
                   const Polynomial& value) {
  auto maps = s.complex.maps();
  PolyMatrix m(s.complex.ring(), maps[p - 1].rows(), maps[p - 1].cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, maps[p - 1].at(i, j));
  m.set(row, col, value);
  maps[p - 1] = m;
  return StarComplex{FreeComplex(s.complex.ring(), s.complex.modules(), maps), s.labels,
                     s.top_vanished};
}

}  // namespace

TEST_CASE("verify_star passes on the running example") {
  const auto ex = example_a();
  const auto star = star_transform(ex.problem.complex, ex.problem.sop);
  const auto rep = verify_star(ex.problem.complex, ex.problem.sop, star);
  CHECK(rep.verdict());
  REQUIRE(rep.checks.size() == star_check_names().size());
  for (std::size_t k = 0; k < rep.checks.size(); ++k)
    CHECK(rep.checks[k].name == star_check_names()[k]);
  CHECK(rep.assumptions.empty());
}

TEST_CASE("verify_star detects tampering") {
  const auto ex = example_a();
  const auto r = ex.problem.ring;
  const auto star = star_transform(ex.problem.complex, ex.problem.sop);

  const auto unit = tamper(star, 2, 1, 0, P(r, "5"));
  const auto rep = verify_star(ex.problem.complex, ex.problem.sop, unit);
  CHECK_FALSE(rep.verdict());
  CHECK_FALSE(rep.find("top_minimality")->pass);

  const auto sign = tamper(star, 2, 2, 0, P(r, "-x"));
  const auto rep2 = verify_star(ex.problem.complex, ex.problem.sop, sign);
  CHECK_FALSE(rep2.verdict());
  CHECK((!rep2.find("composition_zero")->pass || !rep2.find("acyclicity")->pass));
}

TEST_CASE("colon_length_check examples") {
  const auto ex = example_a();
  const auto m = image(ex.problem.complex.map(1), ex.problem.complex.module(0));
  const auto c = colon_length_check(m, ex.problem.sop, 1);
  CHECK(c.pass);
  CHECK(c.detail.find("= 1") != std::string::npos);

  const auto r = th::ring({"x", "y"});
  const auto sop = validate_sop(r, Ps(r, "x, y"));
  CHECK(colon_length_check(ideal(r, Ps(r, "x^2")), sop, 0).pass);

  const auto ci = example_ci3();
  const auto m3 = image(ci.problem.complex.map(1), ci.problem.complex.module(0));
  CHECK(colon_length_check(m3, ci.problem.sop, 1).pass);
}

TEST_CASE("depth_positive_check examples") {
  const auto r = th::ring({"x", "y"});
  CHECK(depth_positive_check(ideal(r, Ps(r, "x"))));
  CHECK_FALSE(depth_positive_check(ideal(r, Ps(r, "x^2, x*y, y^2"))));
  CHECK_FALSE(depth_positive_check(ideal(r, Ps(r, "x, y"))));
}

TEST_CASE("saturate examples") {
  const auto r = th::ring({"x", "y"});
  const auto m = irrelevant_ideal(r);
  const auto s1 = saturate(ideal(r, Ps(r, "x^2, x*y, y^2")), m, 10);
  CHECK(s1.module.is_everything());
  const auto s2 = saturate(ideal(r, Ps(r, "x^2, x*y")), m, 10);
  CHECK(th::strings(s2.module) == std::vector<std::string>{"x"});
  CHECK(s2.iterations >= 1);
  const auto s3 = saturate(ideal(r, Ps(r, "x")), m, 10);
  CHECK(s3.iterations == 0);
  CHECK(submodule_equal(saturate(s2.module, m, 10).module, s2.module));
  CHECK_THROWS_AS(saturate(ideal(r, Ps(r, "x^4, y^4")), m, 2), IterationLimit);
}

TEST_CASE("iteration driver") {
  const auto ex = example_a();
  const auto r = ex.problem.ring;
  CHECK(star_iteration_driver(ex.problem.complex, ex.problem.sop, 0).rounds.empty());

  const auto d = star_iteration_driver(ex.problem.complex, ex.problem.sop, 2);
  REQUIRE(d.rounds.size() == 2);
  for (const auto& round : d.rounds) {
    CHECK(round.oracle_match);
    CHECK(round.report.verdict());
  }
  const auto& second = d.rounds[1].star.complex;
  CHECK(submodule_equal(image(second.map(1), second.module(0)), ideal(r, Ps(r, "x, y"))));
  const auto twice = colon(colon(ideal(r, Ps(r, "x^2, y^2")), ex.problem.sop.elements),
                           ex.problem.sop.elements);
  CHECK(submodule_equal(twice, ideal(r, Ps(r, "x, y"))));

  const auto u = example_unit_top();
  const auto du = star_iteration_driver(u.problem.complex, u.problem.sop, 5);
  CHECK(du.rounds.size() == 1);
  CHECK(du.stop_reason == "top module vanished");

  PolyMatrix phi1(r, 1, 2), phi2(r, 2, 1);
  phi1.set(0, 0, P(r, "x"));
  phi2.set(1, 0, P(r, "1"));
  const FreeComplex unit(r, {GradedFreeModule({0}), GradedFreeModule({1, 1}), GradedFreeModule({1})},
                         {phi1, phi2});
  CHECK_THROWS_AS(star_iteration_driver(unit, ex.problem.sop, 1), PreconditionFailed);
}

TEST_CASE("quotient rings record the Cohen-Macaulay assumption") {
  const auto base = th::ring({"x", "y", "z"});
  const auto r = with_quotient(base, Ps(base, "x*y - z^2"));
  const auto sop = validate_sop(r, Ps(r, "x, y"));
  const auto k = koszul(validate_sop(r, Ps(r, "x^2, y^2")));
  const auto star = star_transform(k, sop);
  const auto rep = verify_star(k, sop, star);
  CHECK(rep.verdict());
  CHECK(rep.assumptions.size() == 1);
}
