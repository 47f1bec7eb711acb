#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "cstar/errors.hpp"
#include "cstar/hilbert.hpp"
#include "helpers.hpp"

using namespace cstar;
using th::P;
using th::Ps;

namespace {

const GradedFreeModule kR1({0});

brute::Gens gens_of(const SubmoduleGB& m) {
  brute::Gens out;
  for (const auto& v : m.basis()) out.push_back(v.coords());
  return out;
}

brute::Gens gens_of(const std::vector<ModuleVector>& vs) {
  brute::Gens out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

std::vector<ModuleVector> as_vectors(const RingPtr& r, const std::vector<Polynomial>& ps) {
  std::vector<ModuleVector> out;
  for (const auto& p : ps) out.push_back(ModuleVector(r, kR1, {p}));
  return out;
}

/// Random homogeneous generators of an ideal in up to three variables.
std::vector<Polynomial> random_ideal(const RingPtr& r, std::mt19937_64& rng) {
  std::vector<Polynomial> out;
  const int count = 1 + static_cast<int>(rng() % 3);
  while (static_cast<int>(out.size()) < count) {
    auto f = th::random_form(r, 1 + static_cast<std::int64_t>(rng() % 3), rng, 40);
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  const auto r = th::ring({"x", "y"});
  CHECK(th::strings(ideal(r, Ps(r, "x^2, y^2"))) == std::vector<std::string>{"x^2", "y^2"});
  CHECK(th::strings(ideal(r, Ps(r, "x+y, x-y"))) == std::vector<std::string>{"x", "y"});
  CHECK(th::strings(ideal(r, Ps(r, "3*x^2 + 6*y^2"))) == std::vector<std::string>{"x^2 + 2*y^2"});
  // Deterministic under repetition.
  CHECK(th::strings(ideal(r, Ps(r, "x^2 - y^2, x*y"))) ==
        th::strings(ideal(r, Ps(r, "x^2 - y^2, x*y"))));
}

TEST_CASE("normal_form examples") {
  const auto r = th::ring({"x", "y"});
  const auto m = ideal(r, Ps(r, "x^2, y^2"));
  CHECK(normal_form(ModuleVector(r, kR1, {P(r, "x^2")}), m).is_zero());
  CHECK(normal_form(ModuleVector(r, kR1, {P(r, "x*y")}), m)[0] == P(r, "x*y"));
  CHECK(normal_form(ModuleVector(r, kR1, {P(r, "x^2*y")}), m).is_zero());
}

TEST_CASE("lift_witness examples") {
  const auto r = th::ring({"x", "y"});
  const auto gens = as_vectors(r, Ps(r, "x^2, y^2"));
  auto w = lift_witness(gens[0], gens);
  REQUIRE(w);
  CHECK(combine(*w, gens, r, kR1) == gens[0]);
  w = lift_witness(ModuleVector(r, kR1, {P(r, "x^2*y")}), gens);
  REQUIRE(w);
  CHECK((*w)[0] == P(r, "y"));
  CHECK((*w)[1].is_zero());
  CHECK_FALSE(lift_witness(ModuleVector(r, kR1, {P(r, "x*y")}), gens));
  CHECK_FALSE(brute::member(r, kR1, gens_of(gens), {P(r, "x*y")}, 2));
}

TEST_CASE("syzygies examples") {
  const auto r = th::ring({"x", "y"});
  const GradedFreeModule f2({0, 0});
  const auto id = syzygies(r, f2, {th::vec(r, f2, {"1", "0"}), th::vec(r, f2, {"0", "1"})});
  CHECK(id.generators.empty());
  const auto xx = syzygies(r, kR1, as_vectors(r, Ps(r, "x, x")));
  REQUIRE(xx.generators.size() == 1);
  CHECK(xx.generators[0][0] == -xx.generators[0][1]);
  const auto ci = syzygies(r, kR1, as_vectors(r, Ps(r, "x^2, y^2")));
  REQUIRE(ci.generators.size() == 1);
  const auto& s = ci.generators[0];
  CHECK(((s[0] == P(r, "-y^2") && s[1] == P(r, "x^2")) ||
         (s[0] == P(r, "y^2") && s[1] == P(r, "-x^2"))));
  for (std::int64_t d = 0; d <= 4; ++d)
    CHECK(brute::syzygy_dim(r, kR1, {{P(r, "x^2")}, {P(r, "y^2")}}, d) ==
          brute::quotient_dim(r, ci.source, {}, d) -
              brute::quotient_dim(r, ci.source, gens_of(ci.generators), d));
}

TEST_CASE("colon examples") {
  const auto r = th::ring({"x", "y"});
  const auto m = ideal(r, Ps(r, "x^2, y^2"));
  CHECK(submodule_equal(colon(m, P(r, "1")), m));
  CHECK(th::strings(colon(m, P(r, "x"))) == std::vector<std::string>{"y^2", "x"});
  CHECK(th::strings(colon(m, Ps(r, "x, y"))) ==
        std::vector<std::string>{"x^2", "x*y", "y^2"});
  for (std::int64_t d = 0; d <= 3; ++d) {
    CHECK(brute::colon_dim(r, kR1, gens_of(m), Ps(r, "x"), d) ==
          brute::submodule_part(r, kR1, {{P(r, "x")}, {P(r, "y^2")}}, d).dim());
    CHECK(brute::colon_dim(r, kR1, gens_of(m), Ps(r, "x, y"), d) ==
          brute::submodule_part(r, kR1, {{P(r, "x^2")}, {P(r, "x*y")}, {P(r, "y^2")}}, d).dim());
  }
}

TEST_CASE("intersect examples") {
  const auto r = th::ring({"x", "y"});
  const auto x = ideal(r, Ps(r, "x")), y = ideal(r, Ps(r, "y"));
  CHECK(th::strings(intersect(x, y)) == std::vector<std::string>{"x*y"});
  const auto m = ideal(r, Ps(r, "x^2, x*y + y^2"));
  CHECK(submodule_equal(intersect(m, m), m));
  CHECK(submodule_equal(intersect(m, ideal(r, Ps(r, "1"))), m));
  for (std::int64_t d = 0; d <= 4; ++d)
    CHECK(brute::intersection_dim(r, kR1, {{P(r, "x")}}, {{P(r, "y")}}, d) ==
          brute::submodule_part(r, kR1, {{P(r, "x*y")}}, d).dim());
}

TEST_CASE("submodule_equal examples") {
  const auto r = th::ring({"x", "y"});
  const auto a = ideal(r, Ps(r, "x^2, y^2"));
  CHECK(submodule_equal(a, a));
  CHECK_FALSE(submodule_equal(ideal(r, Ps(r, "x")), ideal(r, Ps(r, "x^2"))));
  CHECK(submodule_equal(ideal(r, Ps(r, "x+y, x-y")), ideal(r, Ps(r, "x, y"))));
}

TEST_CASE("hilbert_data examples") {
  const auto r = th::ring({"x", "y"});
  CHECK(hilbert_series(ideal(r, Ps(r, "x, y"))).length() == mpz_class(1));
  CHECK(hilbert_series(ideal(r, Ps(r, "x^2, y^2"))).length() == mpz_class(4));
  const auto h = hilbert_series(ideal(r, Ps(r, "x")));
  CHECK_FALSE(h.length().has_value());
  CHECK(h.denominator == std::vector<int>{1});
  CHECK(h.numerator == std::map<std::int64_t, mpz_class>{{0, 1}});
  CHECK(quotient_length(ideal(r, Ps(r, "x^2, y^2")), ideal(r, Ps(r, "x^2, x*y, y^2"))) == 1);
  CHECK_THROWS_AS(quotient_length(ideal(r, Ps(r, "x^2")), ideal(r, Ps(r, "x"))),
                  NonPolynomialDifference);
}

TEST_CASE("weighted Hilbert series") {
  const auto r = th::ring({"x", "y"}, Field::rational(), {1, 2});
  const auto m = ideal(r, Ps(r, "x^3, y^2"));
  CHECK(hilbert_series(m).length() == mpz_class(6));
  for (std::int64_t d = 0; d <= 8; ++d)
    CHECK(hilbert_series(m).coefficient(d) == brute::quotient_dim(r, kR1, gens_of(m), d));
}

TEST_CASE("module Groebner bases in rank 2") {
  const auto r = th::ring({"x", "y"});
  const GradedFreeModule f({0, 1});
  const std::vector<ModuleVector> g{th::vec(r, f, {"x^2", "y"}), th::vec(r, f, {"x*y", "x"}),
                                    th::vec(r, f, {"y^2", "0"})};
  const auto m = buchberger(r, f, g);
  for (const auto& v : g) CHECK(m.contains(v));
  for (std::int64_t d = 0; d <= 6; ++d)
    CHECK(hilbert_series(m).coefficient(d) == brute::quotient_dim(r, f, gens_of(g), d));
  Lifter lifter(r, f, g);
  const ModuleVector target = g[0].times(P(r, "y")) + g[2].times(P(r, "x"));
  const auto c = lifter.lift(target);
  REQUIRE(c);
  CHECK(combine(*c, g, r, f) == target);
  for (const auto& s : lifter.syzygies()) CHECK(combine(s.coords(), g, r, f).is_zero());
}

TEST_CASE("term-over-position order gives the same submodule") {
  const auto r = th::ring({"x", "y"});
  const GradedFreeModule f({0, 1});
  const std::vector<ModuleVector> g{th::vec(r, f, {"x^2", "y"}), th::vec(r, f, {"y^2", "x"})};
  const auto pot = buchberger(r, f, g);
  const auto top = buchberger(r, f, g, MonomialOrder{RingOrder::DegRevLex,
                                                     ModuleOrder::TermOverPosition});
  for (const auto& v : top.basis()) CHECK(pot.contains(v));
  for (const auto& v : pot.basis()) CHECK(top.contains(v));
  for (std::int64_t d = 0; d <= 5; ++d)
    CHECK(hilbert_series(pot).coefficient(d) == hilbert_series(top).coefficient(d));
}

TEST_CASE("randomized agreement with the dense oracle") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    const auto r = t % 2 ? th::ring({"x", "y", "z"}) : th::ring({"x", "y"});
    const auto a_gens = random_ideal(r, rng), b_gens = random_ideal(r, rng);
    const auto a = ideal(r, a_gens), b = ideal(r, b_gens);
    const auto q = random_ideal(r, rng);
    const auto ab = intersect(a, b), aq = colon(a, q);
    const auto ha = hilbert_series(a), hab = hilbert_series(ab), haq = hilbert_series(aq);
    const auto gens_a = gens_of(as_vectors(r, a_gens)), gens_b = gens_of(as_vectors(r, b_gens));
    const auto syz = syzygies(r, kR1, as_vectors(r, a_gens));
    for (std::int64_t d = 0; d <= 6; ++d) {
      const std::size_t total = brute::quotient_dim(r, kR1, {}, d);
      CHECK(ha.coefficient(d) == brute::quotient_dim(r, kR1, gens_a, d));
      CHECK(total - hab.coefficient(d) == brute::intersection_dim(r, kR1, gens_a, gens_b, d));
      CHECK(total - haq.coefficient(d) == brute::colon_dim(r, kR1, gens_a, q, d));
      CHECK(brute::syzygy_dim(r, kR1, gens_a, d) ==
            brute::submodule_part(r, syz.source, gens_of(syz.generators), d).dim());
    }
    // Normal form zero iff membership.
    for (int k = 0; k < 4; ++k) {
      const std::int64_t d = 2 + k % 2;
      const auto v = th::random_form(r, d, rng, 30);
      const ModuleVector mv(r, kR1, {v});
      const bool in = normal_form(mv, a).is_zero();
      CHECK(in == lift_witness(mv, as_vectors(r, a_gens)).has_value());
      CHECK(in == brute::member(r, kR1, gens_a, {v}, d));
    }
    CHECK(a.contains(colon(a, q)) == submodule_equal(a, aq));
    CHECK(aq.contains(a));
  }
}

TEST_CASE("quotient ring submodules") {
  const auto base = th::ring({"x", "y", "z"});
  const auto r = with_quotient(base, Ps(base, "z^2"));
  const auto m = ideal(r, Ps(r, "x^2, y^2"));
  CHECK(hilbert_series(m).length() == mpz_class(8));
  const auto c = colon(m, Ps(r, "x, y, z"));
  CHECK(quotient_length(m, c) == 1);
  CHECK(is_zero_in_ring(P(r, "x*z^2")));
  CHECK(reduce_quotient(P(r, "z^3 + x")) == P(r, "x"));
  CHECK_THROWS_AS(with_quotient(base, Ps(base, "z^2 + x")), ValidationError);
}
