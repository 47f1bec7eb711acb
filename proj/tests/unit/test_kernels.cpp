#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cstar/kernels.hpp"

using namespace cstar::kernels;

namespace {

ExpVec random_exps(std::mt19937_64& rng, int max) {
  ExpVec e;
  std::uniform_int_distribution<int> d(0, max);
  for (std::size_t i = 0; i < kMaxVars; ++i) e.e[i] = static_cast<std::uint16_t>(d(rng));
  return e;
}

}  // namespace

TEST_CASE("scalar and AVX2 monomial kernels agree") {
  const KernelTable& s = scalar_table();
  const KernelTable* v = avx2_table();
  if (!v) {
    MESSAGE("AVX2 variant unavailable on this machine; only the scalar table is exercised");
    v = &s;
  }
  std::mt19937_64 rng(42);
  WeightVec w;
  for (std::size_t i = 0; i < kMaxVars; ++i) w.w[i] = 1 + static_cast<int>(i % 3);
  for (int t = 0; t < 5000; ++t) {
    const ExpVec a = random_exps(rng, 3);
    ExpVec b = random_exps(rng, 3);
    if (t % 5 == 0) b = a;
    ExpVec r1, r2;
    s.mul(a, b, r1);
    v->mul(a, b, r2);
    CHECK(r1 == r2);
    s.lcm(a, b, r1);
    v->lcm(a, b, r2);
    CHECK(r1 == r2);
    s.gcd(a, b, r1);
    v->gcd(a, b, r2);
    CHECK(r1 == r2);
    CHECK(s.divides(a, b) == v->divides(a, b));
    CHECK(s.coprime(a, b) == v->coprime(a, b));
    CHECK(s.revlex_cmp(a, b) == v->revlex_cmp(a, b));
    CHECK(s.lex_cmp(a, b) == v->lex_cmp(a, b));
    CHECK(s.weighted_degree(a, w) == v->weighted_degree(a, w));
    ExpVec ab;
    s.mul(a, b, ab);
    s.quot(ab, b, r1);
    v->quot(ab, b, r2);
    CHECK(r1 == r2);
    CHECK(r1 == a);
  }
}

TEST_CASE("scalar and AVX2 mod-p row kernels agree") {
  const KernelTable& s = scalar_table();
  const KernelTable* v = avx2_table() ? avx2_table() : &s;
  std::mt19937_64 rng(7);
  for (const std::uint32_t p : {7u, 32003u, 2147483629u}) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 33u, 100u}) {
      std::vector<std::uint32_t> dst(n), src(n);
      for (auto& x : dst) x = d(rng);
      for (auto& x : src) x = d(rng);
      auto d1 = dst, d2 = dst;
      const std::uint32_t f = d(rng);
      s.row_submul_mod(d1.data(), src.data(), f, p, n);
      v->row_submul_mod(d2.data(), src.data(), f, p, n);
      CHECK(d1 == d2);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(d1[i] == (dst[i] + p - static_cast<std::uint64_t>(f) * src[i] % p) % p);
      s.row_scale_mod(d1.data(), f, p, n);
      v->row_scale_mod(d2.data(), f, p, n);
      CHECK(d1 == d2);
    }
  }
}

TEST_CASE("backend selection") {
  CHECK(select(Backend::Scalar).name == scalar_table().name);
  const KernelTable& t = select(Backend::Avx2);
  CHECK((avx2_table() ? t.name == avx2_table()->name : t.name == scalar_table().name));
  select(Backend::Auto);
}
