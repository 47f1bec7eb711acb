#include "cstar/corpus.hpp"

#include <random>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

const std::vector<std::string> kNames{"x", "y", "z", "w"};

RingPtr standard_ring(std::size_t n, Field field) {
  return make_ring(field, std::vector<std::string>(kNames.begin(), kNames.begin() + n));
}

std::vector<Polynomial> parse_all(const RingPtr& ring, const std::vector<std::string>& text) {
  std::vector<Polynomial> out;
  for (const auto& t : text) out.push_back(parse_polynomial(ring, t));
  return out;
}

CorpusInstance koszul_instance(std::string name, std::size_t n, Field field,
                               const std::vector<std::string>& complex_sop,
                               const std::vector<std::string>& sop) {
  const RingPtr ring = standard_ring(n, field);
  const SopData inner = validate_sop(ring, parse_all(ring, complex_sop));
  return {std::move(name), Problem{ring, validate_sop(ring, parse_all(ring, sop)), koszul(inner)}};
}

void exponents_of_degree(std::size_t n, int d, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    exponents_of_degree(n, d - e, cur, out);
    cur.pop_back();
  }
}

Polynomial power(const RingPtr& ring, std::size_t i, int e) {
  std::vector<int> exps(ring->nvars(), 0);
  exps[i] = e;
  return Polynomial::term(ring, ring->monomial(exps), Scalar(ring->field(), 1));
}

}  // namespace

CorpusInstance example_a(Field field) {
  return koszul_instance("ex_a", 2, field, {"x^2", "y^2"}, {"x", "y"});
}

CorpusInstance example_ci3(Field field) {
  return koszul_instance("ci3", 3, field, {"x^2", "y^2", "z^2"}, {"x", "y", "z"});
}

CorpusInstance example_unit_top(Field field) {
  return koszul_instance("unit_top", 2, field, {"x", "y"}, {"x", "y"});
}

CorpusInstance random_instance(std::uint64_t seed, std::size_t n, Field field) {
  if (n < 2 || n > kNames.size())
    throw PreconditionFailed("random instances need 2 <= n <= " + std::to_string(kNames.size()));
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const RingPtr ring = standard_ring(n, field);

  std::vector<int> a(n);
  std::vector<Polynomial> q;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = uniform(1, 3);
    q.push_back(power(ring, i, a[i]));
  }
  const SopData sop = validate_sop(ring, q);

  auto in_q = [&](const std::vector<int>& e) {
    for (std::size_t k = 0; k < n; ++k)
      if (e[k] >= a[k]) return true;
    return false;
  };

  for (int attempt = 0;; ++attempt) {
    std::vector<Polynomial> y;
    for (std::size_t i = 0; i < n; ++i) {
      const int d = uniform(a[i], 3);
      std::vector<std::vector<int>> monos;
      std::vector<int> cur;
      exponents_of_degree(n, d, cur, monos);
      Polynomial f = power(ring, i, d);
      for (const auto& e : monos) {
        if (!in_q(e) || e[i] == d || uniform(0, 2) != 0) continue;
        const int c = uniform(-3, 3);
        if (c != 0) f += Polynomial::term(ring, ring->monomial(e), Scalar(field, c));
      }
      y.push_back(f);
    }
    try {
      const SopData inner = validate_sop(ring, y);
      return {"random_" + std::to_string(seed) + "_n" + std::to_string(n) +
                  (attempt ? "_r" + std::to_string(attempt) : ""),
              Problem{ring, sop, koszul(inner)}};
    } catch (const NotASop&) {
      // draw again
    }
  }
}

std::vector<CorpusInstance> standard_corpus(std::size_t random_count, std::uint64_t seed) {
  std::vector<CorpusInstance> out{example_a(), example_ci3(), example_unit_top()};
  for (std::size_t k = 0; k < random_count; ++k)
    out.push_back(random_instance(seed + k, 2 + k % 2));
  return out;
}

Problem koszul_problem(const SopData& sop) { return Problem{sop.ring, sop, koszul(sop)}; }

}  // namespace cstar
