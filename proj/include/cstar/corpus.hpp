// Named and randomized problem instances.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cstar/problem_io.hpp"

namespace cstar {

struct CorpusInstance {
  std::string name;
  Problem problem;
};

/// R = k[x,y], F = Koszul(x^2, y^2), sop (x, y).
CorpusInstance example_a(Field field = Field::rational());
/// R = k[x,y,z], F = Koszul(x^2, y^2, z^2), sop (x, y, z).
CorpusInstance example_ci3(Field field = Field::rational());
/// R = k[x,y], F = Koszul(x, y), sop (x, y): every decomposition vector is a
/// signed unit vector, so the top module vanishes.
CorpusInstance example_unit_top(Field field = Field::rational());

/// Random sop of pure powers x_i^{a_i} (a_i <= 3) in n variables and an
/// input Koszul complex on a second sop of degree <= 3 inside it.
CorpusInstance random_instance(std::uint64_t seed, std::size_t n,
                               Field field = Field::rational());

/// Fixed instances followed by `random_count` random ones (n alternating 2, 3).
std::vector<CorpusInstance> standard_corpus(std::size_t random_count,
                                            std::uint64_t seed = 1);

/// Problem whose complex is the Koszul complex of its own sop.
Problem koszul_problem(const SopData& sop);

}  // namespace cstar
