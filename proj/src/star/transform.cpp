#include "cstar/errors.hpp"
#include "cstar/star.hpp"

namespace cstar {

namespace {

std::vector<StarLabel> angles(std::size_t rank) {
  std::vector<StarLabel> out;
  for (std::size_t u = 0; u < rank; ++u)
    out.push_back({StarLabel::Kind::Angle, u, {}, 0});
  return out;
}

std::vector<StarLabel> brackets_then_angles(std::size_t rank_top, int n, int p,
                                            std::size_t rank_fp) {
  std::vector<StarLabel> out;
  const auto subsets = koszul_subsets(n, p);
  for (std::size_t lam = 0; lam < rank_top; ++lam)
    for (const auto& I : subsets) out.push_back({StarLabel::Kind::Bracket, lam, I, 0});
  for (auto& a : angles(rank_fp)) out.push_back(std::move(a));
  return out;
}

}  // namespace

void check_star_preconditions(const FreeComplex& f, const SopData& sop) {
  if (sop.n() < 2)
    throw PreconditionFailed("the transform needs at least two parameters");
  if (f.length() != sop.n())
    throw PreconditionFailed("complex length " + std::to_string(f.length()) +
                             " differs from the number of parameters " +
                             std::to_string(sop.n()));
  if (auto defect = check_complex(f))
    throw PreconditionFailed("input is not a graded complex: " + defect->describe());
  const AcyclicityCertificate cert = certify_acyclic(f);
  if (!cert.ok)
    throw PreconditionFailed("input complex is not acyclic: " + cert.detail);
  if (!check_QF_containment(f, sop))
    throw PreconditionFailed("Im φn ⊆ QFn−1 fails: some entry of the top map is "
                             "outside the parameter ideal");
}

StarPipeline run_star_pipeline(const FreeComplex& f, const SopData& sop) {
  check_star_preconditions(f, sop);
  const std::size_t n = sop.n();
  const int ni = static_cast<int>(n);
  StarPipeline pl{std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                  std::nullopt, std::nullopt, StarComplex{f, {}, false}};

  const std::size_t rank_top = f.module(n).rank();
  if (rank_top == 0) {
    for (std::size_t p = 0; p <= n; ++p)
      pl.star.labels.push_back(angles(f.module(p).rank()));
    pl.star.top_vanished = true;
    return pl;
  }

  pl.dec = decompose_images(f.map(n), f.module(n - 1), sop);
  pl.sigma = build_sigma(f, sop, *pl.dec);
  pl.cone = mapping_cone(f, *pl.sigma, sop);
  pl.split = split_top(*pl.cone, *pl.sigma);
  pl.selection = select_basis(*pl.dec, sop);
  pl.top = build_star_top(*pl.selection, *pl.split, *pl.sigma, sop);

  const FreeComplex& sf = pl.split->complex;
  std::vector<GradedFreeModule> mods;
  std::vector<PolyMatrix> maps;
  std::vector<std::vector<StarLabel>> labels;
  for (std::size_t p = 0; p + 1 < n; ++p) mods.push_back(sf.module(p));
  mods.push_back(pl.top->next);
  mods.push_back(pl.top->top);
  for (std::size_t p = 1; p + 1 < n; ++p) maps.push_back(reduce_quotient(sf.map(p)));
  maps.push_back(pl.top->phi_next);
  maps.push_back(pl.top->phi_top);

  labels.push_back(angles(f.module(0).rank()));
  for (std::size_t p = 1; p + 1 < n; ++p)
    labels.push_back(brackets_then_angles(rank_top, ni, static_cast<int>(p - 1),
                                          f.module(p).rank()));
  labels.push_back(pl.top->next_labels);
  labels.push_back(pl.top->top_labels);

  pl.star = StarComplex{FreeComplex(f.ring(), std::move(mods), std::move(maps)),
                        std::move(labels), pl.selection->remaining.empty()};
  return pl;
}

StarComplex star_transform(const FreeComplex& f, const SopData& sop) {
  return run_star_pipeline(f, sop).star;
}

}  // namespace cstar
