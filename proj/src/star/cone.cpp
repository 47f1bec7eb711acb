#include <numeric>

#include "cstar/errors.hpp"
#include "cstar/star.hpp"

namespace cstar {

namespace {

PolyMatrix negate_if(const PolyMatrix& m, bool negate) {
  return negate ? m.scaled(Scalar(m.ring()->field(), -1)) : m;
}

std::vector<std::size_t> iota(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

}  // namespace

FreeComplex mapping_cone(const FreeComplex& f, const SigmaChainMap& s,
                         const SopData& sop) {
  const std::size_t n = s.n;
  const RingPtr& ring = f.ring();
  const std::size_t rank_top = s.top.rank();

  std::vector<GradedFreeModule> mods{f.module(0)};
  for (std::size_t p = 1; p <= n; ++p)
    mods.push_back(direct_sum(s.tensor[p - 1], f.module(p)));
  mods.push_back(s.tensor[n]);

  std::vector<PolyMatrix> maps;
  maps.push_back(PolyMatrix::hstack(s.sigma[0], f.map(1)));
  for (std::size_t p = 2; p <= n; ++p) {
    const PolyMatrix koszul_block =
        tensor_koszul(sop, rank_top, static_cast<int>(p - 1));
    const PolyMatrix zero(ring, s.tensor[p - 2].rank(), f.module(p).rank());
    maps.push_back(PolyMatrix::block(koszul_block, zero,
                                     negate_if(s.sigma[p - 1], (p - 1) % 2 != 0),
                                     f.map(p)));
  }
  maps.push_back(PolyMatrix::vstack(tensor_koszul(sop, rank_top, static_cast<int>(n)),
                                    negate_if(s.sigma[n], n % 2 != 0)));
  for (std::size_t p = 1; p <= n + 1; ++p) maps[p - 1].certify(mods[p], mods[p - 1]);
  return FreeComplex(ring, std::move(mods), std::move(maps));
}

SplitComplex split_top(const FreeComplex& cone, const SigmaChainMap& s) {
  const std::size_t n = s.n;
  const RingPtr& ring = cone.ring();
  const std::size_t rank_top = s.top.rank();
  const std::size_t low = s.tensor[n - 1].rank();

  // σ_n is ±identity, so its inverse is itself.
  const PolyMatrix id = PolyMatrix::identity(ring, rank_top);
  const PolyMatrix& sn = s.sigma[n];
  if (!(sn == id) && !(sn == id.scaled(Scalar(ring->field(), -1))))
    throw InternalError("top component of the chain map is not invertible");
  const PolyMatrix inverse = sn;
  PolyMatrix splitting = PolyMatrix::hstack(PolyMatrix(ring, rank_top, low),
                                            negate_if(inverse, n % 2 != 0));
  splitting.certify(cone.module(n), cone.module(n + 1));

  std::vector<GradedFreeModule> mods;
  std::vector<PolyMatrix> maps;
  for (std::size_t p = 0; p < n; ++p) mods.push_back(cone.module(p));
  mods.push_back(s.tensor[n - 1]);
  for (std::size_t p = 1; p < n; ++p) maps.push_back(cone.map(p));
  PolyMatrix top = cone.map(n).select_columns(iota(0, low));
  top.certify(mods[n], mods[n - 1]);
  maps.push_back(std::move(top));
  return SplitComplex{FreeComplex(ring, std::move(mods), std::move(maps)),
                      std::move(splitting)};
}

}  // namespace cstar
