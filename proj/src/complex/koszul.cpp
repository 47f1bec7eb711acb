#include <algorithm>

#include "cstar/complex.hpp"
#include "cstar/errors.hpp"
#include "cstar/hilbert.hpp"

namespace cstar {

int koszul_s(int i, const KoszulIndex& I) {
  return static_cast<int>(
      std::count_if(I.begin(), I.end(), [i](int j) { return j < i; }));
}

int koszul_t(const KoszulIndex& I) {
  int t = 0;
  for (int i : I) t += i - 1;
  return t;
}

namespace {

void subsets_rec(int n, int p, int next, KoszulIndex& cur,
                 std::vector<KoszulIndex>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int i = next; i <= n; ++i) {
    cur.push_back(i);
    subsets_rec(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<KoszulIndex> koszul_subsets(int n, int p) {
  std::vector<KoszulIndex> out;
  if (p < 0 || p > n) return out;
  KoszulIndex cur;
  subsets_rec(n, p, 1, cur, out);
  return out;
}

std::size_t koszul_position(int n, const KoszulIndex& I) {
  const auto all = koszul_subsets(n, static_cast<int>(I.size()));
  auto it = std::find(all.begin(), all.end(), I);
  if (it == all.end()) throw DimensionMismatch("not a subset of {1..n}");
  return static_cast<std::size_t>(it - all.begin());
}

KoszulIndex koszul_complement(int n, const KoszulIndex& I) {
  KoszulIndex out;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(I.begin(), I.end(), i)) out.push_back(i);
  return out;
}

KoszulIndex koszul_without(const KoszulIndex& I, int i) {
  KoszulIndex out;
  for (int j : I)
    if (j != i) out.push_back(j);
  return out;
}

std::string koszul_string(const KoszulIndex& I) {
  std::string out = "{";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(I[k]);
  }
  return out + "}";
}

SopData validate_sop(const RingPtr& ring, std::vector<Polynomial> x) {
  if (x.size() < 2)
    throw PreconditionFailed("a system of parameters needs n >= 2 elements, got " +
                             std::to_string(x.size()));
  SopData sop{ring, {}, {}, 0};
  for (auto& f : x) {
    const auto h = f.homogeneous_degree();
    if (!h.is_degree())
      throw ValidationError("sop element " + f.to_string() +
                            " is not homogeneous");
    if (h.degree <= 0)
      throw ValidationError("sop element " + f.to_string() +
                            " must have positive degree");
    sop.degrees.push_back(h.degree);
    sop.elements.push_back(std::move(f));
  }
  const HilbertSeries hs = hilbert_series(ideal(ring, sop.elements));
  if (!hs.is_polynomial())
    throw NotASop("R/(sop) has infinite length; Hilbert series " +
                  hs.to_string());
  sop.colength = *hs.length();
  return sop;
}

FreeComplex koszul(const SopData& sop) {
  if (sop.n() < 2) throw PreconditionFailed("koszul complex needs n >= 2");
  const int n = static_cast<int>(sop.n());
  const RingPtr& ring = sop.ring;
  std::vector<GradedFreeModule> modules;
  std::vector<std::vector<KoszulIndex>> bases;
  for (int p = 0; p <= n; ++p) {
    bases.push_back(koszul_subsets(n, p));
    std::vector<std::int64_t> deg;
    for (const auto& I : bases.back()) {
      std::int64_t d = 0;
      for (int i : I) d += sop.degrees[static_cast<std::size_t>(i - 1)];
      deg.push_back(d);
    }
    modules.emplace_back(std::move(deg));
  }
  std::vector<PolyMatrix> maps;
  for (int p = 1; p <= n; ++p) {
    const auto& src = bases[static_cast<std::size_t>(p)];
    PolyMatrix m(ring, bases[static_cast<std::size_t>(p - 1)].size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (int i : src[c]) {
        const Polynomial& xi = sop.elements[static_cast<std::size_t>(i - 1)];
        const std::size_t r = koszul_position(n, koszul_without(src[c], i));
        m.set(r, c, koszul_s(i, src[c]) % 2 == 0 ? xi : -xi);
      }
    }
    m.certify(modules[static_cast<std::size_t>(p)],
              modules[static_cast<std::size_t>(p - 1)]);
    maps.push_back(std::move(m));
  }
  return FreeComplex(ring, std::move(modules), std::move(maps));
}

}  // namespace cstar
