#include "engine.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace cstar::gb {

void sort_terms(const TermOrder& ord, MPoly& p) {
  std::sort(p.begin(), p.end(),
            [&ord](const MTerm& a, const MTerm& b) { return ord.cmp(a, b) > 0; });
  MPoly out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  p = std::move(out);
}

MPoly add(const TermOrder& ord, const MPoly& a, const MPoly& b) {
  MPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = ord.cmp(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].c + b[j].c;
      if (!s.is_zero()) out.push_back({a[i].m, a[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

MPoly sub_multiple(const TermOrder& ord, const MPoly& a, std::size_t start,
                   const Scalar& f, const Monomial& m, const MPoly& g) {
  MPoly out;
  out.reserve(a.size() - start + g.size());
  std::size_t i = start, j = 0;
  // The shifted g stays sorted because the order is multiplicative.
  while (i < a.size() && j < g.size()) {
    const Monomial gm = g[j].m * m;
    const int c = ord.cmp(a[i].m, a[i].comp, gm, g[j].comp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({gm, g[j].comp, -(f * g[j].c)});
      ++j;
    } else {
      Scalar s = a[i].c - f * g[j].c;
      if (!s.is_zero()) out.push_back({gm, g[j].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m * m, g[j].comp, -(f * g[j].c)});
  return out;
}

MPoly scale(const MPoly& p, const Scalar& c) {
  MPoly out;
  if (c.is_zero()) return out;
  out.reserve(p.size());
  for (const auto& t : p) out.push_back({t.m, t.comp, t.c * c});
  return out;
}

void make_monic(MPoly& p) {
  if (p.empty() || p.front().c.is_one()) return;
  const Scalar inv = p.front().c.inverse();
  for (auto& t : p) t.c *= inv;
}

namespace {

std::size_t find_reducer(const MTerm& t, const std::vector<MPoly>& g,
                         std::size_t skip) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k == skip || g[k].empty()) continue;
    const MTerm& lead = g[k].front();
    if (lead.comp == t.comp && lead.m.divides(t.m)) return k;
  }
  return kNoSkip;
}

}  // namespace

MPoly reduce(const TermOrder& ord, MPoly f, const std::vector<MPoly>& g,
             bool full, std::size_t skip) {
  MPoly done;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const MTerm& t = f[pos];
    const std::size_t k = find_reducer(t, g, skip);
    if (k == kNoSkip) {
      if (!full) break;
      done.push_back(t);
      ++pos;
      continue;
    }
    const MTerm& lead = g[k].front();
    const Scalar factor = t.c / lead.c;
    const Monomial q = t.m / lead.m;
    f = sub_multiple(ord, f, pos, factor, q, g[k]);
    pos = 0;
  }
  done.insert(done.end(), f.begin() + static_cast<std::ptrdiff_t>(pos), f.end());
  return done;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  std::int64_t degree;
};

class Buchberger {
 public:
  explicit Buchberger(const TermOrder& ord) : ord_(ord) {}

  void add(MPoly h) {
    make_monic(h);
    const std::size_t n = basis_.size();
    const MTerm& lh = h.front();
    for (std::size_t i = 0; i < n; ++i) {
      const MTerm& li = basis_[i].front();
      if (li.comp != lh.comp) continue;
      const Monomial l = ord_.ring().lcm(li.m, lh.m);
      pairs_.push_back({i, n, l, lh.comp, ord_.degree(l, lh.comp)});
      pending_.insert({i, n});
    }
    basis_.push_back(std::move(h));
  }

  void run() {
    while (!pairs_.empty()) {
      const std::size_t best = select();
      const Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      pending_.erase({p.i, p.j});
      if (skip(p)) continue;
      MPoly s = spoly(p);
      MPoly r = reduce(ord_, std::move(s), basis_, false);
      if (!r.empty()) {
        r = reduce(ord_, std::move(r), basis_, true);
        add(std::move(r));
      }
    }
  }

  std::vector<MPoly> finish() {
    // Minimal basis: drop elements whose leading term is divisible by the
    // leading term of another kept element.
    std::vector<MPoly> kept;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const MTerm& li = basis_[i].front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const MTerm& lj = basis_[j].front();
        if (lj.comp != li.comp || !lj.m.divides(li.m)) continue;
        // Equal leading terms: keep the earliest.
        redundant = !(lj.m == li.m) || j < i;
      }
      if (!redundant) kept.push_back(basis_[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      MPoly tail(kept[i].begin() + 1, kept[i].end());
      tail = reduce(ord_, std::move(tail), kept, true, i);
      MPoly full;
      full.reserve(tail.size() + 1);
      full.push_back(kept[i].front());
      full.insert(full.end(), tail.begin(), tail.end());
      kept[i] = std::move(full);
    }
    std::sort(kept.begin(), kept.end(), [this](const MPoly& a, const MPoly& b) {
      return ord_.cmp(a.front(), b.front()) > 0;
    });
    return kept;
  }

 private:
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      const int c = ord_.cmp(a.lcm, a.comp, b.lcm, b.comp);
      if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j)))
        best = k;
    }
    return best;
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  bool skip(const Pair& p) const {
    const MTerm& li = basis_[p.i].front();
    const MTerm& lj = basis_[p.j].front();
    if (ord_.ncomps() == 1 && li.m.coprime(lj.m)) return true;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const MTerm& lk = basis_[k].front();
      if (lk.comp != p.comp || !lk.m.divides(p.lcm)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  }

  MPoly spoly(const Pair& p) const {
    const MPoly& a = basis_[p.i];
    const MPoly& b = basis_[p.j];
    const Monomial ma = p.lcm / a.front().m;
    const Monomial mb = p.lcm / b.front().m;
    MPoly sa;
    sa.reserve(a.size());
    for (const auto& t : a) sa.push_back({t.m * ma, t.comp, t.c});
    return sub_multiple(ord_, sa, 0, Scalar(ord_.ring().field(), 1), mb, b);
  }

  const TermOrder& ord_;
  std::vector<MPoly> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

std::vector<MPoly> groebner(const TermOrder& ord, std::vector<MPoly> gens) {
  Buchberger b(ord);
  std::vector<MPoly> current;
  for (auto& g : gens) {
    sort_terms(ord, g);
    MPoly r = reduce(ord, std::move(g), current, true);
    if (r.empty()) continue;
    make_monic(r);
    current.push_back(r);
    b.add(std::move(r));
  }
  b.run();
  return b.finish();
}

void append_vector(const ModuleVector& v, std::uint32_t offset, MPoly& out) {
  for (std::size_t k = 0; k < v.rank(); ++k)
    for (const auto& t : v[k].terms())
      out.push_back({t.mono, offset + static_cast<std::uint32_t>(k), t.coeff});
}

MPoly to_mpoly(const TermOrder& ord, const ModuleVector& v) {
  MPoly p;
  append_vector(v, 0, p);
  sort_terms(ord, p);
  return p;
}

ModuleVector from_mpoly(const RingPtr& ring, const GradedFreeModule& ambient,
                        const MPoly& p, std::uint32_t first) {
  if (ambient.rank() == 0) return ModuleVector(ring, ambient);
  std::vector<std::vector<Term>> parts(ambient.rank());
  for (const auto& t : p) {
    if (t.comp < first || t.comp >= first + ambient.rank()) continue;
    parts[t.comp - first].push_back({t.m, t.c});
  }
  std::vector<Polynomial> coords;
  coords.reserve(parts.size());
  for (auto& terms : parts)
    coords.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return ModuleVector(ambient, std::move(coords));
}

void append_quotient_multiples(const Ring& ring, std::uint32_t first,
                               std::uint32_t count, std::vector<MPoly>& out) {
  for (const auto& j : ring.quotient_basis()) {
    for (std::uint32_t k = first; k < first + count; ++k) {
      MPoly p;
      p.reserve(j.size());
      for (const auto& t : j.terms()) p.push_back({t.mono, k, t.coeff});
      out.push_back(std::move(p));
    }
  }
}

}  // namespace cstar::gb
