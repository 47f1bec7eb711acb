#include "cstar/hilbert.hpp"

#include <algorithm>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

using Laurent = std::map<std::int64_t, mpz_class>;

void add_into(Laurent& a, const Laurent& b, std::int64_t shift = 0,
              int sign = 1) {
  for (const auto& [k, v] : b) {
    mpz_class& slot = a[k + shift];
    if (sign > 0)
      slot += v;
    else
      slot -= v;
    if (slot == 0) a.erase(k + shift);
  }
}

Laurent times_one_minus(const Laurent& a, int w) {
  Laurent out = a;
  add_into(out, a, w, -1);
  return out;
}

/// Exact quotient by (1 - t^w), or nullopt when it does not divide.
std::optional<Laurent> divide_one_minus(const Laurent& a, int w) {
  if (a.empty()) return Laurent{};
  const std::int64_t lo = a.begin()->first;
  const std::int64_t hi = a.rbegin()->first;
  if (hi - lo < w) return std::nullopt;
  // a_k = q_k - q_{k-w}, so q_k = a_k + q_{k-w} for k in [lo, hi - w].
  std::vector<mpz_class> q(static_cast<std::size_t>(hi - w - lo + 1));
  auto coeff = [&a](std::int64_t k) {
    auto it = a.find(k);
    return it == a.end() ? mpz_class(0) : it->second;
  };
  for (std::int64_t k = lo; k <= hi - w; ++k) {
    mpz_class v = coeff(k);
    if (k - w >= lo) v += q[static_cast<std::size_t>(k - w - lo)];
    q[static_cast<std::size_t>(k - lo)] = v;
  }
  for (std::int64_t k = hi - w + 1; k <= hi; ++k) {
    mpz_class v = coeff(k);
    if (k - w >= lo) v += q[static_cast<std::size_t>(k - w - lo)];
    if (v != 0) return std::nullopt;
  }
  Laurent out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) out[lo + static_cast<std::int64_t>(i)] = q[i];
  return out;
}

HilbertSeries cancel(Laurent num, std::vector<int> den) {
  std::sort(den.begin(), den.end());
  if (num.empty()) return HilbertSeries{{}, {}};
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < den.size(); ++k) {
      if (auto q = divide_one_minus(num, den[k])) {
        num = std::move(*q);
        den.erase(den.begin() + static_cast<std::ptrdiff_t>(k));
        progress = true;
        break;
      }
    }
  }
  return HilbertSeries{std::move(num), std::move(den)};
}

void minimalize(std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !gens[j].divides(gens[i])) continue;
      redundant = !(gens[j] == gens[i]) || j < i;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

Laurent numerator_rec(const Ring& ring, std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return Laurent{{0, 1}};
  for (const auto& g : gens)
    if (g.is_one()) return Laurent{};

  // Variable shared by the most generators.
  std::size_t pivot = ring.nvars();
  int best = 1;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++count;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  if (pivot == ring.nvars()) {
    Laurent prod{{0, 1}};
    for (const auto& g : gens)
      prod = times_one_minus(prod, static_cast<int>(g.degree()));
    return prod;
  }

  // H(S/I) = H(S/(I + x)) + t^deg(x) H(S/(I : x)).
  const Monomial x = ring.variable(pivot);
  std::vector<Monomial> with_x{x};
  std::vector<Monomial> colon_x;
  for (const auto& g : gens) {
    if (g[pivot] == 0) {
      with_x.push_back(g);
      colon_x.push_back(g);
    } else {
      colon_x.push_back(g / x);
    }
  }
  Laurent out = numerator_rec(ring, std::move(with_x));
  add_into(out, numerator_rec(ring, std::move(colon_x)), ring.weights()[pivot]);
  return out;
}

std::string term_string(const mpz_class& c, std::int64_t k, bool first) {
  std::string out;
  const bool neg = c < 0;
  const mpz_class a = neg ? mpz_class(-c) : c;
  if (first)
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (k == 0 || a != 1) out += a.get_str();
  if (k != 0) {
    if (a != 1) out += "*";
    out += "t";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::map<std::int64_t, mpz_class> monomial_numerator(const Ring& ring,
                                                     std::vector<Monomial> gens) {
  return numerator_rec(ring, std::move(gens));
}

HilbertSeries hilbert_series(const SubmoduleGB& m) {
  const Ring& ring = *m.ring();
  const std::size_t r = m.ambient().rank();
  std::vector<std::vector<Monomial>> leads(r);
  for (const auto& g : m.basis()) {
    // Position over term: first nonzero component. Term over position:
    // the component holding the largest term.
    std::optional<std::size_t> lead_comp;
    for (std::size_t k = 0; k < r; ++k) {
      if (g[k].is_zero()) continue;
      if (!lead_comp) {
        lead_comp = k;
        continue;
      }
      const auto& a = g[k].lead().mono;
      const auto& b = g[*lead_comp].lead().mono;
      if (m.order().module == ModuleOrder::TermOverPosition) {
        const std::int64_t da = a.degree() + m.ambient().degree(k);
        const std::int64_t db = b.degree() + m.ambient().degree(*lead_comp);
        if (da > db || (da == db && m.order().compare(a, b) > 0))
          lead_comp = k;
      }
    }
    if (lead_comp) leads[*lead_comp].push_back(g[*lead_comp].lead().mono);
  }

  Laurent num;
  for (std::size_t k = 0; k < r; ++k)
    add_into(num, numerator_rec(ring, leads[k]), m.ambient().degree(k));
  return cancel(std::move(num), ring.weights());
}

HilbertSeries series_difference(const HilbertSeries& a, const HilbertSeries& b) {
  std::map<int, int> need;
  auto tally = [](const std::vector<int>& den) {
    std::map<int, int> c;
    for (int w : den) ++c[w];
    return c;
  };
  const auto ca = tally(a.denominator), cb = tally(b.denominator);
  for (const auto& [w, n] : ca) need[w] = std::max(need[w], n);
  for (const auto& [w, n] : cb) need[w] = std::max(need[w], n);

  auto lift = [&need](const HilbertSeries& s, const std::map<int, int>& have) {
    Laurent num = s.numerator;
    for (const auto& [w, n] : need) {
      auto it = have.find(w);
      const int extra = n - (it == have.end() ? 0 : it->second);
      for (int i = 0; i < extra; ++i) num = times_one_minus(num, w);
    }
    return num;
  };
  Laurent num = lift(a, ca);
  add_into(num, lift(b, cb), 0, -1);
  std::vector<int> den;
  for (const auto& [w, n] : need) den.insert(den.end(), n, w);
  return cancel(std::move(num), std::move(den));
}

mpz_class quotient_length(const SubmoduleGB& small, const SubmoduleGB& big) {
  const HilbertSeries d = series_difference(hilbert_series(small), hilbert_series(big));
  if (!d.is_polynomial())
    throw NonPolynomialDifference("Hilbert series difference " + d.to_string() +
                                  " is not a polynomial");
  return *d.length();
}

std::optional<mpz_class> HilbertSeries::length() const {
  if (!is_polynomial()) return std::nullopt;
  mpz_class s = 0;
  for (const auto& [k, v] : numerator) s += v;
  return s;
}

mpz_class HilbertSeries::coefficient(std::int64_t d) const {
  if (numerator.empty() || d < numerator.begin()->first) return 0;
  const std::int64_t lo = numerator.begin()->first;
  std::vector<mpz_class> c(static_cast<std::size_t>(d - lo + 1));
  for (const auto& [k, v] : numerator)
    if (k <= d) c[static_cast<std::size_t>(k - lo)] = v;
  // Multiply by 1/(1 - t^w) = 1 + t^w + t^2w + ... one factor at a time.
  for (int w : denominator)
    for (std::size_t i = static_cast<std::size_t>(w); i < c.size(); ++i)
      c[i] += c[i - static_cast<std::size_t>(w)];
  return c.back();
}

std::string HilbertSeries::to_string() const {
  std::string num;
  if (numerator.empty()) {
    num = "0";
  } else {
    bool first = true;
    for (const auto& [k, v] : numerator) {
      num += term_string(v, k, first);
      first = false;
    }
  }
  if (denominator.empty()) return num;
  std::string den;
  for (int w : denominator) {
    den += "(1 - t";
    if (w != 1) den += "^" + std::to_string(w);
    den += ")";
  }
  return "(" + num + ") / " + den;
}

}  // namespace cstar
