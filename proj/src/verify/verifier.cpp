#include "cstar/verifier.hpp"

#include <chrono>
#include <functional>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CheckResult timed(const std::string& name,
                  const std::function<void(CheckResult&)>& body) {
  CheckResult c{name, false, "", 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const Error& e) {
    c.pass = false;
    c.detail = std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::string position(std::size_t p, std::size_t r, std::size_t c) {
  return "map " + std::to_string(p) + " entry (" + std::to_string(r) + "," +
         std::to_string(c) + ")";
}

}  // namespace

CheckResult colon_length_check(const SubmoduleGB& m, const SopData& sop,
                               std::size_t rank_fn) {
  return timed("colon_length_count", [&](CheckResult& c) {
    const SubmoduleGB mq = colon(m, sop.elements);
    const mpz_class lhs = quotient_length(m, mq);
    const mpz_class rhs = mpz_class(static_cast<unsigned long>(rank_fn)) * sop.colength;
    c.pass = lhs == rhs;
    c.detail = "dim (M:Q)/M = " + lhs.get_str() + ", rank F_n * dim R/Q = " +
               std::to_string(rank_fn) + " * " + sop.colength.get_str() + " = " +
               rhs.get_str();
  });
}

bool depth_positive_check(const SubmoduleGB& m) {
  return submodule_equal(colon(m, irrelevant_ideal(m.ring())), m);
}

VerificationReport verify_star(const FreeComplex& f, const SopData& sop,
                               const StarComplex& star) {
  VerificationReport rep;
  const FreeComplex& c = star.complex;
  const std::size_t n = sop.n();
  const std::size_t len = c.length();

  rep.checks.push_back(timed("composition_zero", [&](CheckResult& r) {
    for (std::size_t p = 2; p <= len; ++p) {
      const PolyMatrix prod = reduce_quotient(c.map(p - 1) * c.map(p));
      if (auto at = prod.first_nonzero()) {
        r.detail = "composition at position " + std::to_string(p) + " nonzero at " +
                   position(p, at->first, at->second);
        return;
      }
    }
    r.pass = true;
    r.detail = "all consecutive compositions vanish";
  }));

  rep.checks.push_back(timed("homogeneity", [&](CheckResult& r) {
    for (std::size_t p = 1; p <= len; ++p)
      if (auto at = c.map(p).homogeneity_defect(c.module(p), c.module(p - 1))) {
        r.detail = "inhomogeneous " + position(p, at->first, at->second);
        return;
      }
    r.pass = true;
    r.detail = "every entry matches the module twists";
  }));

  rep.checks.push_back(timed("acyclicity", [&](CheckResult& r) {
    const AcyclicityCertificate cert = certify_acyclic(c);
    r.pass = cert.ok;
    r.detail = cert.ok ? "kernels lie in images and the top map is injective"
                       : cert.detail;
  }));

  const SubmoduleGB m = image(f.map(1), f.module(0));
  rep.checks.push_back(timed("colon_equality", [&](CheckResult& r) {
    const SubmoduleGB expected = colon(m, sop.elements);
    const SubmoduleGB got = image(c.map(1), c.module(0));
    r.pass = submodule_equal(got, expected);
    r.detail = r.pass ? "Im of the first map equals M : Q"
                      : "Im of the first map differs from M : Q";
  }));

  rep.checks.push_back(timed("top_minimality", [&](CheckResult& r) {
    const PolyMatrix& top = c.map(len);
    for (std::size_t i = 0; i < top.rows(); ++i)
      for (std::size_t j = 0; j < top.cols(); ++j)
        if (!reduce_quotient(top.at(i, j)).constant_term().is_zero()) {
          r.detail = "unit entry at " + position(len, i, j);
          return;
        }
    r.pass = true;
    r.detail = "top map entries lie in the irrelevant ideal";
  }));

  rep.checks.push_back(timed("rank_accounting", [&](CheckResult& r) {
    if (len != n) {
      r.detail = "output length " + std::to_string(len) + " != " + std::to_string(n);
      return;
    }
    if (star.labels.size() != n + 1) {
      r.detail = "label lists do not cover every module";
      return;
    }
    for (std::size_t p = 0; p <= n; ++p)
      if (star.labels[p].size() != c.module(p).rank()) {
        r.detail = "label count differs from rank at position " + std::to_string(p);
        return;
      }
    const std::size_t rank_top = f.module(n).rank();
    auto expect = [&](std::size_t p, std::size_t want) {
      if (c.module(p).rank() == want) return true;
      r.detail = "rank at position " + std::to_string(p) + " is " +
                 std::to_string(c.module(p).rank()) + ", expected " + std::to_string(want);
      return false;
    };
    if (!expect(0, f.module(0).rank())) return;
    for (std::size_t p = 1; p + 1 < n; ++p)
      if (!expect(p, rank_top * binomial(n, p - 1) + f.module(p).rank())) return;
    std::size_t units = 0;
    for (const auto& l : star.labels[n - 1])
      if (l.kind == StarLabel::Kind::Angle) ++units;
    const std::size_t chosen = f.module(n - 1).rank() - units;
    if (!expect(n - 1, rank_top * binomial(n, n - 2) + units)) return;
    if (!expect(n, n * rank_top - chosen)) return;
    if (star.top_vanished != (c.module(n).rank() == 0)) {
      r.detail = "top-vanished flag disagrees with the top rank";
      return;
    }
    r.pass = true;
    r.detail = "ranks match; #chosen = " + std::to_string(chosen) +
               ", #U = " + std::to_string(units);
  }));

  rep.checks.push_back(colon_length_check(m, sop, f.module(n).rank()));

  if (star.top_vanished)
    rep.checks.push_back(timed(kPositiveDepthCheck, [&](CheckResult& r) {
      r.pass = depth_positive_check(image(c.map(1), c.module(0)));
      r.detail = r.pass ? "Im of the first map is saturated by the irrelevant ideal"
                        : "the irrelevant ideal enlarges Im of the first map";
    }));

  if (f.ring()->has_quotient())
    rep.assumptions.push_back(
        "the quotient ring is Cohen-Macaulay of dimension n; only finite colength "
        "of the parameters is checked");
  return rep;
}

Saturation saturate(const SubmoduleGB& m, const std::vector<Polynomial>& j,
                    std::size_t max_iter) {
  Saturation s{m, 0};
  while (true) {
    SubmoduleGB next = colon(s.module, j);
    if (submodule_equal(next, s.module)) return s;
    if (s.iterations == max_iter)
      throw IterationLimit("no fixpoint after " + std::to_string(max_iter) +
                           " colon steps");
    s.module = std::move(next);
    ++s.iterations;
  }
}

DriverResult star_iteration_driver(const FreeComplex& f, const SopData& sop,
                                   std::size_t rounds) {
  DriverResult out;
  if (rounds == 0) return out;
  FreeComplex current = f;
  SubmoduleGB oracle = image(f.map(1), f.module(0));
  for (std::size_t k = 1; k <= rounds; ++k) {
    if (k > 1) {
      try {
        check_star_preconditions(current, sop);
      } catch (const PreconditionFailed& e) {
        out.stop_reason = "round " + std::to_string(k) + " precondition failed: " + e.what();
        return out;
      }
    }
    StarComplex star = [&] {
      try {
        return star_transform(current, sop);
      } catch (const PreconditionFailed& e) {
        throw PreconditionFailed("round " + std::to_string(k) + ": " + e.what());
      }
    }();
    VerificationReport report = verify_star(current, sop, star);
    oracle = colon(oracle, sop.elements);
    const bool match =
        submodule_equal(image(star.complex.map(1), star.complex.module(0)), oracle);
    const bool vanished = star.top_vanished;
    current = star.complex;
    out.rounds.push_back({std::move(star), std::move(report), match});
    if (vanished) {
      out.stop_reason = "top module vanished";
      return out;
    }
  }
  out.stop_reason = "completed " + std::to_string(rounds) + " rounds";
  return out;
}

}  // namespace cstar
