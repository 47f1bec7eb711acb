#include "cstar/complex.hpp"
#include "cstar/errors.hpp"

namespace cstar {

FreeComplex::FreeComplex(RingPtr ring, std::vector<GradedFreeModule> modules,
                         std::vector<PolyMatrix> maps)
    : ring_(std::move(ring)), modules_(std::move(modules)), maps_(std::move(maps)) {
  if (modules_.size() != maps_.size() + 1)
    throw DimensionMismatch("a complex of length n needs n + 1 modules");
  for (std::size_t p = 1; p <= maps_.size(); ++p) {
    const PolyMatrix& m = maps_[p - 1];
    if (m.rows() != modules_[p - 1].rank() || m.cols() != modules_[p].rank())
      throw DimensionMismatch("map " + std::to_string(p) + " is " +
                              std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " +
                              std::to_string(modules_[p - 1].rank()) + "x" +
                              std::to_string(modules_[p].rank()));
  }
}

std::string ComplexDefect::describe() const {
  const std::string where = "map " + std::to_string(p) + " entry (" +
                            std::to_string(row) + ", " + std::to_string(col) + ")";
  if (kind == Kind::Homogeneity) return where + " is not homogeneous of the required degree";
  return "composition of maps " + std::to_string(p - 1) + " and " +
         std::to_string(p) + " is nonzero at (" + std::to_string(row) + ", " +
         std::to_string(col) + ")";
}

std::optional<ComplexDefect> check_complex(const FreeComplex& c) {
  for (std::size_t p = 1; p <= c.length(); ++p) {
    if (auto bad = c.map(p).homogeneity_defect(c.module(p), c.module(p - 1)))
      return ComplexDefect{ComplexDefect::Kind::Homogeneity, p, bad->first,
                           bad->second};
    if (p >= 2) {
      const PolyMatrix prod = reduce_quotient(c.map(p - 1) * c.map(p));
      if (auto nz = prod.first_nonzero())
        return ComplexDefect{ComplexDefect::Kind::Composition, p, nz->first,
                             nz->second};
    }
  }
  return std::nullopt;
}

AcyclicityCertificate certify_acyclic(const FreeComplex& c) {
  AcyclicityCertificate cert;
  const std::size_t n = c.length();
  for (std::size_t p = 1; p <= n; ++p) {
    const Syzygies syz =
        syzygies(c.ring(), c.module(p - 1), columns_of(c.map(p), c.module(p - 1)));
    std::vector<std::vector<Polynomial>> wit;
    if (p == n) {
      if (!syz.generators.empty()) {
        cert.ok = false;
        cert.failed_position = p;
        cert.detail = "map " + std::to_string(p) + " is not injective; kernel contains " +
                      syz.generators.front().to_string();
        return cert;
      }
      cert.witnesses.push_back(std::move(wit));
      break;
    }
    const Lifter next(c.ring(), c.module(p), columns_of(c.map(p + 1), c.module(p)));
    for (const auto& z : syz.generators) {
      const ModuleVector k(c.module(p), z.coords());
      auto w = next.lift(k);
      if (!w) {
        cert.ok = false;
        cert.failed_position = p;
        cert.detail = "kernel of map " + std::to_string(p) + " contains " +
                      k.to_string() + ", not in the image of map " +
                      std::to_string(p + 1);
        return cert;
      }
      wit.push_back(std::move(*w));
    }
    cert.witnesses.push_back(std::move(wit));
  }
  return cert;
}

bool check_QF_containment(const FreeComplex& c, const SopData& sop) {
  if (c.length() == 0) return true;
  const SubmoduleGB q = ideal(sop.ring, sop.elements);
  const GradedFreeModule r1 = GradedFreeModule::uniform(1, 0);
  const PolyMatrix& top = c.map(c.length());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t col = 0; col < top.cols(); ++col)
      if (!top.at(r, col).is_zero() &&
          !q.contains(ModuleVector(r1, {top.at(r, col)})))
        return false;
  return true;
}

Decomposition decompose_images(const PolyMatrix& phi_n,
                               const GradedFreeModule& target,
                               const SopData& sop) {
  const GradedFreeModule r1 = GradedFreeModule::uniform(1, 0);
  std::vector<ModuleVector> gens;
  for (const auto& x : sop.elements) gens.emplace_back(r1, std::vector<Polynomial>{x});
  const Lifter lifter(sop.ring, r1, gens);

  Decomposition dec{target, {}};
  for (std::size_t lam = 0; lam < phi_n.cols(); ++lam) {
    std::vector<std::vector<Polynomial>> coords(
        sop.n(), std::vector<Polynomial>(phi_n.rows(), Polynomial(sop.ring)));
    for (std::size_t r = 0; r < phi_n.rows(); ++r) {
      const Polynomial& e = phi_n.at(r, lam);
      if (e.is_zero()) continue;
      auto c = lifter.lift(ModuleVector(r1, {e}));
      if (!c)
        throw NotInModule("entry (" + std::to_string(r) + ", " +
                          std::to_string(lam) + ") = " + e.to_string() +
                          " of the top map is not in the sop ideal");
      for (std::size_t i = 0; i < sop.n(); ++i) coords[i][r] = (*c)[i];
    }
    std::vector<ModuleVector> row;
    for (std::size_t i = 0; i < sop.n(); ++i) {
      if (target.rank() == 0)
        row.emplace_back(sop.ring, target);
      else
        row.emplace_back(target, std::move(coords[i]));
    }
    dec.v.push_back(std::move(row));
  }
  return dec;
}

}  // namespace cstar
