// Graded free complexes, Koszul complexes and systems of parameters.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cstar/groebner.hpp"
#include "cstar/poly_matrix.hpp"

namespace cstar {

/// Subset I of N = {1..n}, strictly increasing.
using KoszulIndex = std::vector<int>;

/// s(i, I) = #{j in I : j < i}
int koszul_s(int i, const KoszulIndex& I);
/// t(I) = sum over i in I of (i - 1)
int koszul_t(const KoszulIndex& I);
/// p-subsets of {1..n} in lexicographic order; the position in this list is
/// the basis index of e_I in K_p.
std::vector<KoszulIndex> koszul_subsets(int n, int p);
std::size_t koszul_position(int n, const KoszulIndex& I);
KoszulIndex koszul_complement(int n, const KoszulIndex& I);
KoszulIndex koszul_without(const KoszulIndex& I, int i);
std::string koszul_string(const KoszulIndex& I);

/// Validated system of parameters x_1..x_n.
struct SopData {
  RingPtr ring;
  std::vector<Polynomial> elements;
  std::vector<std::int64_t> degrees;
  mpz_class colength;  // dim_k R/(x)

  std::size_t n() const { return elements.size(); }
};

/// Checks n >= 2, homogeneity, positive degrees and finite colength.
/// Throws NotASop (with the Hilbert series) when R/(x) has infinite length.
SopData validate_sop(const RingPtr& ring, std::vector<Polynomial> x);

/// 0 -> F_n -> ... -> F_0 with maps(p - 1) = phi_p : F_p -> F_{p-1}.
class FreeComplex {
 public:
  FreeComplex(RingPtr ring, std::vector<GradedFreeModule> modules,
              std::vector<PolyMatrix> maps);

  const RingPtr& ring() const { return ring_; }
  std::size_t length() const { return maps_.size(); }
  const GradedFreeModule& module(std::size_t p) const { return modules_.at(p); }
  const std::vector<GradedFreeModule>& modules() const { return modules_; }
  /// phi_p for 1 <= p <= length.
  const PolyMatrix& map(std::size_t p) const { return maps_.at(p - 1); }
  const std::vector<PolyMatrix>& maps() const { return maps_; }

  friend bool operator==(const FreeComplex& a, const FreeComplex& b) {
    return a.modules_ == b.modules_ && a.maps_ == b.maps_;
  }

 private:
  RingPtr ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<PolyMatrix> maps_;
};

/// Koszul complex of the sop, K_p graded by the sum of deg x_i over I.
FreeComplex koszul(const SopData& sop);

struct ComplexDefect {
  enum class Kind { Homogeneity, Composition };
  Kind kind;
  std::size_t p, row, col;

  std::string describe() const;
};

/// First homogeneity or composition defect, scanning p = 1..n.
std::optional<ComplexDefect> check_complex(const FreeComplex& c);

struct AcyclicityCertificate {
  bool ok = true;
  std::size_t failed_position = 0;
  std::string detail;
  /// witnesses[p - 1][k]: coefficients expressing the k-th syzygy of phi_p
  /// through the columns of phi_{p+1}.
  std::vector<std::vector<std::vector<Polynomial>>> witnesses;
};

/// Ker phi_p ⊆ Im phi_{p+1} for 1 <= p < n, and phi_n injective.
AcyclicityCertificate certify_acyclic(const FreeComplex& c);

/// Every entry of phi_n lies in the ideal of the sop.
bool check_QF_containment(const FreeComplex& c, const SopData& sop);

/// v[lambda][i] with phi_n(v_lambda) = sum_i x_{i+1} v[lambda][i].
struct Decomposition {
  GradedFreeModule target;  // F_{n-1}
  std::vector<std::vector<ModuleVector>> v;
};

/// Canonical decomposition: each entry of phi_n(v_lambda) is divided by the
/// Gröbner basis of (x), quotient terms going to the first dividing x_i.
/// Throws NotInModule when an entry is outside (x).
Decomposition decompose_images(const PolyMatrix& phi_n,
                               const GradedFreeModule& target,
                               const SopData& sop);

}  // namespace cstar
