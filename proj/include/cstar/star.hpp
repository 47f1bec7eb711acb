// The ∗-transform of an acyclic complex with respect to a system of
// parameters, and every intermediate object of its construction.
//
// Index conventions: lambda indexes the basis v_lambda of F_n (0-based),
// Koszul indices i are 1-based, F_n ⊗ K_p is indexed lambda-major
// (lambda * C(n, p) + position of I).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cstar/complex.hpp"
#include "cstar/report.hpp"

namespace cstar {

/// F_n ⊗ K_p graded as a submodule of the cone: deg v_lambda - sum_N deg x_i +
/// sum_I deg x_i.
GradedFreeModule tensor_module(const GradedFreeModule& fn, const SopData& sop,
                               int p);
/// F_n ⊗ ∂_p : F_n ⊗ K_p -> F_n ⊗ K_{p-1}, block diagonal.
PolyMatrix tensor_koszul(const SopData& sop, std::size_t rank_fn, int p);

/// The chain map σ : F_n ⊗ K -> F with σ_p(v_lambda ⊗ e_I) = w_(lambda, I).
struct SigmaChainMap {
  std::size_t n = 0;
  GradedFreeModule top;  // F_n
  /// w[lambda][p][position of I in N_p], an element of F_p.
  std::vector<std::vector<std::vector<ModuleVector>>> w;
  /// sigma[p] : F_n ⊗ K_p -> F_p for 0 <= p <= n.
  std::vector<PolyMatrix> sigma;
  std::vector<GradedFreeModule> tensor;  // F_n ⊗ K_p

  const ModuleVector& at(std::size_t lambda, const KoszulIndex& I) const;
};

/// Top values from the decomposition, then one lift per level p = n-1..1
/// through the Koszul direction of the double complex. Re-verifies every
/// commuting square; throws LiftFailed if a level has no lift.
SigmaChainMap build_sigma(const FreeComplex& f, const SopData& sop,
                          const Decomposition& dec);

/// Checks the recursive identity phi_p(w_I) = sum_i (-1)^s(i,I) x_i w_{I\i}.
std::vector<CheckResult> sigma_structure_checks(const SigmaChainMap& s,
                                                const FreeComplex& f,
                                                const SopData& sop,
                                                const Decomposition& dec);
/// Im σ_0 + M = M : Q, and the length count of (M : Q)/M.
std::vector<CheckResult> sigma_image_checks(const SigmaChainMap& s,
                                            const FreeComplex& f,
                                            const SopData& sop);

/// Cone of σ, length n + 1: C_0 = F_0, C_p = (F_n ⊗ K_{p-1}) ⊕ F_p,
/// C_{n+1} = F_n ⊗ K_n.
FreeComplex mapping_cone(const FreeComplex& f, const SigmaChainMap& s,
                         const SopData& sop);

/// Cone with its free top summand split off: ′F_n = F_n ⊗ K_{n-1},
/// ′F_p = C_p below.
struct SplitComplex {
  FreeComplex complex;
  /// (0 | (-1)^n σ_n^{-1}) : C_n -> C_{n+1}; a left inverse of the top cone map.
  PolyMatrix splitting;
};
SplitComplex split_top(const FreeComplex& cone, const SigmaChainMap& s);

/// Greedy choice of Λ′ ⊆ Λ×N and U ⊆ basis of F_{n-1} such that
/// {v_(lambda,i)}_{Λ′} ∪ U is a basis of F_{n-1}.
struct BasisSelection {
  using Pair = std::pair<std::size_t, int>;  // (lambda, i), i 1-based
  std::vector<Pair> chosen;     // Λ′
  std::vector<Pair> remaining;  // ∗Λ = Λ×N minus Λ′
  std::vector<std::size_t> unit_rows;  // U
  /// For remaining[k]: v = sum a[k][l] v_{chosen[l]} + sum b[k][m] e_{U[m]}.
  std::vector<std::vector<Polynomial>> a;
  std::vector<std::vector<Polynomial>> b;
};
/// Throws InternalError if the chosen set is not a basis or some
/// b-coefficient has a nonzero constant term.
BasisSelection select_basis(const Decomposition& dec, const SopData& sop);

struct StarLabel {
  enum class Kind { Bracket, Angle, Star };
  Kind kind;
  std::size_t index;  // lambda for Bracket/Star, basis row for Angle
  KoszulIndex subset;  // Bracket only
  int j = 0;           // Star only, 1-based

  friend bool operator==(const StarLabel&, const StarLabel&) = default;
  std::string to_string() const;
};

/// Top two modules and maps of the transform.
struct StarTop {
  GradedFreeModule top;   // ∗F_n
  GradedFreeModule next;  // ∗F_{n-1}
  PolyMatrix phi_top;     // ∗φ_n
  PolyMatrix phi_next;    // ∗φ_{n-1}
  PolyMatrix closed_form; // ∗φ_n evaluated from the closed formula
  /// ∗v_(mu,j) as elements of ′F_n, one column each.
  PolyMatrix star_vectors;
  std::vector<StarLabel> top_labels;
  std::vector<StarLabel> next_labels;
};
/// Throws ClosedFormMismatch if the restricted map and the closed form differ.
StarTop build_star_top(const BasisSelection& sel, const SplitComplex& split,
                       const SigmaChainMap& s, const SopData& sop);

struct StarComplex {
  FreeComplex complex;
  std::vector<std::vector<StarLabel>> labels;  // one list per module
  /// Λ′ = Λ×N: the top module vanished and F_0 / (M : Q) has positive depth.
  bool top_vanished = false;

  friend bool operator==(const StarComplex& a, const StarComplex& b) {
    return a.complex == b.complex && a.labels == b.labels &&
           a.top_vanished == b.top_vanished;
  }
};

/// Everything computed on the way to the transform.
struct StarPipeline {
  std::optional<Decomposition> dec;
  std::optional<SigmaChainMap> sigma;
  std::optional<FreeComplex> cone;
  std::optional<SplitComplex> split;
  std::optional<BasisSelection> selection;
  std::optional<StarTop> top;
  StarComplex star;
};

/// Throws PreconditionFailed naming the violated hypothesis.
void check_star_preconditions(const FreeComplex& f, const SopData& sop);
StarPipeline run_star_pipeline(const FreeComplex& f, const SopData& sop);
StarComplex star_transform(const FreeComplex& f, const SopData& sop);

}  // namespace cstar
