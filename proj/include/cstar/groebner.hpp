// Gröbner bases for submodules of graded free modules over k[x]/J.
//
// Every submodule computation works modulo J·F when the ring carries a
// quotient ideal J: the generators J·e_k are adjoined implicitly.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstar/poly_matrix.hpp"
#include "cstar/polynomial.hpp"

namespace cstar {

/// Element of a graded free module, as its coordinate column.
class ModuleVector {
 public:
  ModuleVector(RingPtr ring, GradedFreeModule ambient);  // zero vector
  ModuleVector(GradedFreeModule ambient, std::vector<Polynomial> coords);
  /// Also valid for rank 0.
  ModuleVector(RingPtr ring, GradedFreeModule ambient,
               std::vector<Polynomial> coords);
  static ModuleVector unit(RingPtr ring, GradedFreeModule ambient,
                           std::size_t i);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& ambient() const { return ambient_; }
  const std::vector<Polynomial>& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// Common value of deg(coord_i) + deg(e_i); nullopt if not homogeneous or zero.
  std::optional<std::int64_t> homogeneous_degree() const;

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    return a += b;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    return a -= b;
  }
  ModuleVector operator-() const;
  ModuleVector times(const Polynomial& f) const;
  ModuleVector scaled(const Scalar& c) const;
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  GradedFreeModule ambient_;
  std::vector<Polynomial> coords_;
};

/// Columns of a matrix as module vectors of its target module.
std::vector<ModuleVector> columns_of(const PolyMatrix& a,
                                     const GradedFreeModule& target);

/// Linear combination sum c_i * gens_i.
ModuleVector combine(const std::vector<Polynomial>& coeffs,
                     const std::vector<ModuleVector>& gens,
                     const RingPtr& ring, const GradedFreeModule& ambient);

/// Submodule with its reduced Gröbner basis.
class SubmoduleGB {
 public:
  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& ambient() const { return ambient_; }
  const std::vector<ModuleVector>& generators() const { return generators_; }
  /// Reduced, monic, sorted by decreasing leading term.
  const std::vector<ModuleVector>& basis() const { return basis_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return true; }

  bool contains(const ModuleVector& v) const;
  bool contains(const SubmoduleGB& other) const;
  /// Module is the whole ambient free module.
  bool is_everything() const;

 private:
  friend SubmoduleGB buchberger(const RingPtr&, const GradedFreeModule&,
                                std::vector<ModuleVector>, MonomialOrder);
  SubmoduleGB() = default;

  RingPtr ring_;
  GradedFreeModule ambient_;
  std::vector<ModuleVector> generators_;
  std::vector<ModuleVector> basis_;
  MonomialOrder order_;
};

/// Reduced Gröbner basis. Pairs are taken smallest degree first, then
/// smallest lcm, then lowest indices; Buchberger's two criteria prune pairs.
SubmoduleGB buchberger(const RingPtr& ring, const GradedFreeModule& ambient,
                       std::vector<ModuleVector> gens,
                       MonomialOrder order);
SubmoduleGB buchberger(const RingPtr& ring, const GradedFreeModule& ambient,
                       std::vector<ModuleVector> gens);

/// Ideal of the ring as a submodule of R^1.
SubmoduleGB ideal(const RingPtr& ring, const std::vector<Polynomial>& gens);
/// Image of a matrix inside its target.
SubmoduleGB image(const PolyMatrix& a, const GradedFreeModule& target);

/// Fully reduced remainder of v modulo the basis of b.
ModuleVector normal_form(const ModuleVector& v, const SubmoduleGB& b);

/// Precomputed lifting data for a fixed generator list: the Gröbner basis of
/// the graph module {(g_i, e_i)} in F ⊕ R^s, position over term with F first.
class Lifter {
 public:
  Lifter(const RingPtr& ring, const GradedFreeModule& ambient,
         std::vector<ModuleVector> gens);

  /// Coefficients c with v = sum c_i gens_i (mod J·F), or nullopt when v is
  /// not in the span. The recombination is re-checked before returning.
  std::optional<std::vector<Polynomial>> lift(const ModuleVector& v) const;
  /// Generators of {c : sum c_i gens_i = 0}, as vectors of R^s graded by the
  /// generator degrees.
  const std::vector<ModuleVector>& syzygies() const { return syzygies_; }
  const GradedFreeModule& source() const { return source_; }

  struct Impl;

 private:
  RingPtr ring_;
  GradedFreeModule ambient_;
  GradedFreeModule source_;
  std::vector<ModuleVector> gens_;
  std::vector<ModuleVector> syzygies_;
  std::shared_ptr<const Impl> impl_;
};

std::optional<std::vector<Polynomial>> lift_witness(
    const ModuleVector& v, const std::vector<ModuleVector>& gens);

struct Syzygies {
  GradedFreeModule source;  // rank s, degree of each generator
  std::vector<ModuleVector> generators;
};
Syzygies syzygies(const RingPtr& ring, const GradedFreeModule& ambient,
                  const std::vector<ModuleVector>& gens);

/// Degree of a generator for grading R^s: its homogeneous degree, or the
/// largest twisted term degree when not homogeneous, 0 for zero.
std::int64_t generator_degree(const ModuleVector& v);

SubmoduleGB colon(const SubmoduleGB& m, const Polynomial& q);
/// {f : q f ∈ M for all q ∈ Q}, as the intersection of the single colons.
SubmoduleGB colon(const SubmoduleGB& m, const std::vector<Polynomial>& q);
SubmoduleGB intersect(const SubmoduleGB& a, const SubmoduleGB& b);
bool submodule_equal(const SubmoduleGB& a, const SubmoduleGB& b);

/// Ring modulo the homogeneous ideal generated by `gens`.
RingPtr with_quotient(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Normal form modulo the ring's quotient ideal (identity without one).
Polynomial reduce_quotient(const Polynomial& f);
PolyMatrix reduce_quotient(const PolyMatrix& a);
/// f is zero in the ring, i.e. lies in the quotient ideal.
bool is_zero_in_ring(const Polynomial& f);

/// The irrelevant ideal (all variables).
std::vector<Polynomial> irrelevant_ideal(const RingPtr& ring);

}  // namespace cstar
