// Graded free modules and matrices over the polynomial ring.
//
// Orientation: a matrix A : F -> G has rank(G) rows and rank(F) columns, and
// column j is the image of the j-th basis vector of F. A is homogeneous when
// every nonzero entry (i, j) has degree deg_F(j) - deg_G(i).
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cstar/polynomial.hpp"

namespace cstar {

/// Free module with the generator degree of each basis element. In files the
/// shift convention R(t) is used instead: twist t = -degree.
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<std::int64_t> degrees)
      : degrees_(std::move(degrees)) {}
  /// Rank r with every generator in degree d.
  static GradedFreeModule uniform(std::size_t rank, std::int64_t d = 0) {
    return GradedFreeModule(std::vector<std::int64_t>(rank, d));
  }

  std::size_t rank() const { return degrees_.size(); }
  std::int64_t degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  friend GradedFreeModule direct_sum(const GradedFreeModule& a,
                                     const GradedFreeModule& b) {
    std::vector<std::int64_t> d = a.degrees_;
    d.insert(d.end(), b.degrees_.begin(), b.degrees_.end());
    return GradedFreeModule(std::move(d));
  }
  /// Sub-basis selected by indices, in the given order.
  GradedFreeModule select(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const GradedFreeModule&,
                         const GradedFreeModule&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// Columns given as coordinate vectors of equal length `rows`.
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows,
                                 const std::vector<std::vector<Polynomial>>& cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Polynomial p);
  std::vector<Polynomial> column(std::size_t c) const;

  /// Optional homogeneity certificate.
  struct Grading {
    GradedFreeModule source;
    GradedFreeModule target;
  };
  const std::optional<Grading>& grading() const { return grading_; }
  /// Attach a certificate; throws ValidationError naming the first bad entry.
  PolyMatrix& certify(const GradedFreeModule& source,
                      const GradedFreeModule& target);
  /// First (row, col) violating homogeneity for the given gradings.
  std::optional<std::pair<std::size_t, std::size_t>> homogeneity_defect(
      const GradedFreeModule& source, const GradedFreeModule& target) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Scalar& c) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;
  PolyMatrix transpose() const;
  /// Columns in the given order.
  PolyMatrix select_columns(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;

  /// [a b]
  static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
  /// [a; b]
  static PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);
  /// [a b; c d]
  static PolyMatrix block(const PolyMatrix& a, const PolyMatrix& b,
                          const PolyMatrix& c, const PolyMatrix& d);

  bool is_zero() const;
  /// First nonzero entry, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
  std::optional<Grading> grading_;
};

}  // namespace cstar
