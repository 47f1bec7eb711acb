// Dense matrices over the coefficient field. Prime-field rows are stored as
// residues and reduced with the kernels::row_* routines; rational rows use GMP.
#pragma once

#include <cstdint>
#include <vector>

#include "cstar/scalar.hpp"

namespace cstar {

class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  bool is_zero(std::size_t r, std::size_t c) const;
  void append_row(const std::vector<Scalar>& row);

  struct Pivots {
    std::vector<std::size_t> cols;  // pivot columns, increasing
    std::vector<std::size_t> rows;  // rows[k] holds the pivot of cols[k]
  };
  /// Gauss-Jordan without row exchanges. Columns are scanned left to right;
  /// the pivot of a column is the lowest-index unused row with a nonzero
  /// entry. Pivot rows end up scaled to 1 and every pivot column is a unit
  /// vector.
  Pivots eliminate();
  std::size_t rank() const;
  /// Reduced row echelon form of the row space, zero rows removed.
  DenseMatrix row_echelon() const;
  /// Basis of {x : A x = 0}, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  void sub_row_multiple(std::size_t dst, std::size_t src, const Scalar& f);
  void scale_row(std::size_t r, const Scalar& f);

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> mod_;  // prime field storage
  std::vector<mpq_class> q_;        // rational storage
};

}  // namespace cstar
