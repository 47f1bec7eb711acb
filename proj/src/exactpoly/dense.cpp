#include "cstar/dense.hpp"

#include <algorithm>

#include "cstar/errors.hpp"
#include "cstar/kernels.hpp"

namespace cstar {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_rational())
    q_.assign(rows * cols, mpq_class(0));
  else
    mod_.assign(rows * cols, 0);
}

Scalar DenseMatrix::get(std::size_t r, std::size_t c) const {
  if (field_.is_rational()) return Scalar::from_rational(field_, q_[r * cols_ + c]);
  return Scalar(field_, static_cast<long>(mod_[r * cols_ + c]));
}

void DenseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_)) throw IncompatibleField("dense matrix field");
  if (field_.is_rational())
    q_[r * cols_ + c] = v.rational();
  else
    mod_[r * cols_ + c] = v.residue();
}

bool DenseMatrix::is_zero(std::size_t r, std::size_t c) const {
  return field_.is_rational() ? q_[r * cols_ + c] == 0
                              : mod_[r * cols_ + c] == 0;
}

void DenseMatrix::append_row(const std::vector<Scalar>& row) {
  if (row.size() != cols_) throw DimensionMismatch("dense row length");
  ++rows_;
  if (field_.is_rational())
    q_.resize(rows_ * cols_, mpq_class(0));
  else
    mod_.resize(rows_ * cols_, 0);
  for (std::size_t c = 0; c < cols_; ++c) set(rows_ - 1, c, row[c]);
}

void DenseMatrix::sub_row_multiple(std::size_t dst, std::size_t src,
                                   const Scalar& f) {
  if (field_.is_rational()) {
    const mpq_class& fq = f.rational();
    mpq_class* d = q_.data() + dst * cols_;
    const mpq_class* s = q_.data() + src * cols_;
    for (std::size_t c = 0; c < cols_; ++c)
      if (s[c] != 0) d[c] -= fq * s[c];
  } else {
    kernels::active().row_submul_mod(mod_.data() + dst * cols_,
                                     mod_.data() + src * cols_, f.residue(),
                                     field_.modulus(), cols_);
  }
}

void DenseMatrix::scale_row(std::size_t r, const Scalar& f) {
  if (field_.is_rational()) {
    for (std::size_t c = 0; c < cols_; ++c) q_[r * cols_ + c] *= f.rational();
  } else {
    kernels::active().row_scale_mod(mod_.data() + r * cols_, f.residue(),
                                    field_.modulus(), cols_);
  }
}

DenseMatrix::Pivots DenseMatrix::eliminate() {
  Pivots piv;
  std::vector<bool> used(rows_, false);
  for (std::size_t c = 0; c < cols_ && piv.rows.size() < rows_; ++c) {
    std::size_t pr = rows_;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!used[r] && !is_zero(r, c)) {
        pr = r;
        break;
      }
    }
    if (pr == rows_) continue;
    used[pr] = true;
    scale_row(pr, get(pr, c).inverse());
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || is_zero(r, c)) continue;
      sub_row_multiple(r, pr, get(r, c));
    }
    piv.cols.push_back(c);
    piv.rows.push_back(pr);
  }
  return piv;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix copy(*this);
  return copy.eliminate().cols.size();
}

DenseMatrix DenseMatrix::row_echelon() const {
  DenseMatrix work(*this);
  const Pivots piv = work.eliminate();
  DenseMatrix out(field_, piv.cols.size(), cols_);
  for (std::size_t k = 0; k < piv.cols.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c)
      out.set(k, c, work.get(piv.rows[k], c));
  return out;
}

std::vector<std::vector<Scalar>> DenseMatrix::nullspace() const {
  DenseMatrix work(*this);
  const Pivots piv = work.eliminate();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : piv.cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols_, Scalar(field_));
    v[f] = Scalar(field_, 1);
    for (std::size_t k = 0; k < piv.cols.size(); ++k)
      v[piv.cols[k]] = -work.get(piv.rows[k], f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.mod_ == b.mod_ && a.q_ == b.q_;
}

}  // namespace cstar
