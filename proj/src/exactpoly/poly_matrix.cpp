#include "cstar/poly_matrix.hpp"

#include <string>

#include "cstar/errors.hpp"

namespace cstar {

GradedFreeModule GradedFreeModule::select(
    const std::vector<std::size_t>& idx) const {
  std::vector<std::int64_t> d;
  d.reserve(idx.size());
  for (std::size_t i : idx) d.push_back(degrees_.at(i));
  return GradedFreeModule(std::move(d));
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

PolyMatrix PolyMatrix::from_columns(
    RingPtr ring, std::size_t rows,
    const std::vector<std::vector<Polynomial>>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw DimensionMismatch("column length " + std::to_string(cols[c].size()) +
                              " != " + std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index");
  entries_[r * cols_ + c] = std::move(p);
  grading_.reset();
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

std::optional<std::pair<std::size_t, std::size_t>>
PolyMatrix::homogeneity_defect(const GradedFreeModule& source,
                               const GradedFreeModule& target) const {
  if (source.rank() != cols_ || target.rank() != rows_)
    throw DimensionMismatch("grading ranks do not match matrix shape");
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto h = at(r, c).homogeneous_degree();
      if (h.kind == HomogeneousDegree::Kind::ZeroPoly) continue;
      if (!h.is_degree() || h.degree != source.degree(c) - target.degree(r))
        return std::make_pair(r, c);
    }
  }
  return std::nullopt;
}

PolyMatrix& PolyMatrix::certify(const GradedFreeModule& source,
                                const GradedFreeModule& target) {
  if (auto bad = homogeneity_defect(source, target))
    throw ValidationError("entry (" + std::to_string(bad->first) + ", " +
                          std::to_string(bad->second) +
                          ") is not homogeneous of the required degree");
  grading_ = Grading{source, target};
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " +
                            std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  PolyMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s += a.at(i, k) * b.at(k, j);
      }
      out.entries_[i * out.cols_ + j] = std::move(s);
    }
  }
  if (a.grading_ && b.grading_ && a.grading_->source == b.grading_->target)
    out.grading_ = PolyMatrix::Grading{b.grading_->source, a.grading_->target};
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix sum shape");
  PolyMatrix out(a.ring_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix difference shape");
  PolyMatrix out(a.ring_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Scalar& c) const {
  PolyMatrix out(*this);
  for (auto& e : out.entries_) e = e.scaled(c);
  return out;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out.entries_[c * rows_ + r] = at(r, c);
  return out;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(ring_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k)
      out.entries_[r * idx.size() + k] = at(r, idx[k]);
  if (grading_)
    out.grading_ = Grading{grading_->source.select(idx), grading_->target};
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(ring_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c)
      out.entries_[k * cols_ + c] = at(idx[k], c);
  if (grading_)
    out.grading_ = Grading{grading_->source, grading_->target.select(idx)};
  return out;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row counts differ");
  PolyMatrix out(a.ring_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c)
      out.entries_[r * out.cols_ + c] = a.at(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c)
      out.entries_[r * out.cols_ + a.cols_ + c] = b.at(r, c);
  }
  if (a.grading_ && b.grading_ && a.grading_->target == b.grading_->target)
    out.grading_ = Grading{direct_sum(a.grading_->source, b.grading_->source),
                           a.grading_->target};
  return out;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column counts differ");
  PolyMatrix out(a.ring_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      out.entries_[r * out.cols_ + c] = a.at(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c)
      out.entries_[(a.rows_ + r) * out.cols_ + c] = b.at(r, c);
  if (a.grading_ && b.grading_ && a.grading_->source == b.grading_->source)
    out.grading_ = Grading{a.grading_->source,
                           direct_sum(a.grading_->target, b.grading_->target)};
  return out;
}

PolyMatrix PolyMatrix::block(const PolyMatrix& a, const PolyMatrix& b,
                             const PolyMatrix& c, const PolyMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

bool PolyMatrix::is_zero() const { return !first_nonzero().has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> PolyMatrix::first_nonzero()
    const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) return std::make_pair(r, c);
  return std::nullopt;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

}  // namespace cstar
