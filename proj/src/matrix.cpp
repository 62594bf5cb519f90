#include "lefkit/matrix.hpp"

#include <algorithm>

namespace lefkit {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<Fp>>& rows,
                         std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Fp> Matrix::row(std::size_t i) const {
  return std::vector<Fp>(entries_.begin() + i * cols_,
                         entries_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix multiply: dimension mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Fp a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, other.at(k, j)));
    }
  return out;
}

std::vector<Fp> Matrix::apply(const std::vector<Fp>& v) const {
  if (v.size() != cols_) throw Error("matrix apply: dimension mismatch");
  std::vector<Fp> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Fp acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      acc = field_.add(acc, field_.mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Fp e) { return e == 0; });
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    // first nonzero entry at or below pivot_row
    std::size_t sel = pivot_row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row)
      for (std::size_t j = col; j < cols_; ++j)
        std::swap(at(sel, j), at(pivot_row, j));
    Fp scale = field_.inv(at(pivot_row, col));
    for (std::size_t j = col; j < cols_; ++j)
      at(pivot_row, j) = field_.mul(at(pivot_row, j), scale);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row) continue;
      Fp factor = at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols_; ++j)
        at(i, j) = field_.sub(at(i, j), field_.mul(factor, at(pivot_row, j)));
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<Fp>> Matrix::kernel_basis() const {
  Matrix r = *this;
  std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Fp>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Fp> v(cols_, 0);
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = field_.neg(r.at(k, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Fp> RowSpace::reduce(std::vector<Fp> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Fp factor = v[pivots_[k]];
    if (factor == 0) continue;
    for (std::size_t j = pivots_[k]; j < dim_; ++j)
      v[j] = field_.sub(v[j], field_.mul(factor, rows_[k][j]));
  }
  return v;
}

bool RowSpace::contains(const std::vector<Fp>& v) const {
  std::vector<Fp> r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Fp e) { return e == 0; });
}

bool RowSpace::insert(const std::vector<Fp>& v) {
  if (v.size() != dim_) throw Error("RowSpace: vector length mismatch");
  std::vector<Fp> r = reduce(v);
  std::size_t lead = 0;
  while (lead < dim_ && r[lead] == 0) ++lead;
  if (lead == dim_) return false;
  Fp scale = field_.inv(r[lead]);
  for (std::size_t j = lead; j < dim_; ++j) r[j] = field_.mul(r[j], scale);
  // keep rows sorted by pivot so reduce() stays a single pass
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

std::vector<std::vector<Fp>> extend_basis(
    const PrimeField& field, const std::vector<std::vector<Fp>>& inside,
    const std::vector<std::vector<Fp>>& ambient, std::size_t dim) {
  RowSpace ambient_span(field, dim);
  for (const auto& v : ambient) ambient_span.insert(v);
  for (const auto& v : inside)
    if (!ambient_span.contains(v))
      throw Error("extend_basis: inside vector not contained in ambient span");

  RowSpace span(field, dim);
  for (const auto& v : inside) span.insert(v);
  std::vector<std::vector<Fp>> added;
  for (const auto& v : ambient)
    if (span.insert(v)) added.push_back(v);
  return added;
}

} // namespace lefkit
