#ifndef LEFKIT_MATRIX_HPP
#define LEFKIT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "lefkit/prime_field.hpp"

namespace lefkit {

// Dense row-major matrix over GF(p).  Every instance the toolkit produces
// stays below a few hundred rows/columns, so there is no sparse path.
class Matrix {
public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);

  // Builds a matrix whose rows are the given vectors (all of equal length).
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<Fp>>& rows,
                          std::size_t cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  Fp at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Fp> row(std::size_t i) const;

  Matrix transpose() const;
  Matrix multiply(const Matrix& other) const;
  std::vector<Fp> apply(const std::vector<Fp>& v) const;

  bool is_zero() const;

  // In-place reduced row echelon form with first-nonzero pivoting.
  // Returns the pivot columns in increasing order.  Deterministic.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Canonical kernel basis read off the reduced echelon form: one vector per
  // free column, unit at the free column, pivot rows filled with negated
  // echelon entries.  size = cols - rank.
  std::vector<std::vector<Fp>> kernel_basis() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fp> entries_;
};

// Greedily extends `inside` to a basis of span(ambient) using vectors from
// `ambient` in their given order; returns only the added vectors.
// Requires span(inside) to be contained in span(ambient).
std::vector<std::vector<Fp>> extend_basis(
    const PrimeField& field, const std::vector<std::vector<Fp>>& inside,
    const std::vector<std::vector<Fp>>& ambient, std::size_t dim);

// Incremental row space used by extend_basis and the minimal-generator
// extraction: keeps reduced pivot rows, reports whether an inserted vector
// enlarged the span.
class RowSpace {
public:
  RowSpace(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t dim_span() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  // Reduces v against the stored rows; returns the residue.
  std::vector<Fp> reduce(std::vector<Fp> v) const;

  bool contains(const std::vector<Fp>& v) const;

  // Returns true if v was independent of the current span (and was added).
  bool insert(const std::vector<Fp>& v);

private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<Fp>> rows_;   // each normalized with leading 1
  std::vector<std::size_t> pivots_;     // pivot column of rows_[k]
};

} // namespace lefkit

#endif
