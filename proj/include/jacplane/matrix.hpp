#pragma once

#include <cstddef>
#include <vector>

#include "jacplane/field.hpp"

namespace jacplane {

// Dense row-major matrix over GF(p).  Values are immutable in spirit: the
// analysis code builds a matrix once and only queries it.  Elimination
// routines work on internal copies, pivot on the first nonzero entry of a
// column and skip zero multipliers, which keeps the common sparse inputs
// (monomial maps) near linear time.
class ExactMatrix {
public:
  ExactMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const PrimeField& field, std::size_t n);
  static ExactMatrix from_columns(const PrimeField& field, std::size_t rows,
                                  const std::vector<std::vector<u32>>& cols);
  static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  u32 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, u32 v) { data_[r * cols_ + c] = v; }
  void add_at(std::size_t r, std::size_t c, u32 v) {
    u32& e = data_[r * cols_ + c];
    e = field_.add(e, v);
  }

  std::size_t rank() const;

  // Basis of the right kernel; size() == cols() - rank().
  std::vector<std::vector<u32>> kernel_basis() const;

  // True iff v (length rows()) lies in the column span.
  bool in_column_span(const std::vector<u32>& v) const;

  // Rows span { w : w^T M = 0 }.
  ExactMatrix left_annihilator() const;

  // Nonzero rows of a row echelon form; the rows span the row space.
  ExactMatrix row_echelon() const;

  std::vector<u32> apply(const std::vector<u32>& v) const;  // M v
  ExactMatrix transposed() const;

private:
  // Forward elimination in place; returns rank, records pivot columns.
  std::size_t echelonize(std::vector<u32>& a, std::size_t m, std::size_t n,
                         std::vector<std::size_t>* pivot_cols) const;
  void back_substitute(std::vector<u32>& a, std::size_t n,
                       const std::vector<std::size_t>& pivot_cols) const;

  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<u32> data_;
};

}  // namespace jacplane
