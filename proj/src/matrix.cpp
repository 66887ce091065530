#include "jacplane/matrix.hpp"

#include <algorithm>

namespace jacplane {

ExactMatrix::ExactMatrix(const PrimeField& field, std::size_t rows,
                         std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ExactMatrix ExactMatrix::identity(const PrimeField& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_columns(
    const PrimeField& field, std::size_t rows,
    const std::vector<std::vector<u32>>& cols) {
  ExactMatrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw InternalError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field())
    throw InternalError("hstack: shape or field mismatch");
  ExactMatrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c)
      m.set(r, a.cols() + c, b.at(r, c));
  }
  return m;
}

// Partial pivoting by first nonzero entry; zero multipliers are skipped so
// monomial-shaped inputs eliminate in near-linear time.
std::size_t ExactMatrix::echelonize(std::vector<u32>& a, std::size_t m,
                                    std::size_t n,
                                    std::vector<std::size_t>* pivot_cols) const {
  const PrimeField& F = field_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t pr = r;
    while (pr < m && a[pr * n + c] == 0) ++pr;
    if (pr == m) continue;
    if (pr != r)
      std::swap_ranges(a.begin() + long(r * n), a.begin() + long((r + 1) * n),
                       a.begin() + long(pr * n));
    u32* prow = &a[r * n];
    const u32 piv_inv = F.inv(prow[c]);
    for (std::size_t j = c; j < n; ++j)
      if (prow[j]) prow[j] = F.mul(prow[j], piv_inv);
    for (std::size_t i = r + 1; i < m; ++i) {
      u32* row = &a[i * n];
      const u32 f = row[c];
      if (!f) continue;
      row[c] = 0;
      for (std::size_t j = c + 1; j < n; ++j)
        if (prow[j]) row[j] = F.sub(row[j], F.mul(f, prow[j]));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

void ExactMatrix::back_substitute(
    std::vector<u32>& a, std::size_t n,
    const std::vector<std::size_t>& pivot_cols) const {
  const PrimeField& F = field_;
  for (std::size_t i = pivot_cols.size(); i-- > 0;) {
    const std::size_t c = pivot_cols[i];
    const u32* prow = &a[i * n];
    for (std::size_t k = 0; k < i; ++k) {
      u32* row = &a[k * n];
      const u32 f = row[c];
      if (!f) continue;
      row[c] = 0;
      for (std::size_t j = c + 1; j < n; ++j)
        if (prow[j]) row[j] = F.sub(row[j], F.mul(f, prow[j]));
    }
  }
}

std::size_t ExactMatrix::rank() const {
  std::vector<u32> a = data_;
  return echelonize(a, rows_, cols_, nullptr);
}

std::vector<std::vector<u32>> ExactMatrix::kernel_basis() const {
  std::vector<u32> a = data_;
  std::vector<std::size_t> pivots;
  const std::size_t r = echelonize(a, rows_, cols_, &pivots);
  back_substitute(a, cols_, pivots);

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<u32>> basis;
  basis.reserve(cols_ - r);
  for (std::size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<u32> v(cols_, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < r; ++i)
      v[pivots[i]] = field_.neg(a[i * cols_ + fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool ExactMatrix::in_column_span(const std::vector<u32>& v) const {
  if (v.size() != rows_)
    throw InputError("in_column_span: vector length " +
                     std::to_string(v.size()) + " != row count " +
                     std::to_string(rows_));
  const std::size_t n = cols_ + 1;
  std::vector<u32> a(rows_ * n);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(data_.begin() + long(r * cols_),
              data_.begin() + long((r + 1) * cols_), a.begin() + long(r * n));
    a[r * n + cols_] = v[r];
  }
  std::vector<std::size_t> pivots;
  echelonize(a, rows_, n, &pivots);
  return pivots.empty() || pivots.back() != cols_;
}

ExactMatrix ExactMatrix::left_annihilator() const {
  auto basis = transposed().kernel_basis();
  ExactMatrix w(field_, basis.size(), rows_);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < rows_; ++j) w.set(i, j, basis[i][j]);
  return w;
}

ExactMatrix ExactMatrix::row_echelon() const {
  std::vector<u32> a = data_;
  const std::size_t r = echelonize(a, rows_, cols_, nullptr);
  ExactMatrix e(field_, r, cols_);
  std::copy(a.begin(), a.begin() + long(r * cols_), e.data_.begin());
  return e;
}

std::vector<u32> ExactMatrix::apply(const std::vector<u32>& v) const {
  if (v.size() != cols_)
    throw InputError("apply: vector length mismatch");
  std::vector<u32> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned __int128 acc = 0;
    const u32* row = &data_[r * cols_];
    for (std::size_t c = 0; c < cols_; ++c)
      if (row[c] && v[c]) acc += u64(row[c]) * v[c];
    out[r] = u32(acc % field_.modulus());
  }
  return out;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

}  // namespace jacplane
