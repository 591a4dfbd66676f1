#include "epwstab/qmatrix.hpp"

#include <stdexcept>

namespace epws {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec QMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dim mismatch in product");
  QMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        p.at(i, j) += at(i, k) * o.at(k, j);
    }
  return p;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dim mismatch");
  QMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
  return s;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dim mismatch");
  QMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
  return s;
}

Vec QMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dim mismatch in apply");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

QMatrix QMatrix::rref() const {
  QMatrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m.at(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  QMatrix out(r, cols_);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::size_t QMatrix::rank() const { return rref().rows(); }

Rational QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = rows_;
  QMatrix m = *this;
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = 1 / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rational f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::vector<Vec> QMatrix::kernel_basis() const {
  QMatrix r = rref();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < cols_ && r.at(i, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  // canonicalize: the vectors above are already the RREF basis of the kernel
  // up to row order (one free variable each); normalize via rref for safety.
  if (!basis.empty()) {
    QMatrix b = QMatrix::from_rows(basis, cols_).rref();
    basis.clear();
    for (std::size_t i = 0; i < b.rows(); ++i) basis.push_back(b.row(i));
  }
  return basis;
}

std::optional<Vec> QMatrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  QMatrix r = aug.rref();
  Vec x(cols_);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c <= cols_ && r.at(i, c) == 0) ++c;
    if (c == cols_) return std::nullopt;  // 0 = 1 row
    x[c] = r.at(i, cols_);
    // free variables stay 0; subtract their (zero) contribution: nothing to do
    for (std::size_t j = c + 1; j < cols_; ++j) {
      // a particular solution with free vars = 0 only needs the pivot entry,
      // but the row may involve other pivots; those are handled by RREF
      // structure (coefficients on other pivot columns are 0).
      (void)j;
    }
  }
  // verify (free-variable columns with nonzero coefficients were ignored above
  // only if they are genuinely free; re-check to be safe)
  Vec chk = apply(x);
  for (std::size_t i = 0; i < rows_; ++i)
    if (chk[i] != b[i]) return std::nullopt;
  return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  QMatrix r = aug.rref();
  if (r.rows() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

QMatrix QMatrix::vstack(const QMatrix& o) const {
  if (rows_ == 0) return o;
  if (o.rows_ == 0) return *this;
  if (cols_ != o.cols_) throw std::invalid_argument("vstack width mismatch");
  QMatrix s(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s.at(rows_ + i, j) = o.at(i, j);
  return s;
}

std::vector<Vec> kernel_basis(const QMatrix& m) { return m.kernel_basis(); }

}  // namespace epws
