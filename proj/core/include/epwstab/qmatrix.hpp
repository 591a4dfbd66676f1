#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epwstab/rational.hpp"

namespace epws {

// Dense matrix over Q. Everything downstream (subspace lattice, mu, the
// sextic determinants) reduces to RREF and kernels of these.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;
  Vec apply(const Vec& x) const;  // M x

  // Reduced row echelon form (pivots 1, zero rows dropped). Canonical.
  QMatrix rref() const;
  std::size_t rank() const;
  Rational det() const;  // fraction-free Gauss; square only
  // Canonical basis of {x : Mx = 0} (rows of the result, themselves RREF).
  std::vector<Vec> kernel_basis() const;
  // One solution of Mx = b, or nullopt.
  std::optional<Vec> solve(const Vec& b) const;
  std::optional<QMatrix> inverse() const;

  QMatrix vstack(const QMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

std::vector<Vec> kernel_basis(const QMatrix& m);

}  // namespace epws
