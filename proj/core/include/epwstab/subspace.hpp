#pragma once

#include <vector>

#include "epwstab/qmatrix.hpp"

namespace epws {

// Linear subspace of Q^n, held as canonical RREF rows so that equality of
// subspaces is equality of representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  // {x : (b, x) = 0 for every basis vector b}, pairing (a,b) = a^T form b.
  Subspace perp(const QMatrix& form) const;
  // Image under a linear map given by matrix M (columns = ambient of *this).
  Subspace apply(const QMatrix& m) const;

 private:
  std::size_t ambient_;
  QMatrix basis_;
};

}  // namespace epws
