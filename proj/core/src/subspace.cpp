#include "epwstab/subspace.hpp"

#include <stdexcept>

namespace epws {

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (!vectors.empty())
    s.basis_ = QMatrix::from_rows(vectors, ambient).rref();
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = QMatrix::identity(ambient);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  QMatrix aug = basis_.vstack(QMatrix::from_rows({v}, ambient_));
  return aug.rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  return basis_.vstack(other.basis_).rank() == dim();
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  // Equations of each subspace are the kernels of the basis matrices; the
  // intersection is cut out by the union of the two equation sets.
  std::vector<Vec> eqs = basis_.kernel_basis();
  std::vector<Vec> eqs2 = other.basis_.kernel_basis();
  eqs.insert(eqs.end(), eqs2.begin(), eqs2.end());
  if (eqs.empty()) return full(ambient_);
  return span(QMatrix::from_rows(eqs, ambient_).kernel_basis(), ambient_);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  Subspace s(ambient_);
  s.basis_ = basis_.vstack(other.basis_).rref();
  return s;
}

Subspace Subspace::perp(const QMatrix& form) const {
  if (form.rows() != ambient_ || form.cols() != ambient_)
    throw std::invalid_argument("form dimension mismatch");
  if (dim() == 0) return full(ambient_);
  return span((basis_ * form).kernel_basis(), ambient_);
}

Subspace Subspace::apply(const QMatrix& m) const {
  if (m.cols() != ambient_) throw std::invalid_argument("map domain mismatch");
  std::vector<Vec> imgs;
  for (std::size_t i = 0; i < dim(); ++i) imgs.push_back(m.apply(basis_.row(i)));
  return span(imgs, m.rows());
}

}  // namespace epws
