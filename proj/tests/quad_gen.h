#pragma once

// Random instance generators for each precondition class of the low-order
// coefficient criteria, shared by the unit suite and the acceptance gate.
// Everything is built in split coordinates (kernel of q* = the last k
// coordinates) and then optionally conjugated by a common congruence, which
// leaves all the tested conditions invariant.

#include "epwstab/quadforms.hpp"

namespace quadgen {

using epws::QMatrix;
using epws::QuadForm;
using epws::Rational;
using epws::Rng;
using epws::Vec;

inline QMatrix random_symmetric(Rng& rng, std::size_t n, long span = 4) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = rng.integer(-span, span);
  return m;
}

inline QMatrix random_invertible(Rng& rng, std::size_t n, long span = 3) {
  QMatrix m(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.integer(-span, span);
  } while (m.det() == 0);
  return m;
}

inline QMatrix congruent(const QMatrix& m, const QMatrix& p) {
  return p.transpose() * m * p;
}

// Nondegenerate block whose inverse has a known rational isotropic vector:
// q0 = M^T H M with H = diag(1, -1, 1, ...), so w = M^T (e0 + e1) satisfies
// w^T q0^{-1} w = 0.
struct IsotropicBlock {
  QMatrix q0;
  Vec w;
};
inline IsotropicBlock isotropic_block(Rng& rng, std::size_t n) {
  QMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) h.at(i, i) = i == 1 ? -1 : long(i) + 1;
  QMatrix m = random_invertible(rng, n);
  IsotropicBlock b{congruent(h, m), Vec(n)};
  for (std::size_t j = 0; j < n; ++j) b.w[j] = m.at(0, j) + m.at(1, j);
  return b;
}

// q* of corank k in split coordinates: diag(q0, 0_k), q0 nondegenerate.
inline QMatrix split_qs(Rng& rng, std::size_t n, std::size_t k) {
  QMatrix q0;
  do {
    q0 = random_symmetric(rng, n - k);
  } while (q0.det() == 0);
  QMatrix qs(n, n);
  for (std::size_t i = 0; i + k < n; ++i)
    for (std::size_t j = 0; j + k < n; ++j) qs.at(i, j) = q0.at(i, j);
  return qs;
}

// Generic instance for the lowtail / Phi_2k layer. vanish_on_k forces
// q|_{ker q*} = 0; drop_rank additionally forces the t^{2k} coefficient to
// vanish (off-diagonal block of deficient rank).
inline std::pair<QMatrix, QMatrix> lowtail_instance(Rng& rng, std::size_t n,
                                                    std::size_t k,
                                                    bool vanish_on_k,
                                                    bool drop_rank) {
  QMatrix qs = split_qs(rng, n, k);
  QMatrix q = random_symmetric(rng, n);
  if (vanish_on_k)
    for (std::size_t i = n - k; i < n; ++i)
      for (std::size_t j = n - k; j < n; ++j) q.at(i, j) = 0;
  if (drop_rank && k >= 2)
    // make the last kernel column a multiple of the previous one
    for (std::size_t i = 0; i + k < n; ++i) q.at(i, n - 1) = q.at(n - 1, i) = q.at(i, n - 2) * 2;
  return {qs, q};
}

// corank 2, q|_K of rank <= 1: the Phi_3 precondition.
inline std::pair<QMatrix, QMatrix> phi3_instance(Rng& rng, std::size_t n) {
  QMatrix qs = split_qs(rng, n, 2);
  QMatrix q = random_symmetric(rng, n);
  q.at(n - 2, n - 2) = q.at(n - 2, n - 1) = q.at(n - 1, n - 2) = 0;
  if (rng.integer(0, 1)) q.at(n - 1, n - 1) = 0;  // sometimes q|_K = 0 exactly
  return {qs, q};
}

// corank 2, q|_K = 0 and vanishing t^4 coefficient: the Phi_5 precondition.
// With q* = diag(q0, 0_2) and q = [[A, B], [B^T, 0]] the t^4 coefficient is
// det(q0) det(B^T q0^{-1} B), so choose the first column of B isotropic for
// q0^{-1} and the second orthogonal to its image.
inline std::pair<QMatrix, QMatrix> phi5_instance(Rng& rng, std::size_t n) {
  std::size_t m = n - 2;
  IsotropicBlock blk = isotropic_block(rng, m);
  QMatrix qs(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) qs.at(i, j) = blk.q0.at(i, j);
  // q0^{-1} w, for the orthogonality constraint on the second column
  Vec img = blk.q0.inverse()->apply(blk.w);
  Vec b2(m);
  // solve <b2, q0^{-1} w> = 0 with random free entries
  std::size_t piv = 0;
  while (piv + 1 < m && img[piv] == 0) ++piv;
  Rational dot = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == piv) continue;
    b2[i] = rng.integer(-4, 4);
    dot += b2[i] * img[i];
  }
  b2[piv] = img[piv] == 0 ? Rational(1) : -dot / img[piv];
  QMatrix q = random_symmetric(rng, n);
  for (std::size_t i = 0; i < m; ++i) {
    q.at(i, m) = q.at(m, i) = blk.w[i];
    q.at(i, m + 1) = q.at(m + 1, i) = b2[i];
  }
  q.at(m, m) = q.at(m, m + 1) = q.at(m + 1, m) = q.at(m + 1, m + 1) = 0;
  return {qs, q};
}

// Instance of the (r, s) plane assumption behind the x^3 y coefficient test:
// corank 2 q*, r|_K = 0 with its off-diagonal block built on an isotropic
// column, s|_K of rank 1 with kernel v = first kernel vector.
struct C31Instance {
  QMatrix qs;
  QMatrix r;
  QMatrix s;
};
inline C31Instance c31_instance(Rng& rng, std::size_t n) {
  std::size_t m = n - 2;
  IsotropicBlock blk = isotropic_block(rng, m);
  QMatrix qs(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) qs.at(i, j) = blk.q0.at(i, j);
  Vec qinv_w = blk.q0.inverse()->apply(blk.w);

  // r: kills K on the diagonal block; columns r(v), r(k2) with r(v) = w
  // isotropic so that the dual form of q* is degenerate on r(K), and the
  // second column orthogonal to q0^{-1} w so the plane condition has rank 1.
  Vec d1(m);
  bool ok = false;
  while (!ok) {
    Rational dot = 0;
    std::size_t piv = 0;
    while (piv + 1 < m && qinv_w[piv] == 0) ++piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == piv) continue;
      d1[i] = rng.integer(-4, 4);
      dot += d1[i] * qinv_w[i];
    }
    d1[piv] = qinv_w[piv] == 0 ? Rational(1) : -dot / qinv_w[piv];
    // need the plane <w, d1> two-dimensional and d1 non-isotropic
    Rational norm = 0;
    Vec qinv_d1 = blk.q0.inverse()->apply(d1);
    for (std::size_t i = 0; i < m; ++i) norm += d1[i] * qinv_d1[i];
    ok = norm != 0;
  }
  QMatrix r = random_symmetric(rng, n);
  for (std::size_t i = 0; i < m; ++i) {
    r.at(i, m) = r.at(m, i) = blk.w[i];
    r.at(i, m + 1) = r.at(m + 1, i) = d1[i];
  }
  r.at(m, m) = r.at(m, m + 1) = r.at(m + 1, m) = r.at(m + 1, m + 1) = 0;

  // s: rank 1 on K with kernel the first kernel vector v; its image of v must
  // be q0^{-1}-orthogonal to w and non-isotropic so the plane condition holds
  QMatrix s = random_symmetric(rng, n);
  s.at(m, m) = s.at(m, m + 1) = s.at(m + 1, m) = 0;
  s.at(m + 1, m + 1) = rng.integer(1, 4);
  Vec sv(m);
  ok = false;
  while (!ok) {
    Rational dot = 0;
    std::size_t piv = 0;
    while (piv + 1 < m && qinv_w[piv] == 0) ++piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == piv) continue;
      sv[i] = rng.integer(-4, 4);
      dot += sv[i] * qinv_w[i];
    }
    sv[piv] = qinv_w[piv] == 0 ? Rational(1) : -dot / qinv_w[piv];
    Rational norm = 0;
    Vec qinv_sv = blk.q0.inverse()->apply(sv);
    for (std::size_t i = 0; i < m; ++i) norm += sv[i] * qinv_sv[i];
    ok = norm != 0;
  }
  for (std::size_t i = 0; i < m; ++i) s.at(i, m) = s.at(m, i) = sv[i];
  return {qs, r, s};
}

}  // namespace quadgen
