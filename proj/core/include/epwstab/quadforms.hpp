#pragma once

#include <optional>
#include <vector>

#include "epwstab/multipoly.hpp"
#include "epwstab/subspace.hpp"

namespace epws {

// Quadratic form on Q^d, stored as its symmetric Gram matrix.
struct QuadForm {
  QMatrix m;
  explicit QuadForm(QMatrix gram);  // validates symmetry
  std::size_t dim() const { return m.rows(); }
  Subspace kernel() const;  // ker of the associated symmetric map
  std::size_t corank() const;
  Rational eval(const Vec& v) const;
  Rational pair(const Vec& v, const Vec& w) const;
};

// q restricted to a subspace, in the subspace's canonical basis.
QuadForm restrict_form(const QuadForm& q, const Subspace& s);

// Coefficients (low degree first, length dim+1) of det(q* + t q).
std::vector<Rational> pencil_det_series(const QuadForm& qs, const QuadForm& q);

// det of the dual form of q* restricted to qtilde(K), K = ker q*.
// Requires q to vanish on K.
Rational dual_restricted_det(const QuadForm& qs, const QuadForm& q);

struct LowTailReport {
  std::size_t corank = 0;
  std::vector<Rational> series;
  bool order_ok = false;   // coefficients below t^corank all vanish
  Rational phi_k;          // coefficient of t^corank
  Rational det_q_on_K;     // det of q restricted to ker q*
};
// Order-of-vanishing bound and the first interesting coefficient, which is
// proportional to det(q|_K) with a constant depending only on q*.
LowTailReport lowtail_check(const QuadForm& qs, const QuadForm& q);

// Coefficient of t^{2k} in det(q* + t q), k = corank(q*); requires q|_K = 0.
// Vanishes iff the dual of q* restricted to qtilde(K) is degenerate.
Rational phi2k_value(const QuadForm& qs, const QuadForm& q);

// corank 2 layer: each criterion returns whether the named coefficient
// vanishes, and cross-checks the intrinsic witness condition; a disagreement
// throws (it would falsify the characterization).

// Requires corank(q*) = 2 and q|_K degenerate. True iff the t^3 coefficient
// vanishes; equivalently some 0 != e in K has qtilde(e) in Ann K and
// dual-q*(qtilde(e)) = 0.
bool phi3_criterion(const QuadForm& qs, const QuadForm& q);

// Solves qtilde(w) = qtilde*(e); defined modulo K. Requires q|_K = 0, w in K.
Vec e_of(const QuadForm& qs, const QuadForm& q, const Vec& w);

// Requires corank(q*) = 2, q|_K = 0 and vanishing t^4 coefficient. True iff
// the t^5 coefficient vanishes; equivalently some 0 != v in K satisfies the
// orthogonality condition and q(e(q;v)) = 0.
bool phi5_criterion(const QuadForm& qs, const QuadForm& q);

// det(q* + x r + y s) as an exact polynomial in (x, y).
MultiPoly pencil_plane_det(const QuadForm& qs, const QuadForm& r, const QuadForm& s);

// Checks the three-part assumption on (r, s) (r kills K; s|_K rank 1 with
// kernel v; the two images of v span a plane in Ann K on which the dual of q*
// has rank 1 with kernel spanned by rtilde(v); dual of q* degenerate on
// rtilde(K)); throws naming the failed item. Then true iff the x^3 y
// coefficient of det(q* + x r + y s) vanishes, cross-checked against
// r(e(r;v)) = 0.
bool c31_criterion(const QuadForm& qs, const QuadForm& r, const QuadForm& s);

// Two-dimensional space of 3x3 matrices all of whose nonzero members have
// rank exactly 2 (checked symbolically on construction via classify).
struct DegeneratePencil {
  QMatrix f;
  QMatrix g;
};

struct PencilClassification {
  char type = '?';            // 'l' (line), 'c' (conic), 'p' (point)
  unsigned kernel_degree = 0; // degree of the kernel parametrization
  std::vector<MultiPoly> kernel_param;  // 3 binary forms, common factor removed
  char transpose_type = '?';
};

// Orbit type of the pencil under left/right multiplication: the kernel locus
// in P^2 is a line, a smooth conic, or a single point. Throws if the pencil
// is invalid (a nonzero member of rank != 2).
PencilClassification classify_pencil(const DegeneratePencil& p);

}  // namespace epws
