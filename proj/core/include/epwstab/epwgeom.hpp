#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epwstab/multipoly.hpp"
#include "epwstab/quadforms.hpp"
#include "epwstab/wedge6.hpp"

namespace epws {

// Affine chart data for the degeneracy-locus determinants: a direction v0 and
// a complementary hyperplane V0, packaged as the frame (v0, u1..u5) with the
// u's a basis of V0.
struct Chart {
  Vec v0;         // in Q^6
  QMatrix frame;  // 6x6, column 0 = v0, columns 1..5 span V0
};

// The degree-6 hypersurface attached to a lagrangian, in the standard
// coordinates X0..X5; zero polynomial with degenerate_flag when the locus is
// all of P(V).
struct EPWSextic {
  MultiPoly form;  // 6 vars, graded-lex leading coefficient 1
  bool degenerate_flag = false;
  Chart chart;     // primary admissible chart used
};

// Restriction of the degeneracy locus to a plane P(W) with wedge^3 W inside A,
// written in the canonical (RREF) basis of W.
struct PlaneSextic {
  QMatrix w_frame;  // 3x6 rows: the declared ordered basis of W
  MultiPoly form;   // 3 vars, normalized; zero when full_plane_flag
  bool full_plane_flag = false;
  Chart chart;
};

// Graded pieces of the chart equation of a plane sextic at a center point.
struct LocalExpansion {
  Vec center;                     // v0 in Q^6
  std::vector<MultiPoly> pieces;  // g_0..g_6, two chart variables
  std::size_t kbar = 0;           // dim(A cap F_{v0}) - 1
  MultiPoly psi_det;              // det of the kernel pencil, binary form
  bool low_vanish = false;        // g_i = 0 for i < kbar
  bool locus_match = false;       // g_kbar proportional to psi_det
};

// Quadratic form on wedge^2 V0 whose graph over v0 ^ wedge^2 V0 recovers A;
// coordinates are lex pairs of the frame vectors u1..u5. Requires wedge^3 V0
// transversal to A.
QuadForm qa_matrix(const Lagrangian& a, const Vec& v0, const Subspace& v_0);

// The Pluecker quadric alpha -> vol(v0 ^ v ^ alpha ^ alpha) on wedge^2 V0,
// same coordinates; v must lie in V0.
QuadForm plucker_qv(const Vec& v0, const Subspace& v_0, const Vec& v);

// Whether (v0, V0) is an admissible chart for A (v0 off V0, wedge^3 V0
// transversal to A).
bool chart_admissible(const Lagrangian& a, const Chart& chart);
Chart make_chart(const Vec& v0, const Subspace& v_0);

// det(q_A + q_v) over an admissible chart, homogenized and cross-checked on a
// second chart. Throws if no admissible chart exists in the deterministic
// candidate list.
EPWSextic epw_sextic(const Lagrangian& a,
                     const std::optional<Chart>& chart = std::nullopt);

// The sextic curve cut on P(W); requires wedge^3 W inside A.
PlaneSextic plane_sextic(const Subspace& w, const Lagrangian& a);

// Chart expansion of the plane sextic centered at [v0] in P(W), with the
// kernel-pencil comparison for the lowest graded piece.
LocalExpansion local_expansion(const Lagrangian& a, const Subspace& w,
                               const Vec& v0);

struct MultBound {
  std::size_t mult = 0;
  std::size_t bound = 0;
  bool ok = false;
};
// Multiplicity of the plane sextic at [v0] against dim(A cap F_{v0}) - 1.
MultBound multiplicity_bound_check(const Lagrangian& a, const Subspace& w,
                                   const Vec& v0);

// dim(A cap F_w cap S_W) >= 2; requires wedge^3 W inside A.
bool bad_locus_cond2(const Lagrangian& a, const Subspace& w, const Vec& wvec);

// Evaluates the W0-pencil of Pluecker quadrics at a point of wedge^2 V0
// (coordinates: lex pairs of the canonical basis of V0); true iff all vanish,
// which holds on the projected Grassmannian. The class of wedge^2 W0 itself is
// the projection center and is rejected.
bool projected_grassmannian_membership(const Vec& v0, const Subspace& v_0,
                                       const Subspace& w0, const Vec& point);

// At a multiplicity-3 point p of c: tangent cone a perfect cube and the three
// next coefficients (x^4, x^3 y, x^5 in adapted coordinates with tangent cone
// y^3) vanish. An explicit tangent line (linear form on the W-coordinates) may
// be supplied; otherwise it is extracted from the tangent cone.
bool consecutive_triple_points_probe(const PlaneSextic& c, const Vec& p,
                                     const std::optional<Vec>& tangent = std::nullopt);

struct ShahReport {
  std::string matched;  // "I"-less: one of II-1..II-4, III-1, III-2, IV, or ""
  std::vector<std::string> notes;
};
// Pattern-matches the semistable-sextic normal forms in the declared
// coordinates of c. No coordinate search is attempted.
ShahReport shah_probe(const PlaneSextic& c);

struct IndeterminacyReport {
  std::size_t multiplicity = 0;
  bool item1 = false;  // consecutive triple points + triple-line cone upstairs
  bool item2 = false;  // mult >= 4, with 3l1 + l2 tangent cone when mult = 4
};
// The two period-map indeterminacy conditions evaluated at a supplied
// rational point of c.
IndeterminacyReport indeterminacy_probe(const PlaneSextic& c, const Vec& p);

// Smoothness of V(F) in P^2 for a nonzero homogeneous F: the Jacobian ideal
// contains all forms of the Macaulay degree. Exact, no factorization.
bool plane_curve_smooth(const MultiPoly& f);
// No multiple factors (binary or ternary homogeneous form).
bool form_squarefree(const MultiPoly& f);

}  // namespace epws
