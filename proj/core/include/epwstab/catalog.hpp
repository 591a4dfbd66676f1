#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "epwstab/wedge6.hpp"

namespace epws {

// Named lagrangian with the parameters that produced it.
struct CatalogEntry {
  std::string name;
  std::string params;  // human-readable parameter values
  Lagrangian a;
  std::string note;  // one-line construction summary
};

// Exponent labels (i0,i1,i2,i3) of the ten weight lines of the two
// torus-lagrangians attached to a 4-space U via v_pair = u_i ^ u_j.
using Weight4 = std::array<int, 4>;
const std::vector<Weight4>& plucker_weights();
TriVector alpha_vec(const Weight4& i);
TriVector beta_vec(const Weight4& i);
Rational alpha_beta_pairing(const Weight4& i);  // (alpha_I, beta_I)_V

// The ten-monomial lagrangian cut out by the 6x10 incidence matrix with all
// row sums 5.
Lagrangian a_iii();
const std::vector<std::array<unsigned, 3>>& a_iii_triples();

// Spans of the alpha (resp. beta) lines: the lagrangians attached to the
// two rulings of Gr(2,U).
Lagrangian a_plus();
Lagrangian a_minus();

// V identified with Sym^2 L, L of dimension 3, in the monomial frame
// x0^2, x0x1, x0x2, x1^2, x1x2, x2^2. a_k spans the images of
// [l0] -> {l0 l : l in L}; a_h spans the images of [f0] -> Sym^2(ker f0).
// Both spans are computed from >= 10 rational points and asserted 10-dim.
Lagrangian a_k();
Lagrangian a_h();
// The planes k([l0]), h([f0]) as subspaces of Q^6 (Sym^2 L frame).
Subspace k_plane(const Vec& l0);
Subspace h_plane(const Vec& f0);

// Three-parameter boundary family: wedge^3 V02 + the three star generators
// + their perp inside V02 ^ wedge^2 V35. Each (a_i, b_i) != (0, 0).
Lagrangian a_p(const std::array<std::pair<Rational, Rational>, 3>& ab);
// Matrices of the three star generators as maps V02 -> V35 (volume-form
// identification of wedge^2 V02 with the dual of V02).
std::array<QMatrix, 3> a_p_homs(const std::array<std::pair<Rational, Rational>, 3>& ab);

// Two-parameter family through the twisted-cubic incidence span: the fixed
// 7-dim part plus the (c, d) plane of the residual symplectic 6-space.
Lagrangian a_cd(const std::pair<Rational, Rational>& c,
                const std::pair<Rational, Rational>& d);

// Conic-incidence family: the fixed 5-dim span, the c-plane of the weight
// +-1 part, and the graph lagrangian L_M of the weight-0 part (M symmetric
// 3x3). c != (0,0).
Lagrangian a_cl(const std::pair<Rational, Rational>& c, const QMatrix& m_sym);

// The two torus-fixed planes <v0,v1,v2> and <v2,v4,v5>.
Subspace w_infty();
Subspace w_zero();

// The signed permutation of the monomial basis implementing
// wedge^3(L^-1) o delta_V for the split quadratic form x0x5 - x1x4 + x2x3.
QMatrix r_phi_matrix();

// Monomial-lagrangian certificate: the ten triples S satisfy
// S disjoint from its complement family, |S_a| = 5 for every index a, and
// |S_a cap S_b| = 2 for a != b. Throws on non-monomial input.
bool sudoku_check(const Lagrangian& a);

std::vector<std::string> catalog_names();
// Builds the named entry with default parameters for parametric families.
CatalogEntry build(const std::string& name);

// Reproduction harness: each claim recomputes one published equation or
// normal form from scratch and compares exactly (up to scalar, in the
// recorded frame).
struct ClaimResult {
  std::string id;
  bool pass = false;
  std::vector<std::string> details;
};
std::vector<std::string> claim_ids();
ClaimResult run_claim(const std::string& id);

}  // namespace epws
