#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "epwstab/qmatrix.hpp"
#include "epwstab/subspace.hpp"

namespace epws {

// Basis of wedge^3 C^6: monomials e_ijk = v_i^v_j^v_k with 0 <= i<j<k <= 5,
// listed lexicographically (012, 013, ..., 345). Everything in the library
// is written in these 20 coordinates; vol(v_0^...^v_5) = 1.
inline constexpr std::size_t kTriDim = 20;

const std::vector<std::array<unsigned, 3>>& triples();
std::size_t triple_index(unsigned i, unsigned j, unsigned k);  // sorted input
// index and permutation sign for arbitrary distinct i, j, k
std::pair<std::size_t, int> triple_index_signed(unsigned i, unsigned j, unsigned k);

// Element of wedge^3 V.
struct TriVector {
  Vec c;
  TriVector() : c(kTriDim) {}
  explicit TriVector(Vec coords);
  static TriVector monomial(unsigned i, unsigned j, unsigned k, Rational a = 1);
  bool is_zero() const;
  TriVector operator+(const TriVector& o) const;
  TriVector operator-(const TriVector& o) const;
  TriVector operator*(const Rational& k) const;
  bool operator==(const TriVector& o) const = default;
};

// (a, b)_V = vol(a ^ b); the symplectic form on wedge^3 V.
Rational symplectic_pairing(const TriVector& a, const TriVector& b);
// Sign pairing of basis monomials; 0 unless complementary triples.
int monomial_pairing(std::size_t a, std::size_t b);
const QMatrix& symplectic_form_matrix();  // 20x20

TriVector wedge3(const Vec& u, const Vec& v, const Vec& w);  // vectors in Q^6

// smallest U <= V with a in wedge^3 U (image of contraction by 2-covectors)
Subspace support3(const TriVector& a);
bool is_decomposable(const TriVector& a);

// 10-dimensional isotropic subspace of wedge^3 V in canonical form.
class Lagrangian {
 public:
  explicit Lagrangian(const Subspace& s);  // validates rank 10 + isotropy
  static Lagrangian from_rows(const std::vector<Vec>& rows);

  const Subspace& space() const { return space_; }
  const QMatrix& matrix() const { return space_.basis(); }
  bool contains(const TriVector& t) const { return space_.contains(t.c); }
  bool operator==(const Lagrangian& o) const = default;

 private:
  Subspace space_;
};

bool is_lagrangian(const Subspace& s);

// F_v = {a : v ^ a = 0}
Lagrangian f_v(const Vec& v);
// S_W = (wedge^2 W) ^ V for dim W = 3; 10-dimensional
Subspace s_w(const Subspace& w);
// wedge^3 W for dim W = 3, up to the basis-choice scalar
TriVector wedge3_of(const Subspace& w);

bool theta_membership(const Lagrangian& a, const Subspace& w);
std::size_t a_cap_sw_dim(const Lagrangian& a, const Subspace& w);

// Coordinates are taken in the dual monomial basis e_ijk-dual of wedge^3 V-dual.
struct DualLagrangian {
  Lagrangian value;
};
DualLagrangian dual_lagrangian(const Lagrangian& a);
TriVector delta_v(const TriVector& a);  // coordinates of (a, .)_V in the dual basis

// Induced action of g in GL(6) on wedge^3 V (20x20 matrix).
QMatrix wedge3_matrix(const QMatrix& g);
Lagrangian transform(const Lagrangian& a, const QMatrix& g);

// Graph lagrangian over a symplectic monomial frame: rows f_I + sum_J S_IJ g_J
// with S symmetric; every symmetric S gives a lagrangian.
Lagrangian graph_lagrangian(const QMatrix& s_symmetric);
Lagrangian random_lagrangian(Rng& rng);

// span(v_i, ..., v_j) as a subspace of Q^6
Subspace v_span(unsigned i, unsigned j);

}  // namespace epws
