#pragma once

#include <string>
#include <vector>

#include "epwstab/wedge6.hpp"

namespace epws {

// Diagonal 1-parameter subgroup of SL(6): t -> diag(t^r0, ..., t^r5).
struct OnePS {
  std::vector<long> r;  // 6 integers, sum 0, not all 0
  explicit OnePS(std::vector<long> weights);
  bool operator==(const OnePS& o) const = default;
};

struct IsotypicLevel {
  long weight;
  std::vector<std::size_t> coords;  // ambient coordinate indices at this weight
};

// Weight decomposition of a coordinatized representation, weights strictly
// decreasing; for wedge^3 of a 1-PS the levels satisfy e_i + e_{s-i} = 0 and
// matching dimensions.
struct IsotypicDecomp {
  std::vector<IsotypicLevel> levels;
  std::size_t ambient() const;
  std::size_t level_count() const { return levels.size(); }
};

// Group ambient coordinates by the given weights, sorted descending.
IsotypicDecomp grade_coordinates(const std::vector<long>& coord_weights);
// Weight of monomial e_ijk is r_i + r_j + r_k.
IsotypicDecomp induced_decomposition(const OnePS& lambda);

struct LambdaType {
  std::vector<std::size_t> d;  // one entry per level, top weight first
  std::vector<std::size_t> reduced;  // entries at strictly positive weights
  bool operator==(const LambdaType& o) const = default;
};

// d_i = dim(A cap L_i) - dim(A cap L_{i-1}) along the descending filtration
// L_i = (levels 0..i). Works for any subspace, not just lagrangians.
LambdaType graded_type(const Subspace& a, const IsotypicDecomp& dec);
LambdaType lambda_type(const Lagrangian& a, const OnePS& lambda);

// mu = sum_i e_i d_i; also available through the halved form
// 2(sum_{e_i > 0} e_i d_i - sum_{e_i > 0} e_i dim U_i / 2), and the two must
// agree for symmetric (lagrangian) types.
long graded_mu(const Subspace& a, const IsotypicDecomp& dec);
long mu_value(const Lagrangian& a, const OnePS& lambda);
long mu_value_halved_form(const Lagrangian& a, const OnePS& lambda);

// mu as an affine function of the type entries at positive weights:
// mu(d) = 2 * (sum coeff_i d_i + constant).
struct MuForm {
  std::vector<long> coeff;  // per positive-weight level, top first
  Rational constant;
  long eval(const std::vector<std::size_t>& reduced_type) const;
  std::string str() const;  // e.g. "2(3d0 + d1 - 6)"
  bool operator==(const MuForm& o) const = default;
};
MuForm mu_symbolic(const OnePS& lambda);
MuForm mu_symbolic(const IsotypicDecomp& dec);

// Componentwise-cumulative dominance order on types of one decomposition.
bool dominates(const LambdaType& a, const LambdaType& b);

// Direct sum of the level projections of A cap L_i: the lambda-split limit.
Subspace graded_limit(const Subspace& a, const IsotypicDecomp& dec);
Lagrangian limit_lagrangian(const Lagrangian& a, const OnePS& lambda);
bool is_split(const Subspace& a, const IsotypicDecomp& dec);

}  // namespace epws
