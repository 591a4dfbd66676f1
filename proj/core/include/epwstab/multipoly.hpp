#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epwstab/qmatrix.hpp"

namespace epws {

using Exponents = std::vector<unsigned>;

// graded lex: compare total degree first, then lexicographically.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q with a fixed number of variables.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i, unsigned power = 1);
  static MultiPoly from_univariate(const std::vector<Rational>& coeffs);  // 1 var

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;  // 0 for the zero polynomial
  unsigned degree_in(std::size_t var) const;
  const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const = default;

  MultiPoly pow(unsigned k) const;
  Rational eval(const Vec& point) const;
  // Substitute variable var := value; variable count is unchanged.
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  // Substitute each variable x_i by the linear form sub[i] (all with the same
  // new variable count).
  MultiPoly substitute_linear(const std::vector<MultiPoly>& sub) const;
  MultiPoly derivative(std::size_t var) const;
  // Insert homogenizing variable at position var so every term reaches
  // degree deg. Requires total_degree() <= deg.
  MultiPoly homogenize(std::size_t var, unsigned deg) const;
  bool is_homogeneous() const;

  // Leading (graded-lex greatest) term.
  std::pair<Exponents, Rational> leading_term() const;
  // Scale so the leading coefficient is 1 (zero stays zero).
  MultiPoly normalized() const;
  // p ~ q up to a nonzero scalar.
  bool proportional(const MultiPoly& o) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational, GradedLexLess> terms_;
};

// Univariate helpers (nvars == 1), coefficient lists low degree first.
std::vector<Rational> univariate_coeffs(const MultiPoly& p);
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);
// gcd of binary forms (nvars == 2, both homogeneous) via dehomogenization.
MultiPoly binary_form_gcd(const MultiPoly& a, const MultiPoly& b);
// Exact division; nullopt if the remainder is nonzero (any nvars; divisor
// leading-term division must succeed at every step).
std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);
// p = q^k for some q? Returns q with leading coefficient 1.
std::optional<MultiPoly> poly_kth_root(const MultiPoly& p, unsigned k);

// Determinant of a square matrix of polynomials by evaluation at the integer
// grid {0..degree_bound}^nvars and Lagrange interpolation, verified at an
// extra point. Throws if the true degree exceeds degree_bound.
MultiPoly det_interpolated(const std::vector<std::vector<MultiPoly>>& m,
                           unsigned degree_bound);

}  // namespace epws
