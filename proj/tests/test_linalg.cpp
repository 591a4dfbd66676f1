#include "doctest.h"

#include "epwstab/multipoly.hpp"
#include "epwstab/qmatrix.hpp"
#include "epwstab/subspace.hpp"

using namespace epws;

namespace {

QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long span = 9) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.integer(-span, span);
  return m;
}

}  // namespace

TEST_CASE("rref is idempotent and rank-consistent") {
  Rng rng(0x11a1);
  for (int t = 0; t < 50; ++t) {
    QMatrix m = random_matrix(rng, 4 + t % 4, 6);
    QMatrix r = m.rref();
    CHECK(r.rref() == r);
    CHECK(r.rows() == m.rank());
    // every kernel vector annihilates the original matrix
    for (const auto& k : m.kernel_basis()) {
      Vec img = m.apply(k);
      for (const auto& x : img) CHECK(x == 0);
    }
    CHECK(m.rank() + m.kernel_basis().size() == m.cols());
  }
}

TEST_CASE("determinant, inverse, solve") {
  Rng rng(0x11a2);
  for (int t = 0; t < 30; ++t) {
    QMatrix m = random_matrix(rng, 5, 5);
    Rational d = m.det();
    auto inv = m.inverse();
    CHECK((d != 0) == inv.has_value());
    if (inv) {
      CHECK((m * *inv) == QMatrix::identity(5));
      Vec b(5);
      for (auto& x : b) x = rng.integer(-9, 9);
      auto x = m.solve(b);
      REQUIRE(x.has_value());
      Vec back = m.apply(*x);
      CHECK(back == b);
    }
  }
  // det multiplicativity
  for (int t = 0; t < 20; ++t) {
    QMatrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("subspace lattice identities") {
  Rng rng(0x11a3);
  for (int t = 0; t < 40; ++t) {
    auto rand_space = [&](std::size_t dim) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < dim; ++i) {
        Vec v(8);
        for (auto& x : v) x = rng.integer(-5, 5);
        rows.push_back(v);
      }
      return Subspace::span(rows, 8);
    };
    Subspace a = rand_space(3), b = rand_space(4);
    Subspace s = a.sum(b), i = a.intersect(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    // double perp under the identity pairing
    Subspace pp = a.perp(QMatrix::identity(8)).perp(QMatrix::identity(8));
    CHECK(pp == a);
  }
}

TEST_CASE("polynomial arithmetic round trips") {
  Rng rng(0x11a4);
  for (int t = 0; t < 30; ++t) {
    MultiPoly p(3), q(3);
    for (int k = 0; k < 5; ++k) {
      Exponents e = {unsigned(rng.integer(0, 2)), unsigned(rng.integer(0, 2)),
                     unsigned(rng.integer(0, 2))};
      p.set_coeff(e, rng.rational(5));
      e = {unsigned(rng.integer(0, 2)), unsigned(rng.integer(0, 2)),
           unsigned(rng.integer(0, 2))};
      q.set_coeff(e, rng.rational(5));
    }
    if (q.is_zero()) continue;
    auto back = divide_exact(p * q, q);
    REQUIRE(back.has_value());
    CHECK(*back == p);
    auto root = poly_kth_root(q.pow(3), 3);
    REQUIRE(root.has_value());
    CHECK(root->proportional(q));
  }
}

TEST_CASE("interpolated determinant equals cofactor expansion") {
  Rng rng(0x11a5);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        MultiPoly e = MultiPoly::constant(2, rng.rational(4));
        e = e + MultiPoly::variable(2, 0) * MultiPoly::constant(2, rng.rational(4));
        e = e + MultiPoly::variable(2, 1) * MultiPoly::constant(2, rng.rational(4));
        m[i][j] = e;
      }
    MultiPoly leibniz(2);
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                      {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int s = 0; s < 6; ++s) {
      MultiPoly term = m[0][perm[s][0]] * m[1][perm[s][1]] * m[2][perm[s][2]];
      leibniz = s < 3 ? leibniz + term : leibniz - term;
    }
    CHECK(det_interpolated(m, 3) == leibniz);
  }
}

TEST_CASE("binary form gcd and squarefree helpers") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly a = (x + y) * (x + y) * (x - y);
  MultiPoly b = (x + y) * x;
  CHECK(binary_form_gcd(a, b).proportional(x + y));
  MultiPoly c = x * x * y - y * y * y;  // x^2 y - y^3 = y(x-y)(x+y)
  CHECK(binary_form_gcd(c, a).proportional((x + y) * (x - y)));
}
