#include "doctest.h"

#include "epwstab/quadforms.hpp"
#include "quad_gen.h"

using namespace epws;
using namespace quadgen;

namespace {

// full symbolic expansion of det(qs + t q), the oracle for every coefficient
std::vector<Rational> series_oracle(const QuadForm& qs, const QuadForm& q) {
  std::size_t n = qs.dim();
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = MultiPoly::constant(1, qs.m.at(i, j)) +
                MultiPoly::variable(1, 0) * MultiPoly::constant(1, q.m.at(i, j));
    }
  auto coeffs = univariate_coeffs(det_interpolated(m, unsigned(n)));
  coeffs.resize(n + 1);
  return coeffs;
}

}  // namespace

TEST_CASE("quadratic form basics and restriction") {
  Rng rng(0x44d1);
  for (int t = 0; t < 20; ++t) {
    QuadForm q(random_symmetric(rng, 5));
    CHECK(q.corank() == 5 - q.m.rank());
    CHECK(q.kernel().dim() == q.corank());
    Vec v(5), w(5);
    for (auto& x : v) x = rng.integer(-4, 4);
    for (auto& x : w) x = rng.integer(-4, 4);
    Vec vw(5);
    for (std::size_t i = 0; i < 5; ++i) vw[i] = v[i] + w[i];
    CHECK(q.eval(vw) == q.eval(v) + q.eval(w) + 2 * q.pair(v, w));

    std::vector<Vec> rows = {v, w};
    Subspace s = Subspace::span(rows, 5);
    if (s.dim() != 2) continue;
    QuadForm r = restrict_form(q, s);
    Vec coords = {rng.rational(3), rng.rational(3)};
    Vec lifted(5);
    for (std::size_t i = 0; i < 5; ++i)
      lifted[i] = coords[0] * s.basis_vector(0)[i] + coords[1] * s.basis_vector(1)[i];
    CHECK(r.eval(coords) == q.eval(lifted));
  }
}

TEST_CASE("pencil determinant series matches the symbolic oracle") {
  Rng rng(0x44d2);
  for (int t = 0; t < 20; ++t) {
    QuadForm qs(random_symmetric(rng, 5)), q(random_symmetric(rng, 5));
    CHECK(pencil_det_series(qs, q) == series_oracle(qs, q));
  }
}

TEST_CASE("low tail vanishing order and the leading coefficient") {
  Rng rng(0x44d3);
  for (int t = 0; t < 30; ++t) {
    std::size_t k = 1 + t % 3;
    auto [qsm, qm] = lowtail_instance(rng, 6, k, false, false);
    QMatrix p = random_invertible(rng, 6);
    QuadForm qs(congruent(qsm, p)), q(congruent(qm, p));
    auto rep = lowtail_check(qs, q);
    CHECK(rep.corank == k);
    CHECK(rep.order_ok);
    CHECK(rep.series == series_oracle(qs, q));
    CHECK(rep.phi_k == rep.series[k]);
    CHECK((rep.phi_k == 0) == (rep.det_q_on_K == 0));
  }
}

TEST_CASE("t^2k coefficient and the dual restricted determinant") {
  Rng rng(0x44d4);
  for (int t = 0; t < 30; ++t) {
    std::size_t k = 1 + t % 2;
    bool drop = t % 3 == 0;
    auto [qsm, qm] = lowtail_instance(rng, 6, k, true, drop);
    QMatrix p = random_invertible(rng, 6);
    QuadForm qs(congruent(qsm, p)), q(congruent(qm, p));
    Rational phi = phi2k_value(qs, q);
    CHECK(phi == series_oracle(qs, q)[2 * k]);
    CHECK((phi == 0) == (dual_restricted_det(qs, q) == 0));
    if (drop && k == 2) CHECK(phi == 0);
  }
}

TEST_CASE("t^3 coefficient criterion agrees with the series") {
  Rng rng(0x44d5);
  int vanished = 0;
  for (int t = 0; t < 40; ++t) {
    auto [qsm, qm] = phi3_instance(rng, 6);
    QMatrix p = random_invertible(rng, 6);
    QuadForm qs(congruent(qsm, p)), q(congruent(qm, p));
    bool zero = phi3_criterion(qs, q);
    CHECK(zero == (series_oracle(qs, q)[3] == 0));
    if (zero) ++vanished;
  }
  CHECK(vanished > 0);  // both branches exercised
}

TEST_CASE("t^5 coefficient criterion agrees with the series") {
  Rng rng(0x44d6);
  for (int t = 0; t < 25; ++t) {
    auto [qsm, qm] = phi5_instance(rng, 6);
    QMatrix p = random_invertible(rng, 6);
    QuadForm qs(congruent(qsm, p)), q(congruent(qm, p));
    auto series = series_oracle(qs, q);
    REQUIRE(series[4] == 0);  // generator hits the precondition
    CHECK(phi5_criterion(qs, q) == (series[5] == 0));
  }
}

TEST_CASE("x^3 y coefficient criterion agrees with the plane determinant") {
  Rng rng(0x44d7);
  for (int t = 0; t < 15; ++t) {
    auto inst = c31_instance(rng, 6);
    QMatrix p = random_invertible(rng, 6);
    QuadForm qs(congruent(inst.qs, p));
    QuadForm r(congruent(inst.r, p)), s(congruent(inst.s, p));
    MultiPoly det = pencil_plane_det(qs, r, s);
    CHECK(c31_criterion(qs, r, s) == (det.coeff({3, 1}) == 0));
  }
}

TEST_CASE("pencil classification normal forms") {
  auto mat = [](std::initializer_list<std::initializer_list<long>> rows) {
    QMatrix m(3, 3);
    std::size_t i = 0;
    for (auto& r : rows) {
      std::size_t j = 0;
      for (long x : r) m.at(i, j++) = x;
      ++i;
    }
    return m;
  };
  QMatrix f = mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  QMatrix g = mat({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
  QMatrix h = mat({{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});

  CHECK(classify_pencil({f, g}).type == 'l');
  CHECK(classify_pencil({f, h}).type == 'c');
  CHECK(classify_pencil({f.transpose(), h.transpose()}).type == 'p');

  // invariance under left/right multiplication
  Rng rng(0x44d8);
  for (int t = 0; t < 10; ++t) {
    QMatrix a = random_invertible(rng, 3), b = random_invertible(rng, 3);
    CHECK(classify_pencil({a * f * b, a * g * b}).type == 'l');
    CHECK(classify_pencil({a * f * b, a * h * b}).type == 'c');
    CHECK(classify_pencil({(a * f * b).transpose(), (a * h * b).transpose()}).type ==
          'p');
  }

  // antisymmetric pencils classify as lines
  QMatrix s1(3, 3), s2(3, 3);
  s1.at(0, 1) = 1;
  s1.at(1, 0) = -1;
  s2.at(0, 2) = 1;
  s2.at(2, 0) = -1;
  CHECK(classify_pencil({s1, s2}).type == 'l');
}
