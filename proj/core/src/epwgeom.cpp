#include "epwstab/epwgeom.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace epws {

namespace {

// lex pairs (i, j), 1 <= i < j <= 5: coordinates of wedge^2 V0 in an adapted
// frame (u0 = v0, u1..u5 a basis of V0). Pair t corresponds to the triple
// {0, i, j}, which sits at the same lex position among the 0-triples.
const std::vector<std::pair<unsigned, unsigned>>& pairs5() {
  static const std::vector<std::pair<unsigned, unsigned>> p = [] {
    std::vector<std::pair<unsigned, unsigned>> v;
    for (unsigned i = 1; i <= 5; ++i)
      for (unsigned j = i + 1; j <= 5; ++j) v.push_back({i, j});
    return v;
  }();
  return p;
}

int perm_sign6(std::array<unsigned, 6> p) {
  int sign = 1;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

QMatrix frame_matrix(const Vec& v0, const Subspace& v_0) {
  if (v0.size() != 6 || v_0.ambient() != 6 || v_0.dim() != 5)
    throw std::invalid_argument("chart: need v0 in Q^6 and a hyperplane V0");
  QMatrix b(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    b.at(i, 0) = v0[i];
    for (std::size_t j = 0; j < 5; ++j) b.at(i, j + 1) = v_0.basis().at(j, i);
  }
  if (!b.inverse()) throw std::invalid_argument("chart: v0 lies on V0");
  return b;
}

// The 10x10 Gram matrix of q_A in an adapted frame; nullopt when wedge^3 V0
// meets A (no graph description).
std::optional<QMatrix> qa_gram(const Lagrangian& a, const QMatrix& frame) {
  auto inv = frame.inverse();
  if (!inv) throw std::invalid_argument("qa_matrix: frame not invertible");
  Lagrangian a2 = transform(a, *inv);
  const QMatrix& r = a2.matrix();  // 10x20, rows a basis of A in frame coords
  QMatrix c0(10, 10), c1(10, 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      c0.at(i, j) = r.at(i, j);        // triples containing 0
      c1.at(i, j) = r.at(i, j + 10);   // triples inside V0
    }
  auto c0inv = c0.inverse();
  if (!c0inv) return std::nullopt;
  // A = {v0^alpha - qtil(alpha)}; columns of qtil are indexed by pairs,
  // rows by the 0-free triples.
  QMatrix qtil = c1.transpose() * c0inv->transpose();
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) qtil.at(i, j) = -qtil.at(i, j);
  // pairing: vol(u0 ^ u_i ^ u_j ^ u_T) for complementary index sets.
  QMatrix pairing(10, 10);
  for (std::size_t p = 0; p < 10; ++p) {
    auto [i, j] = pairs5()[p];
    for (std::size_t t = 0; t < 10; ++t) {
      const auto& tri = triples()[10 + t];
      pairing.at(p, t) =
          perm_sign6({0, i, j, tri[0], tri[1], tri[2]});
    }
  }
  return pairing * qtil;
}

// Gram of alpha -> vol(u0 ^ v ^ alpha ^ alpha) for v = sum coords[i] u_i.
QMatrix plucker_gram(const Vec& coords5) {
  QMatrix g(10, 10);
  for (std::size_t p = 0; p < 10; ++p) {
    auto [pi, pj] = pairs5()[p];
    for (std::size_t q = 0; q < 10; ++q) {
      auto [qi, qj] = pairs5()[q];
      Rational s = 0;
      for (unsigned v = 1; v <= 5; ++v)
        if (coords5[v - 1] != 0)
          s += coords5[v - 1] * perm_sign6({0, v, pi, pj, qi, qj});
      g.at(p, q) = s;
    }
  }
  return g;
}

Integer rational_lcm_denoms(const std::vector<const QMatrix*>& ms) {
  Integer l = 1;
  for (const auto* m : ms)
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        l = lcm(l, denominator(m->at(i, j)));
  return l;
}

Subspace hyperplane_from_covector(const Vec& phi) {
  QMatrix m(1, 6);
  for (std::size_t i = 0; i < 6; ++i) m.at(0, i) = phi[i];
  return Subspace::span(m.kernel_basis(), 6);
}

const std::vector<Chart>& epw_chart_candidates() {
  static const std::vector<Chart> cs = [] {
    std::vector<Chart> out;
    auto push = [&](const Vec& v0, const Subspace& v_0) {
      if (v_0.dim() != 5 || v_0.contains(v0)) return;
      out.push_back(make_chart(v0, v_0));
    };
    std::vector<Vec> v0s;
    for (unsigned k = 0; k < 6; ++k) {
      Vec e(6, Rational(0));
      e[k] = 1;
      v0s.push_back(e);
    }
    v0s.push_back(Vec(6, Rational(1)));
    for (const auto& v0 : v0s)
      for (unsigned k = 0; k < 6; ++k) {
        if (v0[k] == 0) continue;
        std::vector<Vec> rows;
        for (unsigned j = 0; j < 6; ++j) {
          if (j == k) continue;
          Vec e(6, Rational(0));
          e[j] = 1;
          rows.push_back(e);
        }
        push(v0, Subspace::span(rows, 6));
      }
    // seeded generic charts: generic directions with generic hyperplanes;
    // these succeed whenever any chart does, up to the list length.
    Rng rng(0x45505753u);
    while (out.size() < 40) {
      Vec v0(6), phi(6);
      bool nz0 = false;
      for (auto& c : v0) {
        c = Rational(rng.integer(-3, 3));
        if (c != 0) nz0 = true;
      }
      for (auto& c : phi) c = Rational(rng.integer(-3, 3));
      if (!nz0) continue;
      Subspace h = hyperplane_from_covector(phi);
      if (h.dim() != 5 || h.contains(v0)) continue;
      out.push_back(make_chart(v0, h));
    }
    return out;
  }();
  return cs;
}

// det(q_A + q_z) over the chart, 5 affine variables z1..z5; nullopt when the
// chart is not admissible. A global integer scaling keeps the interpolation
// grid on integer matrices.
std::optional<MultiPoly> epw_chart_det(const Lagrangian& a, const Chart& chart) {
  auto qa = qa_gram(a, chart.frame);
  if (!qa) return std::nullopt;
  std::vector<QMatrix> qs;
  for (unsigned v = 1; v <= 5; ++v) {
    Vec c(5, Rational(0));
    c[v - 1] = 1;
    qs.push_back(plucker_gram(c));
  }
  Rational d(rational_lcm_denoms({&*qa}));
  std::vector<std::vector<MultiPoly>> m(10, std::vector<MultiPoly>(10));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      MultiPoly e = MultiPoly::constant(5, d * qa->at(i, j));
      for (std::size_t v = 0; v < 5; ++v)
        if (qs[v].at(i, j) != 0)
          e = e + MultiPoly::variable(5, v) *
                      MultiPoly::constant(5, d * qs[v].at(i, j));
      m[i][j] = std::move(e);
    }
  return det_interpolated(m, 6);
}

// chart polynomial -> homogeneous sextic in the standard coordinates.
MultiPoly to_standard_sextic(const MultiPoly& chart_det, const QMatrix& frame) {
  MultiPoly hom = chart_det.homogenize(0, 6);
  QMatrix inv = *frame.inverse();
  std::vector<MultiPoly> sub(6);
  for (std::size_t i = 0; i < 6; ++i) {
    MultiPoly s(6);
    for (std::size_t j = 0; j < 6; ++j)
      if (inv.at(i, j) != 0)
        s = s + MultiPoly::variable(6, j) * MultiPoly::constant(6, inv.at(i, j));
    sub[i] = std::move(s);
  }
  return hom.substitute_linear(sub).normalized();
}

MultiPoly embed_binary(const MultiPoly& p, std::size_t va, std::size_t vb) {
  MultiPoly out(2);
  for (const auto& [e, c] : p.terms()) {
    unsigned total = 0;
    for (auto x : e) total += x;
    if (e[va] + e[vb] != total)
      throw std::invalid_argument("embed_binary: extra variables present");
    out.set_coeff({e[va], e[vb]}, c);
  }
  return out;
}

bool binary_squarefree(const MultiPoly& b) {
  if (b.is_zero()) return false;
  if (b.total_degree() <= 1) return true;
  MultiPoly dx = b.derivative(0), dy = b.derivative(1);
  MultiPoly g;
  if (dx.is_zero())
    g = dy;
  else if (dy.is_zero())
    g = dx;
  else
    g = binary_form_gcd(dx, dy);
  // a multiple factor of b divides both partials; a common root of the
  // partials is a multiple root of b (Euler relation, char 0).
  if (g.total_degree() == 0) return true;
  return binary_form_gcd(b, g).total_degree() == 0;
}

// multiple-factor part prod l_i^{m_i - 1} of a binary form.
MultiPoly binary_multiple_part(const MultiPoly& b) {
  MultiPoly dx = b.derivative(0), dy = b.derivative(1);
  if (dx.is_zero()) return dy.is_zero() ? b : dy.normalized();
  if (dy.is_zero()) return dx.normalized();
  MultiPoly g = binary_form_gcd(dx, dy);
  if (g.total_degree() == 0) return MultiPoly::constant(2, 1);
  MultiPoly h = binary_form_gcd(b, g);
  return h;
}

void monomials_of_degree3(unsigned d, std::vector<Exponents>& out) {
  out.clear();
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j) out.push_back({i, j, d - i - j});
}

}  // namespace

QuadForm qa_matrix(const Lagrangian& a, const Vec& v0, const Subspace& v_0) {
  QMatrix frame = frame_matrix(v0, v_0);
  auto g = qa_gram(a, frame);
  if (!g)
    throw std::invalid_argument("qa_matrix: wedge^3 V0 meets A (not transversal)");
  return QuadForm(*g);
}

QuadForm plucker_qv(const Vec& v0, const Subspace& v_0, const Vec& v) {
  QMatrix frame = frame_matrix(v0, v_0);
  auto c = frame.solve(v);
  if (!c || (*c)[0] != 0)
    throw std::invalid_argument("plucker_qv: v must lie in V0");
  Vec c5((*c).begin() + 1, (*c).end());
  return QuadForm(plucker_gram(c5));
}

Chart make_chart(const Vec& v0, const Subspace& v_0) {
  return Chart{v0, frame_matrix(v0, v_0)};
}

bool chart_admissible(const Lagrangian& a, const Chart& chart) {
  return qa_gram(a, chart.frame).has_value();
}

EPWSextic epw_sextic(const Lagrangian& a, const std::optional<Chart>& chart) {
  std::vector<const Chart*> order;
  if (chart) order.push_back(&*chart);
  for (const auto& c : epw_chart_candidates()) order.push_back(&c);

  std::optional<std::pair<const Chart*, MultiPoly>> first, second;
  for (const Chart* c : order) {
    auto det = epw_chart_det(a, *c);
    if (!det) continue;
    if (!first)
      first = {c, std::move(*det)};
    else {
      second = {c, std::move(*det)};
      break;
    }
  }
  if (chart && (!first || first->first != &*chart))
    throw std::invalid_argument("epw_sextic: supplied chart not admissible");
  if (!first)
    throw std::runtime_error(
        "epw_sextic: no admissible chart in the candidate list (wedge^3 V0 "
        "meets A for every candidate)");
  if (!second)
    throw std::runtime_error("epw_sextic: no second admissible chart for the "
                             "cross-check");

  EPWSextic out;
  out.chart = *first->first;
  if (first->second.is_zero()) {
    if (!second->second.is_zero())
      throw std::logic_error("epw_sextic: charts disagree on degeneracy");
    out.degenerate_flag = true;
    out.form = MultiPoly(6);
    return out;
  }
  out.form = to_standard_sextic(first->second, first->first->frame);
  MultiPoly check = to_standard_sextic(second->second, second->first->frame);
  if (!out.form.proportional(check))
    throw std::logic_error("epw_sextic: chart cross-check failed");
  return out;
}

namespace {

// Frames adapted to a plane W: column 0 a point of W, columns 1-2 spanning a
// complement of it inside W, columns 3-5 completing to a basis of V.
std::vector<QMatrix> plane_chart_frames(const Subspace& w,
                                        const std::optional<Vec>& fixed_v0) {
  if (w.ambient() != 6 || w.dim() != 3)
    throw std::invalid_argument("plane chart: W must be a 3-space in Q^6");
  std::vector<Vec> b{w.basis_vector(0), w.basis_vector(1), w.basis_vector(2)};

  std::vector<Vec> v0s;
  if (fixed_v0) {
    if (!w.contains(*fixed_v0))
      throw std::invalid_argument("plane chart: center not on W");
    v0s.push_back(*fixed_v0);
  } else {
    static const std::vector<std::array<long, 3>> combos = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, -1, 0}, {1, 0, 1},
        {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {1, 1, 1}, {1, 2, 3}, {3, 1, 2},
        {2, -1, 1}, {1, -2, 2}};
    for (const auto& c : combos) {
      Vec v(6, Rational(0));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) v[j] += Rational(c[i]) * b[i][j];
      v0s.push_back(std::move(v));
    }
  }

  std::vector<QMatrix> frames;
  for (const auto& v0 : v0s) {
    // complements of v0 inside W: basis pairs first, then random pairs (some
    // lagrangians obstruct every chart whose pencil directions are basis
    // vectors of W, so genuinely generic pairs have to be on the list).
    std::vector<std::pair<Vec, Vec>> pairs;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (QMatrix::from_rows({v0, b[i], b[j]}, 6).rank() == 3)
          pairs.emplace_back(b[i], b[j]);
    {
      Rng prng(0x57317061u);
      while (pairs.size() < 9) {
        Vec u1(6, Rational(0)), u2(6, Rational(0));
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t r = 0; r < 6; ++r) {
            u1[r] += Rational(prng.integer(-3, 3)) * b[i][r];
            u2[r] += Rational(prng.integer(-3, 3)) * b[i][r];
          }
        if (QMatrix::from_rows({v0, u1, u2}, 6).rank() == 3)
          pairs.emplace_back(std::move(u1), std::move(u2));
      }
    }
    for (const auto& [u1, u2] : pairs) {
      auto try_extras = [&, &u1 = u1, &u2 = u2](const Vec& x3, const Vec& x4,
                                                const Vec& x5) {
        QMatrix f(6, 6);
        for (std::size_t r = 0; r < 6; ++r) {
          f.at(r, 0) = v0[r];
          f.at(r, 1) = u1[r];
          f.at(r, 2) = u2[r];
          f.at(r, 3) = x3[r];
          f.at(r, 4) = x4[r];
          f.at(r, 5) = x5[r];
        }
        if (f.inverse()) frames.push_back(std::move(f));
      };
      std::size_t base = frames.size();
      for (unsigned k1 = 0; k1 < 6 && frames.size() < base + 4; ++k1)
        for (unsigned k2 = k1 + 1; k2 < 6 && frames.size() < base + 4; ++k2)
          for (unsigned k3 = k2 + 1; k3 < 6 && frames.size() < base + 4; ++k3) {
            Vec e3(6, Rational(0)), e4(6, Rational(0)), e5(6, Rational(0));
            e3[k1] = 1;
            e4[k2] = 1;
            e5[k3] = 1;
            try_extras(e3, e4, e5);
          }
      Rng rng(0x57304672u);
      for (int t = 0; t < 12; ++t) {
        Vec e3(6), e4(6), e5(6);
        for (std::size_t r = 0; r < 6; ++r) {
          e3[r] = Rational(rng.integer(-3, 3));
          e4[r] = Rational(rng.integer(-3, 3));
          e5[r] = Rational(rng.integer(-3, 3));
        }
        try_extras(e3, e4, e5);
      }
    }
  }
  return frames;
}

struct PlaneChartDet {
  QMatrix frame;
  MultiPoly det;          // 2 chart variables
  QMatrix qa9;            // constant part, for kernel data
  QMatrix q1_9, q2_9;     // pencil directions
};

std::optional<PlaneChartDet> plane_chart_det(const Lagrangian& a,
                                             const QMatrix& frame) {
  auto qa = qa_gram(a, frame);
  if (!qa) return std::nullopt;
  Vec c1(5, Rational(0)), c2(5, Rational(0));
  c1[0] = 1;
  c2[1] = 1;
  QMatrix q1 = plucker_gram(c1), q2 = plucker_gram(c2);
  // pair (1,2) spans wedge^2 W0 and must lie in every kernel (wedge^3 W is in
  // A, and the pencil directions stay inside W).
  for (std::size_t j = 0; j < 10; ++j)
    if (qa->at(0, j) != 0 || q1.at(0, j) != 0 || q2.at(0, j) != 0)
      throw std::logic_error("plane chart: wedge^2 W0 not in the kernel");

  Rational d(rational_lcm_denoms({&*qa}));
  std::vector<std::vector<MultiPoly>> m(9, std::vector<MultiPoly>(9));
  QMatrix qa9(9, 9), q19(9, 9), q29(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      Rational a0 = d * qa->at(i + 1, j + 1);
      Rational a1 = d * q1.at(i + 1, j + 1);
      Rational a2 = d * q2.at(i + 1, j + 1);
      qa9.at(i, j) = a0;
      q19.at(i, j) = a1;
      q29.at(i, j) = a2;
      MultiPoly e = MultiPoly::constant(2, a0);
      if (a1 != 0)
        e = e + MultiPoly::variable(2, 0) * MultiPoly::constant(2, a1);
      if (a2 != 0)
        e = e + MultiPoly::variable(2, 1) * MultiPoly::constant(2, a2);
      m[i][j] = std::move(e);
    }
  PlaneChartDet out;
  out.frame = frame;
  out.det = det_interpolated(m, 6);
  out.qa9 = std::move(qa9);
  out.q1_9 = std::move(q19);
  out.q2_9 = std::move(q29);
  return out;
}

// coordinates of a W-vector in the canonical basis of W.
Vec w_coords(const Subspace& w, const Vec& x) {
  auto c = w.basis().transpose().solve(x);
  if (!c) throw std::invalid_argument("vector not on W");
  return *c;
}

MultiPoly to_w_sextic(const Subspace& w, const PlaneChartDet& cd) {
  MultiPoly hom = cd.det.homogenize(0, 6);
  QMatrix t(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    Vec col(6);
    for (std::size_t r = 0; r < 6; ++r) col[r] = cd.frame.at(r, j);
    Vec c = w_coords(w, col);
    for (std::size_t i = 0; i < 3; ++i) t.at(i, j) = c[i];
  }
  QMatrix tinv = *t.inverse();
  std::vector<MultiPoly> sub(3);
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly s(3);
    for (std::size_t j = 0; j < 3; ++j)
      if (tinv.at(i, j) != 0)
        s = s + MultiPoly::variable(3, j) * MultiPoly::constant(3, tinv.at(i, j));
    sub[i] = std::move(s);
  }
  return hom.substitute_linear(sub).normalized();
}

}  // namespace

PlaneSextic plane_sextic(const Subspace& w, const Lagrangian& a) {
  if (!theta_membership(a, w))
    throw std::invalid_argument("plane_sextic: wedge^3 W not contained in A");
  std::optional<PlaneChartDet> first, second;
  for (const auto& frame : plane_chart_frames(w, std::nullopt)) {
    auto cd = plane_chart_det(a, frame);
    if (!cd) continue;
    if (!first)
      first = std::move(cd);
    else {
      second = std::move(cd);
      break;
    }
  }
  if (!first)
    throw std::runtime_error("plane_sextic: no admissible chart in the "
                             "candidate list");
  if (!second)
    throw std::runtime_error("plane_sextic: no second admissible chart");

  PlaneSextic out;
  out.w_frame = w.basis();
  out.chart.v0 = [&] {
    Vec v(6);
    for (std::size_t r = 0; r < 6; ++r) v[r] = first->frame.at(r, 0);
    return v;
  }();
  out.chart.frame = first->frame;
  if (first->det.is_zero()) {
    if (!second->det.is_zero())
      throw std::logic_error("plane_sextic: charts disagree on the full plane");
    out.full_plane_flag = true;
    out.form = MultiPoly(3);
    return out;
  }
  out.form = to_w_sextic(w, *first);
  MultiPoly check = to_w_sextic(w, *second);
  if (!out.form.proportional(check))
    throw std::logic_error("plane_sextic: chart cross-check failed");
  return out;
}

LocalExpansion local_expansion(const Lagrangian& a, const Subspace& w,
                               const Vec& v0) {
  if (!theta_membership(a, w))
    throw std::invalid_argument("local_expansion: wedge^3 W not contained in A");
  std::optional<PlaneChartDet> cd;
  for (const auto& frame : plane_chart_frames(w, v0)) {
    cd = plane_chart_det(a, frame);
    if (cd) break;
  }
  if (!cd)
    throw std::runtime_error("local_expansion: no admissible chart at the "
                             "requested center");

  LocalExpansion out;
  out.center = v0;
  out.pieces.assign(7, MultiPoly(2));
  for (const auto& [e, c] : cd->det.terms())
    out.pieces[e[0] + e[1]].set_coeff(e, c);

  std::size_t cap = a.space().intersect(f_v(v0).space()).dim();
  if (cap == 0)
    throw std::logic_error("local_expansion: center not on any F-intersection "
                           "(wedge^3 W should force dim >= 1)");
  out.kbar = cap - 1;

  auto kb = cd->qa9.kernel_basis();
  if (kb.size() != out.kbar)
    throw std::logic_error("local_expansion: kernel of the chart form does "
                           "not match dim(A cap F_{v0}) - 1");

  out.low_vanish = true;
  for (std::size_t i = 0; i < out.kbar; ++i)
    if (!out.pieces[i].is_zero()) out.low_vanish = false;

  if (out.kbar == 0) {
    out.psi_det = MultiPoly::constant(2, 1);
  } else {
    std::vector<std::vector<MultiPoly>> g(out.kbar,
                                          std::vector<MultiPoly>(out.kbar));
    for (std::size_t i = 0; i < out.kbar; ++i)
      for (std::size_t j = 0; j < out.kbar; ++j) {
        Rational a1 = 0, a2 = 0;
        for (std::size_t r = 0; r < 9; ++r)
          for (std::size_t s = 0; s < 9; ++s) {
            a1 += kb[i][r] * cd->q1_9.at(r, s) * kb[j][s];
            a2 += kb[i][r] * cd->q2_9.at(r, s) * kb[j][s];
          }
        MultiPoly e(2);
        if (a1 != 0) e = e + MultiPoly::variable(2, 0) * MultiPoly::constant(2, a1);
        if (a2 != 0) e = e + MultiPoly::variable(2, 1) * MultiPoly::constant(2, a2);
        g[i][j] = std::move(e);
      }
    out.psi_det = det_interpolated(g, static_cast<unsigned>(out.kbar));
  }
  out.locus_match = !out.pieces[out.kbar].is_zero() &&
                    out.pieces[out.kbar].proportional(out.psi_det);
  return out;
}

MultBound multiplicity_bound_check(const Lagrangian& a, const Subspace& w,
                                   const Vec& v0) {
  LocalExpansion ex = local_expansion(a, w, v0);
  bool all_zero = true;
  for (const auto& p : ex.pieces)
    if (!p.is_zero()) all_zero = false;
  if (all_zero)
    throw std::invalid_argument("multiplicity_bound_check: curve is the full "
                                "plane");
  MultBound out;
  out.mult = 0;
  while (ex.pieces[out.mult].is_zero()) ++out.mult;
  out.bound = ex.kbar;
  out.ok = out.mult >= out.bound;
  return out;
}

bool bad_locus_cond2(const Lagrangian& a, const Subspace& w, const Vec& wvec) {
  if (!theta_membership(a, w))
    throw std::invalid_argument("bad_locus_cond2: wedge^3 W not contained in A");
  Subspace inter =
      a.space().intersect(f_v(wvec).space()).intersect(s_w(w));
  return inter.dim() >= 2;
}

bool projected_grassmannian_membership(const Vec& v0, const Subspace& v_0,
                                       const Subspace& w0, const Vec& point) {
  if (w0.dim() != 2 || !v_0.contains(w0))
    throw std::invalid_argument("projected_grassmannian_membership: W0 must "
                                "be a plane inside V0");
  if (point.size() != 10)
    throw std::invalid_argument("projected_grassmannian_membership: point "
                                "must have 10 coordinates");
  QMatrix frame = frame_matrix(v0, v_0);
  auto coords = [&](const Vec& x) {
    auto c = frame.solve(x);
    if (!c || (*c)[0] != 0)
      throw std::invalid_argument("projected_grassmannian_membership: W0 "
                                  "vector not in V0");
    return Vec(c->begin() + 1, c->end());
  };
  Vec c1 = coords(w0.basis_vector(0));
  Vec c2 = coords(w0.basis_vector(1));
  Vec center(10, Rational(0));
  for (std::size_t p = 0; p < 10; ++p) {
    auto [i, j] = pairs5()[p];
    center[p] = c1[i - 1] * c2[j - 1] - c1[j - 1] * c2[i - 1];
  }
  // point proportional to wedge^2 W0 is the projection center
  {
    bool proportional = true;
    Rational ratio;
    bool have = false;
    for (std::size_t p = 0; p < 10 && proportional; ++p) {
      if (center[p] == 0) {
        if (point[p] != 0) proportional = false;
      } else if (!have) {
        ratio = point[p] / center[p];
        have = true;
      } else if (point[p] != ratio * center[p]) {
        proportional = false;
      }
    }
    if (proportional && have && ratio != 0)
      throw std::invalid_argument("projected_grassmannian_membership: point "
                                  "is the projection center");
  }
  for (const Vec& c : {c1, c2}) {
    QMatrix g = plucker_gram(c);
    Rational val = 0;
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 10; ++j)
        val += point[i] * g.at(i, j) * point[j];
    if (val != 0) return false;
  }
  return true;
}

namespace {

// translate p to [0:0:1], dehomogenize the third coordinate, and return the
// resulting affine polynomial in chart variables (vars 0, 1).
struct AffineAtPoint {
  MultiPoly f;   // 3 vars, var 2 unused
  QMatrix t;     // the coordinate change used
};

AffineAtPoint affine_at(const MultiPoly& form, const Vec& p) {
  if (p.size() != 3) throw std::invalid_argument("point must have 3 coordinates");
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      QMatrix t(3, 3);
      for (std::size_t r = 0; r < 3; ++r) t.at(r, 2) = p[r];
      t.at(i, 0) = 1;
      t.at(j, 1) = 1;
      if (!t.inverse()) continue;
      std::vector<MultiPoly> sub(3);
      for (std::size_t r = 0; r < 3; ++r) {
        MultiPoly s(3);
        for (std::size_t c = 0; c < 3; ++c)
          if (t.at(r, c) != 0)
            s = s + MultiPoly::variable(3, c) * MultiPoly::constant(3, t.at(r, c));
        sub[r] = std::move(s);
      }
      return {form.substitute_linear(sub).substitute(2, 1), t};
    }
  throw std::invalid_argument("degenerate point");
}

std::vector<MultiPoly> graded_pieces(const MultiPoly& f, unsigned up_to) {
  std::vector<MultiPoly> g(up_to + 1, MultiPoly(f.nvars()));
  for (const auto& [e, c] : f.terms()) {
    unsigned d = 0;
    for (auto x : e) d += x;
    if (d <= up_to) g[d].set_coeff(e, c);
  }
  return g;
}

std::size_t multiplicity_at(const MultiPoly& affine) {
  if (affine.is_zero())
    throw std::invalid_argument("multiplicity of the zero polynomial");
  unsigned best = affine.total_degree();
  for (const auto& [e, c] : affine.terms()) {
    unsigned d = 0;
    for (auto x : e) d += x;
    best = std::min(best, d);
  }
  return best;
}

// rotate chart coordinates so the linear form l becomes the second variable.
MultiPoly adapt_to_tangent(const MultiPoly& f, const Rational& la,
                           const Rational& lb) {
  std::vector<MultiPoly> sub(3);
  sub[2] = MultiPoly::variable(3, 2);
  if (lb != 0) {
    // y = (y' - la x') / lb, x = x'
    sub[0] = MultiPoly::variable(3, 0);
    sub[1] = (MultiPoly::variable(3, 1) -
              MultiPoly::variable(3, 0) * MultiPoly::constant(3, la)) *
             (1 / lb);
  } else {
    // l = la x: swap roles, x = y'/la, y = x'
    sub[0] = MultiPoly::variable(3, 1) * (1 / la);
    sub[1] = MultiPoly::variable(3, 0);
  }
  return f.substitute_linear(sub);
}

}  // namespace

bool consecutive_triple_points_probe(const PlaneSextic& c, const Vec& p,
                                     const std::optional<Vec>& tangent) {
  auto aff = affine_at(c.form, p);
  if (multiplicity_at(aff.f) != 3)
    throw std::invalid_argument("consecutive_triple_points_probe: point does "
                                "not have multiplicity 3");
  MultiPoly f3 = graded_pieces(aff.f, 3)[3];
  Rational la, lb;
  if (tangent) {
    if (tangent->size() != 3)
      throw std::invalid_argument("tangent form must have 3 coordinates");
    Vec lc(3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t r = 0; r < 3; ++r)
        lc[i] += aff.t.at(r, i) * (*tangent)[r];
    if (lc[2] != 0)
      throw std::invalid_argument("tangent form does not vanish at the point");
    la = lc[0];
    lb = lc[1];
    MultiPoly l = MultiPoly::variable(3, 0) * MultiPoly::constant(3, la) +
                  MultiPoly::variable(3, 1) * MultiPoly::constant(3, lb);
    if (!f3.proportional(l.pow(3))) return false;
  } else {
    auto root = poly_kth_root(f3, 3);
    if (!root) return false;
    la = root->coeff({1, 0, 0});
    lb = root->coeff({0, 1, 0});
  }
  if (la == 0 && lb == 0) return false;
  MultiPoly g = adapt_to_tangent(aff.f, la, lb);
  return g.coeff({4, 0, 0}) == 0 && g.coeff({3, 1, 0}) == 0 &&
         g.coeff({5, 0, 0}) == 0;
}

namespace {

// strict transform under one blow-up in the chart y = x * y1, given a
// multiplicity-3 point with tangent cone y^3 at the origin.
bool blowup_cone_is_triple_line(const MultiPoly& g) {
  std::vector<MultiPoly> sub(3);
  sub[0] = MultiPoly::variable(3, 0);
  sub[1] = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1);
  sub[2] = MultiPoly::variable(3, 2);
  MultiPoly pulled = g.substitute_linear(sub);
  auto strict = divide_exact(pulled, MultiPoly::variable(3, 0, 3));
  if (!strict) throw std::logic_error("blow-up: x^3 does not divide");
  unsigned low = 7;
  for (const auto& [e, c] : strict->terms()) low = std::min(low, e[0] + e[1]);
  MultiPoly cone = graded_pieces(*strict, low)[low];
  if (low != 3) return false;
  return poly_kth_root(cone, 3).has_value();
}

}  // namespace

IndeterminacyReport indeterminacy_probe(const PlaneSextic& c, const Vec& p) {
  auto aff = affine_at(c.form, p);
  IndeterminacyReport out;
  out.multiplicity = multiplicity_at(aff.f);

  if (out.multiplicity == 3) {
    MultiPoly f3 = graded_pieces(aff.f, 3)[3];
    auto root = poly_kth_root(f3, 3);
    if (root) {
      Rational la = root->coeff({1, 0, 0});
      Rational lb = root->coeff({0, 1, 0});
      MultiPoly g = adapt_to_tangent(aff.f, la, lb);
      bool consecutive = g.coeff({4, 0, 0}) == 0 && g.coeff({3, 1, 0}) == 0 &&
                         g.coeff({5, 0, 0}) == 0;
      if (consecutive) out.item1 = blowup_cone_is_triple_line(g);
    }
  }

  if (out.multiplicity >= 5) {
    out.item2 = true;
  } else if (out.multiplicity == 4) {
    MultiPoly cone = embed_binary(graded_pieces(aff.f, 4)[4], 0, 1);
    // tangent cone 3 l1 + l2: some line of multiplicity >= 3, i.e. the
    // multiple-factor part itself has a repeated factor.
    MultiPoly m = binary_multiple_part(cone);
    out.item2 = m.total_degree() >= 2 && !binary_squarefree(m);
  }
  return out;
}

bool form_squarefree(const MultiPoly& f) {
  if (f.nvars() != 2)
    throw std::invalid_argument("form_squarefree: binary forms only");
  if (!f.is_homogeneous())
    throw std::invalid_argument("form_squarefree: not homogeneous");
  return binary_squarefree(f);
}

bool plane_curve_smooth(const MultiPoly& f) {
  if (f.nvars() != 3 || f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("plane_curve_smooth: nonzero ternary form "
                                "required");
  unsigned d = f.total_degree();
  if (d == 1) return true;
  unsigned e = d - 1;
  unsigned big = 3 * e - 2;
  std::vector<MultiPoly> partials{f.derivative(0), f.derivative(1),
                                  f.derivative(2)};
  std::vector<Exponents> target, source;
  monomials_of_degree3(big, target);
  monomials_of_degree3(big - e, source);
  std::map<Exponents, std::size_t, GradedLexLess> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = i;
  // Jacobian ideal contains every form of degree 3(d-2)+1 iff the partials
  // have no common zero in P^2 (Macaulay bound for a regular sequence).
  QMatrix m(target.size(), 3 * source.size());
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t s = 0; s < source.size(); ++s)
      for (const auto& [ex, cf] : partials[k].terms()) {
        Exponents sum{ex[0] + source[s][0], ex[1] + source[s][1],
                      ex[2] + source[s][2]};
        m.at(index.at(sum), k * source.size() + s) += cf;
      }
  return m.rank() == target.size();
}

namespace {

bool conic_smooth(const MultiPoly& q) {
  QMatrix g(3, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      Exponents e(3, 0);
      e[i] += 1;
      e[j] += 1;
      Rational c = q.coeff(e);
      g.at(i, j) = (i == j) ? c : c / 2;
    }
  return g.det() != 0;
}

}  // namespace

ShahReport shah_probe(const PlaneSextic& c) {
  ShahReport out;
  if (c.full_plane_flag || c.form.is_zero()) {
    out.notes.push_back("full plane, no sextic to classify");
    return out;
  }
  const MultiPoly& p = c.form;

  // III-2: the single monomial (X0 X1 X2)^2.
  if (p.terms().size() == 1 && p.terms().begin()->first == Exponents{2, 2, 2}) {
    out.matched = "III-2";
    return out;
  }
  // IV: perfect cube of a smooth conic.
  if (auto r = poly_kth_root(p, 3)) {
    if (conic_smooth(*r)) {
      out.matched = "IV";
      return out;
    }
    out.notes.push_back("cube of a singular conic");
  }
  // II-4: square of a smooth cubic.
  if (auto r = poly_kth_root(p, 2)) {
    if (r->total_degree() == 3 && plane_curve_smooth(*r)) {
      out.matched = "II-4";
      return out;
    }
    out.notes.push_back("square of a non-smooth cubic");
  }
  // torus-invariant family (b1 X0X2 + a1 X1^2)...(b3 X0X2 + a3 X1^2):
  // support on X0^k X1^{6-2k} X2^k only.
  {
    bool invariant = true;
    MultiPoly cubic(2);
    for (const auto& [e, cf] : p.terms()) {
      if (e[0] != e[2] || e[1] != 6 - 2 * e[0]) {
        invariant = false;
        break;
      }
      cubic.set_coeff({e[0], 3 - e[0]}, cf);
    }
    if (invariant) {
      bool distinct = binary_squarefree(cubic);
      bool no_double_line = cubic.coeff({3, 0}) != 0;  // every b_i nonzero
      if (distinct && no_double_line) {
        out.matched = "II-1";
        return out;
      }
      MultiPoly m = binary_multiple_part(cubic);
      if (!distinct && m.total_degree() == 1 && no_double_line) {
        // one doubled conic and one simple conic, necessarily distinct
        out.matched = "III-1";
        return out;
      }
      out.notes.push_back("torus-invariant but outside the listed patterns");
    }
  }
  // II-2: X_v^2 times a square-free binary form in the other variables.
  for (unsigned v = 0; v < 3; ++v) {
    bool shape = true;
    for (const auto& [e, cf] : p.terms())
      if (e[v] != 2) shape = false;
    if (!shape) continue;
    unsigned a = (v + 1) % 3, b = (v + 2) % 3;
    if (a > b) std::swap(a, b);
    MultiPoly f(2);
    for (const auto& [e, cf] : p.terms()) f.set_coeff({e[a], e[b]}, cf);
    if (binary_squarefree(f)) {
      out.matched = "II-2";
      return out;
    }
    out.notes.push_back("double line times a non-square-free quartic");
  }
  // II-3: (X0X2 + X1^2)^2 F with the conic and F transverse.
  {
    MultiPoly q = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 2) +
                  MultiPoly::variable(3, 1, 2);
    if (auto f = divide_exact(p, q * q)) {
      // restrict F to the rational parametrization [s^2 : st : -t^2] of the
      // conic; transversality = four distinct intersection points.
      std::vector<MultiPoly> sub(3);
      sub[0] = MultiPoly::variable(2, 0, 2);
      sub[1] = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
      sub[2] = -MultiPoly::variable(2, 1, 2);
      MultiPoly g = f->substitute_linear(sub);
      if (!g.is_zero() && binary_squarefree(g)) {
        out.matched = "II-3";
        return out;
      }
      out.notes.push_back("conic-squared factor but tangential residual");
    }
  }
  out.notes.push_back("no normal form matched in the given coordinates");
  return out;
}

}  // namespace epws
