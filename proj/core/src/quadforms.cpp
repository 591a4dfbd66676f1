#include "epwstab/quadforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace epws {

namespace {

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gram matrix of q on the span of the given vectors.
QMatrix gram_on(const QuadForm& q, const std::vector<Vec>& vs) {
  QMatrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      g.at(i, j) = q.pair(vs[i], vs[j]);
  return g;
}

bool is_zero_matrix(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

// Pairing induced by qs on functionals in the image of its symmetric map:
// <phi, psi> = psi(w) for any w with qs~(w) = phi. Well defined when psi
// annihilates ker qs.
Rational dual_pair(const QuadForm& qs, const Vec& phi, const Vec& psi) {
  auto w = qs.m.solve(phi);
  if (!w) throw std::invalid_argument("dual_pair: functional not in the image");
  return dot(psi, *w);
}

std::vector<Vec> kernel_vectors(const QuadForm& qs) { return qs.m.kernel_basis(); }

Vec qtilde(const QuadForm& q, const Vec& v) { return q.m.apply(v); }

void require_vanishes_on_kernel(const QuadForm& qs, const QuadForm& q,
                                const char* who) {
  if (!is_zero_matrix(gram_on(q, kernel_vectors(qs))))
    throw std::invalid_argument(std::string(who) +
                                ": the second form must vanish on the kernel");
}

std::vector<std::vector<MultiPoly>> pencil_matrix(
    const std::vector<const QuadForm*>& forms, std::size_t nvars) {
  // forms[0] is the constant part, forms[1..] get variables x_0, x_1, ...
  std::size_t d = forms[0]->dim();
  std::vector<std::vector<MultiPoly>> m(d, std::vector<MultiPoly>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      MultiPoly e = MultiPoly::constant(nvars, forms[0]->m.at(i, j));
      for (std::size_t k = 1; k < forms.size(); ++k)
        e = e + MultiPoly::variable(nvars, k - 1) *
                    MultiPoly::constant(nvars, forms[k]->m.at(i, j));
      m[i][j] = std::move(e);
    }
  return m;
}

}  // namespace

QuadForm::QuadForm(QMatrix gram) : m(std::move(gram)) {
  if (m.rows() != m.cols()) throw std::invalid_argument("QuadForm: not square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m.at(i, j) != m.at(j, i))
        throw std::invalid_argument("QuadForm: not symmetric");
}

Subspace QuadForm::kernel() const { return Subspace::span(m.kernel_basis(), dim()); }

std::size_t QuadForm::corank() const { return dim() - m.rank(); }

Rational QuadForm::eval(const Vec& v) const { return dot(v, m.apply(v)); }

Rational QuadForm::pair(const Vec& v, const Vec& w) const {
  return dot(v, m.apply(w));
}

QuadForm restrict_form(const QuadForm& q, const Subspace& s) {
  if (s.ambient() != q.dim())
    throw std::invalid_argument("restrict_form: ambient mismatch");
  const QMatrix& b = s.basis();
  return QuadForm(b * q.m * b.transpose());
}

std::vector<Rational> pencil_det_series(const QuadForm& qs, const QuadForm& q) {
  if (qs.dim() != q.dim())
    throw std::invalid_argument("pencil_det_series: dimension mismatch");
  std::size_t d = qs.dim();
  MultiPoly det = det_interpolated(pencil_matrix({&qs, &q}, 1),
                                   static_cast<unsigned>(d));
  std::vector<Rational> c = univariate_coeffs(det);
  c.resize(d + 1, Rational(0));
  return c;
}

Rational dual_restricted_det(const QuadForm& qs, const QuadForm& q) {
  require_vanishes_on_kernel(qs, q, "dual_restricted_det");
  auto ks = kernel_vectors(qs);
  QMatrix g(ks.size(), ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Vec phi_i = qtilde(q, ks[i]);
    for (std::size_t j = 0; j < ks.size(); ++j)
      g.at(i, j) = dual_pair(qs, phi_i, qtilde(q, ks[j]));
  }
  return g.det();
}

LowTailReport lowtail_check(const QuadForm& qs, const QuadForm& q) {
  LowTailReport r;
  r.corank = qs.corank();
  r.series = pencil_det_series(qs, q);
  r.order_ok = true;
  for (std::size_t i = 0; i < r.corank; ++i)
    if (r.series[i] != 0) r.order_ok = false;
  r.phi_k = r.series[r.corank];
  r.det_q_on_K = gram_on(q, kernel_vectors(qs)).det();
  return r;
}

Rational phi2k_value(const QuadForm& qs, const QuadForm& q) {
  require_vanishes_on_kernel(qs, q, "phi2k_value");
  std::size_t k = qs.corank();
  auto series = pencil_det_series(qs, q);
  for (std::size_t i = 0; i < 2 * k && i < series.size(); ++i)
    if (series[i] != 0)
      throw std::logic_error("phi2k_value: unexpected low-order coefficient");
  return series[2 * k];
}

bool phi3_criterion(const QuadForm& qs, const QuadForm& q) {
  if (qs.corank() != 2)
    throw std::invalid_argument("phi3_criterion: corank 2 required");
  auto ks = kernel_vectors(qs);
  QMatrix restr = gram_on(q, ks);
  if (restr.det() != 0)
    throw std::invalid_argument("phi3_criterion: q must be degenerate on the kernel");

  auto series = pencil_det_series(qs, q);
  bool vanishes = (series[3] == 0);

  bool witness;
  if (is_zero_matrix(restr)) {
    // q kills the whole kernel: an isotropic direction for the induced
    // 2-variable quadric always exists over an algebraically closed field.
    witness = true;
  } else {
    auto null = restr.kernel_basis();
    if (null.size() != 1)
      throw std::logic_error("phi3_criterion: degenerate rank-1 restriction expected");
    Vec e(qs.dim(), Rational(0));
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = 0; j < qs.dim(); ++j) e[j] += null[0][i] * ks[i][j];
    Vec phi = qtilde(q, e);
    witness = (dual_pair(qs, phi, phi) == 0);
  }
  if (witness != vanishes)
    throw std::logic_error("phi3_criterion: coefficient and witness disagree");
  return vanishes;
}

Vec e_of(const QuadForm& qs, const QuadForm& q, const Vec& w) {
  require_vanishes_on_kernel(qs, q, "e_of");
  if (qs.m.apply(w) != Vec(qs.dim(), Rational(0)))
    throw std::invalid_argument("e_of: w must lie in the kernel");
  auto e = qs.m.solve(qtilde(q, w));
  if (!e) throw std::invalid_argument("e_of: no solution");
  return *e;
}

bool phi5_criterion(const QuadForm& qs, const QuadForm& q) {
  if (qs.corank() != 2)
    throw std::invalid_argument("phi5_criterion: corank 2 required");
  require_vanishes_on_kernel(qs, q, "phi5_criterion");
  auto series = pencil_det_series(qs, q);
  for (std::size_t i = 0; i <= 4; ++i)
    if (series[i] != 0)
      throw std::invalid_argument("phi5_criterion: coefficients up to t^4 must vanish");
  bool vanishes = (series[5] == 0);

  auto ks = kernel_vectors(qs);
  std::vector<Vec> phis;
  for (const auto& k : ks) phis.push_back(qtilde(q, k));
  QMatrix images = QMatrix::from_rows(phis, qs.dim());

  bool witness;
  if (images.rank() < 2) {
    // q collapses the kernel: the quintic coefficient dies identically.
    witness = true;
  } else {
    QMatrix g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        g.at(i, j) = dual_pair(qs, phis[i], phis[j]);
    std::size_t rk = g.rank();
    if (rk == 2)
      throw std::logic_error("phi5_criterion: nonzero quartic coefficient implied");
    if (rk == 0) {
      witness = true;
    } else {
      auto null = g.kernel_basis();
      Vec v(qs.dim(), Rational(0));
      for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = 0; j < qs.dim(); ++j) v[j] += null[0][i] * ks[i][j];
      Vec e = e_of(qs, q, v);
      witness = (q.eval(e) == 0);
    }
  }
  if (witness != vanishes)
    throw std::logic_error("phi5_criterion: coefficient and witness disagree");
  return vanishes;
}

MultiPoly pencil_plane_det(const QuadForm& qs, const QuadForm& r,
                           const QuadForm& s) {
  if (qs.dim() != r.dim() || qs.dim() != s.dim())
    throw std::invalid_argument("pencil_plane_det: dimension mismatch");
  return det_interpolated(pencil_matrix({&qs, &r, &s}, 2),
                          static_cast<unsigned>(qs.dim()));
}

bool c31_criterion(const QuadForm& qs, const QuadForm& r, const QuadForm& s) {
  if (qs.corank() != 2)
    throw std::invalid_argument("c31_criterion: corank 2 required");
  auto ks = kernel_vectors(qs);

  // item (1): r kills the kernel, s restricts to rank 1 there.
  if (!is_zero_matrix(gram_on(r, ks)))
    throw std::invalid_argument("c31_criterion: assumption item (1) violated: "
                                "r does not vanish on the kernel");
  QMatrix s_restr = gram_on(s, ks);
  if (s_restr.rank() != 1)
    throw std::invalid_argument("c31_criterion: assumption item (1) violated: "
                                "s restricted to the kernel is not rank 1");
  auto null = s_restr.kernel_basis();
  Vec v(qs.dim(), Rational(0));
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < qs.dim(); ++j) v[j] += null[0][i] * ks[i][j];

  // item (2): the two images of v span a plane on which the induced dual
  // pairing has rank 1 with kernel the r-image.
  Vec phi_r = qtilde(r, v);
  Vec phi_s = qtilde(s, v);
  if (QMatrix::from_rows({phi_r, phi_s}, qs.dim()).rank() != 2)
    throw std::invalid_argument("c31_criterion: assumption item (2) violated: "
                                "images of the kernel vector are dependent");
  Rational hrr = dual_pair(qs, phi_r, phi_r);
  Rational hrs = dual_pair(qs, phi_r, phi_s);
  Rational hss = dual_pair(qs, phi_s, phi_s);
  if (hrr != 0 || hrs != 0 || hss == 0)
    throw std::invalid_argument("c31_criterion: assumption item (2) violated: "
                                "induced pairing is not rank 1 with the expected kernel");

  // item (3): the dual pairing degenerates on the r-image of the kernel.
  QMatrix g(ks.size(), ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Vec pi = qtilde(r, ks[i]);
    for (std::size_t j = 0; j < ks.size(); ++j)
      g.at(i, j) = dual_pair(qs, pi, qtilde(r, ks[j]));
  }
  if (g.det() != 0)
    throw std::invalid_argument("c31_criterion: assumption item (3) violated: "
                                "dual pairing nondegenerate on the r-image");

  MultiPoly det = pencil_plane_det(qs, r, s);
  bool vanishes = (det.coeff({3, 1}) == 0);
  bool witness = (r.eval(e_of(qs, r, v)) == 0);
  if (witness != vanishes)
    throw std::logic_error("c31_criterion: coefficient and witness disagree");
  return vanishes;
}

namespace {

// adjugate of a 3x3 matrix of polynomials.
std::vector<std::vector<MultiPoly>> adjugate3(
    const std::vector<std::vector<MultiPoly>>& m) {
  auto minor2 = [&](std::size_t i, std::size_t j) {
    std::size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    std::size_t c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    if (r0 > r1) std::swap(r0, r1);
    if (c0 > c1) std::swap(c0, c1);
    MultiPoly d = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    return ((i + j) % 2 == 0) ? d : -d;
  };
  std::vector<std::vector<MultiPoly>> adj(3, std::vector<MultiPoly>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) adj[i][j] = minor2(j, i);
  return adj;
}

MultiPoly det3(const std::vector<std::vector<MultiPoly>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// degree of the kernel parametrization of x f + y g, with the parametrizing
// forms written into *param if requested.
unsigned kernel_parametrization_degree(const QMatrix& f, const QMatrix& g,
                                       std::vector<MultiPoly>* param) {
  std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      m[i][j] = MultiPoly::variable(2, 0) * MultiPoly::constant(2, f.at(i, j)) +
                MultiPoly::variable(2, 1) * MultiPoly::constant(2, g.at(i, j));
    }
  if (!det3(m).is_zero())
    throw std::invalid_argument("classify_pencil: a generic member is invertible");

  auto adj = adjugate3(m);
  // validity: no common projective zero of the 2x2 minors (a common zero is a
  // nonzero member of rank < 2), and not everything zero (rank < 2 throughout).
  MultiPoly common;
  bool any = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (adj[i][j].is_zero()) continue;
      common = any ? binary_form_gcd(common, adj[i][j]) : adj[i][j].normalized();
      any = true;
    }
  if (!any)
    throw std::invalid_argument("classify_pencil: all members have rank <= 1");
  if (common.total_degree() > 0)
    throw std::invalid_argument("classify_pencil: some nonzero member has rank < 2");

  // any nonzero adjugate column spans the kernel pointwise; strip the common
  // binary factor to get the reduced parametrization.
  for (std::size_t col = 0; col < 3; ++col) {
    std::vector<MultiPoly> column{adj[0][col], adj[1][col], adj[2][col]};
    MultiPoly gcd;
    bool nz = false;
    for (const auto& e : column) {
      if (e.is_zero()) continue;
      gcd = nz ? binary_form_gcd(gcd, e) : e.normalized();
      nz = true;
    }
    if (!nz) continue;
    unsigned deg = 0;
    for (auto& e : column) {
      if (e.is_zero()) continue;
      auto q = divide_exact(e, gcd);
      if (!q) throw std::logic_error("classify_pencil: gcd division failed");
      e = *q;
      deg = std::max(deg, e.total_degree());
    }
    if (param) *param = column;
    return deg;
  }
  throw std::logic_error("classify_pencil: adjugate has no nonzero column");
}

char degree_to_type(unsigned deg) {
  switch (deg) {
    case 1: return 'l';
    case 2: return 'c';
    case 0: return 'p';
    default: throw std::logic_error("classify_pencil: unexpected kernel degree");
  }
}

}  // namespace

PencilClassification classify_pencil(const DegeneratePencil& p) {
  if (p.f.rows() != 3 || p.f.cols() != 3 || p.g.rows() != 3 || p.g.cols() != 3)
    throw std::invalid_argument("classify_pencil: 3x3 matrices required");
  {
    Vec fr, gr;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        fr.push_back(p.f.at(i, j));
        gr.push_back(p.g.at(i, j));
      }
    if (QMatrix::from_rows({fr, gr}, 9).rank() != 2)
      throw std::invalid_argument("classify_pencil: span is not two-dimensional");
  }

  PencilClassification out;
  unsigned deg = kernel_parametrization_degree(p.f, p.g, &out.kernel_param);
  unsigned tdeg =
      kernel_parametrization_degree(p.f.transpose(), p.g.transpose(), nullptr);
  out.kernel_degree = deg;
  out.type = degree_to_type(deg);
  out.transpose_type = degree_to_type(tdeg);
  bool consistent = (out.type == 'l' && out.transpose_type == 'l') ||
                    (out.type == 'c' && out.transpose_type == 'p') ||
                    (out.type == 'p' && out.transpose_type == 'c');
  if (!consistent)
    throw std::logic_error("classify_pencil: transpose classification mismatch");
  return out;
}

}  // namespace epws
