#include "epwstab/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "epwstab/epwgeom.hpp"

namespace epws {

namespace {

TriVector tv(unsigned i, unsigned j, unsigned k, Rational a = 1) {
  auto [idx, sign] = triple_index_signed(i, j, k);
  TriVector t;
  t.c[idx] = a * sign;
  return t;
}

Vec unit6(unsigned i) {
  Vec v(6);
  v[i] = 1;
  return v;
}

}  // namespace

const std::vector<Weight4>& plucker_weights() {
  static const std::vector<Weight4> w = {
      {2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {1, 1, 0, 0},
      {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  return w;
}

TriVector alpha_vec(const Weight4& i) {
  if (i == Weight4{2, 0, 0, 0}) return tv(0, 1, 2);
  if (i == Weight4{0, 2, 0, 0}) return tv(0, 3, 4);
  if (i == Weight4{0, 0, 2, 0}) return tv(1, 3, 5);
  if (i == Weight4{0, 0, 0, 2}) return tv(2, 4, 5);
  if (i == Weight4{1, 1, 0, 0}) return tv(0, 1, 4) - tv(0, 2, 3);
  if (i == Weight4{1, 0, 1, 0}) return tv(0, 1, 5) - tv(1, 2, 3);
  if (i == Weight4{1, 0, 0, 1}) return tv(0, 2, 5) - tv(1, 2, 4);
  if (i == Weight4{0, 1, 1, 0}) return tv(0, 3, 5) + tv(1, 3, 4);
  if (i == Weight4{0, 1, 0, 1}) return tv(0, 4, 5) + tv(2, 3, 4);
  if (i == Weight4{0, 0, 1, 1}) return tv(1, 4, 5) + tv(2, 3, 5);
  throw std::invalid_argument("alpha_vec: unknown weight");
}

TriVector beta_vec(const Weight4& i) {
  if (i == Weight4{2, 0, 0, 0}) return tv(3, 4, 5);
  if (i == Weight4{0, 2, 0, 0}) return tv(1, 2, 5);
  if (i == Weight4{0, 0, 2, 0}) return tv(0, 2, 4);
  if (i == Weight4{0, 0, 0, 2}) return tv(0, 1, 3);
  if (i == Weight4{1, 1, 0, 0}) return tv(2, 3, 5) - tv(1, 4, 5);
  if (i == Weight4{1, 0, 1, 0}) return tv(0, 4, 5) - tv(2, 3, 4);
  if (i == Weight4{1, 0, 0, 1}) return tv(1, 3, 4) - tv(0, 3, 5);
  if (i == Weight4{0, 1, 1, 0}) return TriVector() - tv(0, 2, 5) - tv(1, 2, 4);
  if (i == Weight4{0, 1, 0, 1}) return tv(0, 1, 5) + tv(1, 2, 3);
  if (i == Weight4{0, 0, 1, 1}) return TriVector() - tv(0, 1, 4) - tv(0, 2, 3);
  throw std::invalid_argument("beta_vec: unknown weight");
}

Rational alpha_beta_pairing(const Weight4& i) {
  return symplectic_pairing(alpha_vec(i), beta_vec(i));
}

const std::vector<std::array<unsigned, 3>>& a_iii_triples() {
  static const std::vector<std::array<unsigned, 3>> t = {
      {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
      {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
  return t;
}

Lagrangian a_iii() {
  std::vector<Vec> rows;
  for (const auto& t : a_iii_triples()) rows.push_back(tv(t[0], t[1], t[2]).c);
  return Lagrangian::from_rows(rows);
}

Lagrangian a_plus() {
  std::vector<Vec> rows;
  for (const auto& w : plucker_weights()) rows.push_back(alpha_vec(w).c);
  return Lagrangian::from_rows(rows);
}

Lagrangian a_minus() {
  std::vector<Vec> rows;
  for (const auto& w : plucker_weights()) rows.push_back(beta_vec(w).c);
  return Lagrangian::from_rows(rows);
}

namespace {

// Sym^2 L frame x0^2, x0x1, x0x2, x1^2, x1x2, x2^2: coordinates of u.v.
Vec sym_product(const Vec& u, const Vec& v) {
  Vec s(6);
  s[0] = u[0] * v[0];
  s[1] = u[0] * v[1] + u[1] * v[0];
  s[2] = u[0] * v[2] + u[2] * v[0];
  s[3] = u[1] * v[1];
  s[4] = u[1] * v[2] + u[2] * v[1];
  s[5] = u[2] * v[2];
  return s;
}

Vec vec3(Rational a, Rational b, Rational c) {
  Vec v(3);
  v[0] = a;
  v[1] = b;
  v[2] = c;
  return v;
}

std::vector<Vec> rational_p2_points() {
  std::vector<Vec> pts;
  for (int t = 0; t <= 6; ++t) pts.push_back(vec3(1, t, Rational(t) * t));
  for (int t = 0; t <= 2; ++t) pts.push_back(vec3(0, 1, t));
  pts.push_back(vec3(0, 0, 1));
  pts.push_back(vec3(1, 2, -1));
  return pts;
}

Lagrangian span_of_planes(const std::vector<Subspace>& planes) {
  std::vector<Vec> rows;
  for (const auto& p : planes) rows.push_back(wedge3_of(p).c);
  Subspace s = Subspace::span(rows, kTriDim);
  if (s.dim() != 10)
    throw std::logic_error("catalog: plane-image span is not 10-dimensional");
  return Lagrangian(s);
}

}  // namespace

Subspace k_plane(const Vec& l0) {
  std::vector<Vec> gens;
  for (unsigned m = 0; m < 3; ++m) gens.push_back(sym_product(l0, unit6(m)));
  Subspace s = Subspace::span(gens, 6);
  if (s.dim() != 3) throw std::invalid_argument("k_plane: l0 must be nonzero");
  return s;
}

Subspace h_plane(const Vec& f0) {
  QMatrix row(1, 3);
  for (unsigned j = 0; j < 3; ++j) row.at(0, j) = f0[j];
  auto ker = row.kernel_basis();
  if (ker.size() != 2) throw std::invalid_argument("h_plane: f0 must be nonzero");
  std::vector<Vec> gens = {sym_product(ker[0], ker[0]), sym_product(ker[0], ker[1]),
                           sym_product(ker[1], ker[1])};
  Subspace s = Subspace::span(gens, 6);
  if (s.dim() != 3) throw std::logic_error("h_plane: degenerate square span");
  return s;
}

Lagrangian a_k() {
  std::vector<Subspace> planes;
  for (const auto& p : rational_p2_points()) planes.push_back(k_plane(p));
  return span_of_planes(planes);
}

Lagrangian a_h() {
  std::vector<Subspace> planes;
  for (const auto& p : rational_p2_points()) planes.push_back(h_plane(p));
  return span_of_planes(planes);
}

Lagrangian a_p(const std::array<std::pair<Rational, Rational>, 3>& ab) {
  for (const auto& [a, b] : ab)
    if (a == 0 && b == 0) throw std::invalid_argument("a_p: (0,0) parameter");
  const auto& [p1, p2, p3] = ab;
  const Rational a1 = p1.first, b1 = p1.second;
  const Rational a2 = p2.first, b2 = p2.second;
  const Rational a3 = p3.first, b3 = p3.second;
  std::vector<Vec> rows;
  rows.push_back(tv(0, 1, 2).c);
  // the three star generators
  rows.push_back((tv(0, 2, 3, a1) + tv(1, 2, 4, b1)).c);
  rows.push_back((tv(1, 2, 5, a2) + tv(0, 1, 3, b2)).c);
  rows.push_back((tv(0, 1, 4, a3) + tv(0, 2, 5, b3)).c);
  // their perp inside V02 ^ wedge^2 V35
  rows.push_back(tv(0, 4, 5).c);
  rows.push_back(tv(1, 3, 5).c);
  rows.push_back(tv(2, 3, 4).c);
  rows.push_back((tv(1, 4, 5, b1) - tv(0, 3, 5, a1)).c);
  rows.push_back((tv(0, 3, 4, b2) - tv(2, 4, 5, a2)).c);
  rows.push_back((TriVector() - tv(2, 3, 5, b3) + tv(1, 3, 4, a3)).c);
  return Lagrangian::from_rows(rows);
}

std::array<QMatrix, 3> a_p_homs(const std::array<std::pair<Rational, Rational>, 3>& ab) {
  std::array<TriVector, 3> gens = {
      tv(0, 2, 3, ab[0].first) + tv(1, 2, 4, ab[0].second),
      tv(1, 2, 5, ab[1].first) + tv(0, 1, 3, ab[1].second),
      tv(0, 1, 4, ab[2].first) + tv(0, 2, 5, ab[2].second)};
  auto eps3 = [](unsigned a, unsigned b, unsigned c) -> int {
    if (a == b || b == c || a == c) return 0;
    int s = 1;
    unsigned p[3] = {a, b, c};
    if (p[0] > p[1]) { std::swap(p[0], p[1]); s = -s; }
    if (p[1] > p[2]) { std::swap(p[1], p[2]); s = -s; }
    if (p[0] > p[1]) { std::swap(p[0], p[1]); s = -s; }
    return s;
  };
  std::array<QMatrix, 3> h = {QMatrix(3, 3), QMatrix(3, 3), QMatrix(3, 3)};
  for (unsigned g = 0; g < 3; ++g) {
    for (std::size_t t = 0; t < kTriDim; ++t) {
      if (gens[g].c[t] == 0) continue;
      auto [i, j, l] = std::tuple{triples()[t][0], triples()[t][1], triples()[t][2]};
      if (j > 2 || l < 3)
        throw std::logic_error("a_p_homs: generator outside wedge^2 V02 ^ V35");
      for (unsigned m = 0; m < 3; ++m) {
        int e = eps3(m, i, j);
        if (e != 0) h[g].at(l - 3, m) = h[g].at(l - 3, m) + gens[g].c[t] * e;
      }
    }
  }
  return h;
}

Lagrangian a_cd(const std::pair<Rational, Rational>& c,
                const std::pair<Rational, Rational>& d) {
  if (c.first == 0 && c.second == 0)
    throw std::invalid_argument("a_cd: c = (0,0)");
  if (d.first == 0 && d.second == 0)
    throw std::invalid_argument("a_cd: d = (0,0)");
  auto A = [](Weight4 w) { return alpha_vec(w); };
  auto B = [](Weight4 w) { return beta_vec(w); };
  std::vector<Vec> rows;
  rows.push_back(A({2, 0, 0, 0}).c);
  rows.push_back(A({0, 0, 0, 2}).c);
  rows.push_back(A({1, 1, 0, 0}).c);
  rows.push_back(A({0, 0, 1, 1}).c);
  rows.push_back((A({0, 2, 0, 0}) + A({1, 0, 1, 0})).c);
  rows.push_back((A({1, 0, 0, 1}) + A({0, 1, 1, 0})).c);
  rows.push_back((A({0, 0, 2, 0}) + A({0, 1, 0, 1})).c);
  const Rational c0 = c.first, c1 = c.second, d0 = d.first, d1 = d.second;
  rows.push_back(((A({0, 2, 0, 0}) - A({1, 0, 1, 0})) * c0 +
                  (B({0, 0, 2, 0}) * 4 - B({0, 1, 0, 1}) * 2) * c1)
                     .c);
  rows.push_back(((A({1, 0, 0, 1}) - A({0, 1, 1, 0})) * d0 +
                  (B({1, 0, 0, 1}) - B({0, 1, 1, 0})) * d1)
                     .c);
  rows.push_back(((A({0, 0, 2, 0}) - A({0, 1, 0, 1})) * c0 +
                  (B({0, 2, 0, 0}) * 4 - B({1, 0, 1, 0}) * 2) * c1)
                     .c);
  return Lagrangian::from_rows(rows);
}

Lagrangian a_cl(const std::pair<Rational, Rational>& c, const QMatrix& m) {
  if (c.first == 0 && c.second == 0)
    throw std::invalid_argument("a_cl: c = (0,0)");
  if (m.rows() != 3 || m.cols() != 3 || m.transpose() != m)
    throw std::invalid_argument("a_cl: M must be symmetric 3x3");
  auto A = [](Weight4 w) { return alpha_vec(w); };
  auto B = [](Weight4 w) { return beta_vec(w); };
  std::vector<Vec> rows;
  // fixed 5-dim span of the conic incidence curve
  rows.push_back(A({2, 0, 0, 0}).c);
  rows.push_back(A({1, 1, 0, 0}).c);
  rows.push_back((A({0, 2, 0, 0}) + A({1, 0, 0, 1})).c);
  rows.push_back(A({0, 1, 0, 1}).c);
  rows.push_back(A({0, 0, 0, 2}).c);
  // the c-plane of the weight +-1 part
  const Rational c0 = c.first, c1 = c.second;
  rows.push_back((A({1, 0, 1, 0}) * c0 + B({0, 0, 1, 1}) * c1).c);
  rows.push_back((A({0, 0, 1, 1}) * c0 + B({1, 0, 1, 0}) * c1).c);
  // graph lagrangian of the weight-0 part
  const TriVector q1 = B({0, 2, 0, 0}) * 2 - B({1, 0, 0, 1});
  const TriVector q2 = B({0, 1, 1, 0});
  const TriVector q3 = B({0, 0, 2, 0});
  rows.push_back(((A({0, 2, 0, 0}) - A({1, 0, 0, 1})) + q1 * m.at(0, 0) +
                  q2 * (m.at(0, 1) * 2) + q3 * (m.at(0, 2) * 4))
                     .c);
  rows.push_back((A({0, 1, 1, 0}) + q1 * m.at(0, 1) + q2 * m.at(1, 1) +
                  q3 * (m.at(1, 2) * 2))
                     .c);
  rows.push_back((A({0, 0, 2, 0}) + q1 * m.at(0, 2) + q2 * m.at(1, 2) +
                  q3 * (m.at(2, 2) * 2))
                     .c);
  return Lagrangian::from_rows(rows);
}

Subspace w_infty() {
  return Subspace::span({unit6(0), unit6(1), unit6(2)}, 6);
}

Subspace w_zero() {
  return Subspace::span({unit6(2), unit6(4), unit6(5)}, 6);
}

QMatrix r_phi_matrix() {
  // image monomial (with sign) per source monomial, ordered lexicographically
  static const std::array<std::pair<std::array<unsigned, 3>, int>, 20> img = {{
      {{0, 1, 2}, 1},  {{0, 1, 3}, -1}, {{0, 2, 3}, -1}, {{1, 2, 3}, -1},
      {{0, 1, 4}, -1}, {{0, 2, 4}, -1}, {{1, 2, 4}, -1}, {{0, 3, 4}, 1},
      {{1, 3, 4}, 1},  {{2, 3, 4}, 1},  {{0, 1, 5}, -1}, {{0, 2, 5}, -1},
      {{1, 2, 5}, -1}, {{0, 3, 5}, 1},  {{1, 3, 5}, 1},  {{2, 3, 5}, 1},
      {{0, 4, 5}, 1},  {{1, 4, 5}, 1},  {{2, 4, 5}, 1},  {{3, 4, 5}, -1},
  }};
  QMatrix r(kTriDim, kTriDim);
  for (std::size_t src = 0; src < kTriDim; ++src) {
    const auto& [t, s] = img[src];
    r.at(triple_index(t[0], t[1], t[2]), src) = s;
  }
  return r;
}

bool sudoku_check(const Lagrangian& a) {
  std::set<std::size_t> support;
  for (std::size_t r = 0; r < 10; ++r) {
    Vec row = a.matrix().row(r);
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t j = 0; j < kTriDim; ++j)
      if (row[j] != 0) {
        ++nonzero;
        idx = j;
      }
    if (nonzero != 1)
      throw std::invalid_argument("sudoku_check: lagrangian is not monomial");
    support.insert(idx);
  }
  if (support.size() != 10) return false;
  // disjoint from the complement family
  for (std::size_t t : support) {
    std::array<bool, 6> in{};
    for (unsigned x : triples()[t]) in[x] = true;
    std::array<unsigned, 3> comp{};
    unsigned k = 0;
    for (unsigned x = 0; x < 6; ++x)
      if (!in[x]) comp[k++] = x;
    if (support.count(triple_index(comp[0], comp[1], comp[2]))) return false;
  }
  // incidence counts
  std::array<std::set<std::size_t>, 6> by_index;
  for (std::size_t t : support)
    for (unsigned x : triples()[t]) by_index[x].insert(t);
  for (unsigned x = 0; x < 6; ++x)
    if (by_index[x].size() != 5) return false;
  for (unsigned x = 0; x < 6; ++x)
    for (unsigned y = x + 1; y < 6; ++y) {
      std::size_t common = 0;
      for (std::size_t t : by_index[x])
        if (by_index[y].count(t)) ++common;
      if (common != 2) return false;
    }
  return true;
}

namespace {

const std::array<std::pair<Rational, Rational>, 3> kDefaultP = {
    {{1, 2}, {1, 3}, {1, 5}}};

QMatrix default_m() {
  QMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = m.at(1, 0) = Rational(1, 2);
  m.at(1, 1) = 2;
  m.at(1, 2) = m.at(2, 1) = 1;
  m.at(2, 2) = 1;
  return m;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"A_III", "A_plus", "A_minus", "A_k", "A_h", "A_p", "A_cd", "A_cL"};
}

CatalogEntry build(const std::string& name) {
  if (name == "A_III")
    return {name, "", a_iii(), "ten monomials of the row-sum-5 incidence matrix"};
  if (name == "A_plus")
    return {name, "", a_plus(), "span of the ten alpha weight lines"};
  if (name == "A_minus")
    return {name, "", a_minus(), "span of the ten beta weight lines"};
  if (name == "A_k")
    return {name, "", a_k(), "span of wedge^3 of the multiplication planes l0.L"};
  if (name == "A_h")
    return {name, "", a_h(), "span of wedge^3 of the planes Sym^2(ker f0)"};
  if (name == "A_p")
    return {name, "p = ((1,2),(1,3),(1,5))", a_p(kDefaultP),
            "wedge^3 V02 + star generators + perp"};
  if (name == "A_cd")
    return {name, "c = [1,2], d = [1,3]", a_cd({1, 2}, {1, 3}),
            "twisted-cubic incidence span + (c,d)-plane"};
  if (name == "A_cL")
    return {name, "c = [1,2], M = [[1,1/2,0],[1/2,2,1],[0,1,1]]",
            a_cl({1, 2}, default_m()),
            "conic incidence span + c-plane + graph L_M"};
  throw std::invalid_argument("build: unknown catalog name " + name);
}

// ---------------------------------------------------------------------------
// reproduction harness

namespace {

MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m) {
  auto p = [&](unsigned a, unsigned b, unsigned c) {
    return m[0][a] * m[1][b] * m[2][c];
  };
  return p(0, 1, 2) - p(0, 2, 1) - p(1, 0, 2) + p(1, 2, 0) + p(2, 0, 1) -
         p(2, 1, 0);
}

MultiPoly xvar(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

// 4 Y0 Y2 - Y1^2 in the canonical coordinates of <v0, v1, v3>
MultiPoly square_conic() {
  return xvar(3, 0) * xvar(3, 2) * Rational(4) - xvar(3, 1) * xvar(3, 1);
}

// X0 X2 - X1^2
MultiPoly chord_conic() {
  return xvar(3, 0) * xvar(3, 2) - xvar(3, 1) * xvar(3, 1);
}

MultiPoly discriminant_cubic() {
  std::array<std::array<MultiPoly, 3>, 3> g;
  g[0][0] = xvar(6, 0) * 2;
  g[0][1] = g[1][0] = xvar(6, 1);
  g[0][2] = g[2][0] = xvar(6, 2);
  g[1][1] = xvar(6, 3) * 2;
  g[1][2] = g[2][1] = xvar(6, 4);
  g[2][2] = xvar(6, 5) * 2;
  return det3(g);
}

bool in_triple_conic_class(const PlaneSextic& c) {
  if (c.full_plane_flag) return true;
  return c.form.proportional(chord_conic().pow(3));
}

struct ClaimCheck {
  std::string id;
  bool (*run)(std::vector<std::string>&);
};

bool claim_y_aiii(std::vector<std::string>& out) {
  EPWSextic y = epw_sextic(a_iii());
  MultiPoly expect = MultiPoly::constant(6, 1);
  for (std::size_t i = 0; i < 6; ++i) expect = expect * xvar(6, i);
  out.push_back("computed: " + y.form.str());
  return !y.degenerate_flag && y.form.proportional(expect);
}

bool claim_y_aplus(std::vector<std::string>& out) {
  EPWSextic y = epw_sextic(a_plus());
  MultiPoly q = xvar(6, 0) * xvar(6, 5) - xvar(6, 1) * xvar(6, 4) +
                xvar(6, 2) * xvar(6, 3);
  out.push_back("computed: " + y.form.str());
  return !y.degenerate_flag && y.form.proportional(q.pow(3));
}

bool claim_y_akah(std::vector<std::string>& out) {
  MultiPoly expect = discriminant_cubic().pow(2);
  EPWSextic yk = epw_sextic(a_k());
  EPWSextic yh = epw_sextic(a_h());
  out.push_back("k-span: " + yk.form.str());
  out.push_back("h-span: " + yh.form.str());
  return !yk.degenerate_flag && !yh.degenerate_flag &&
         yk.form.proportional(expect) && yh.form.proportional(expect);
}

bool claim_y_fv0(std::vector<std::string>& out) {
  EPWSextic y = epw_sextic(f_v(unit6(0)));
  out.push_back(y.degenerate_flag ? "degenerate locus flagged"
                                  : "unexpected sextic: " + y.form.str());
  return y.degenerate_flag;
}

bool claim_c_aiii(std::vector<std::string>& out) {
  PlaneSextic c = plane_sextic(w_infty(), a_iii());
  MultiPoly expect = (xvar(3, 0) * xvar(3, 1) * xvar(3, 2)).pow(2);
  out.push_back("computed: " + c.form.str());
  return !c.full_plane_flag && c.form.proportional(expect);
}

bool claim_c_ah(std::vector<std::string>& out) {
  PlaneSextic c = plane_sextic(h_plane(vec3(0, 0, 1)), a_h());
  out.push_back("computed: " + c.form.str());
  return !c.full_plane_flag && c.form.proportional(square_conic().pow(3));
}

bool claim_c_ak(std::vector<std::string>& out) {
  PlaneSextic c = plane_sextic(k_plane(vec3(1, 0, 0)), a_k());
  out.push_back(c.full_plane_flag ? "degenerate on the whole plane"
                                  : "unexpected curve: " + c.form.str());
  return c.full_plane_flag;
}

bool claim_cinf_acd(std::vector<std::string>& out) {
  const std::vector<std::array<Rational, 4>> samples = {
      {1, 2, 1, 3}, {1, 1, 1, 2}, {1, -2, 1, 5}, {2, 3, 1, 7}, {1, 5, 2, -3}};
  MultiPoly dsq = chord_conic().pow(2);
  for (const auto& s : samples) {
    PlaneSextic c = plane_sextic(w_infty(), a_cd({s[0], s[1]}, {s[2], s[3]}));
    if (c.full_plane_flag) {
      out.push_back("unexpected full plane");
      return false;
    }
    auto quot = divide_exact(c.form, dsq);
    if (!quot) {
      out.push_back("double conic does not divide: " + c.form.str());
      return false;
    }
    for (const auto& [e, coef] : quot->terms()) {
      (void)coef;
      bool is_x0x2 = (e == Exponents{1, 0, 1});
      bool is_x1sq = (e == Exponents{0, 2, 0});
      if (!is_x0x2 && !is_x1sq) {
        out.push_back("residual factor off the pencil: " + quot->str());
        return false;
      }
    }
    out.push_back("residual factor: " + quot->str());
  }
  PlaneSextic special = plane_sextic(w_infty(), a_cd({1, 1}, {1, -1}));
  out.push_back(special.full_plane_flag ? "([1,1],[1,-1]) fills the plane"
                                        : "([1,1],[1,-1]) unexpectedly a curve");
  return special.full_plane_flag;
}

bool claim_e_aprime(std::vector<std::string>& out) {
  const std::vector<std::array<std::pair<Rational, Rational>, 3>> samples = {
      kDefaultP,
      {{{2, 1}, {1, 1}, {3, 4}}},
      {{{1, -1}, {2, 3}, {1, 4}}}};
  MultiPoly xyz = xvar(3, 0) * xvar(3, 1) * xvar(3, 2);
  Rational convention_ratio = 0;
  for (const auto& p : samples) {
    Rational aprod = p[0].first * p[1].first * p[2].first;
    Rational bprod = p[0].second * p[1].second * p[2].second;
    if (aprod + bprod == 0) throw std::logic_error("sample on the bad locus");
    auto h = a_p_homs(p);
    // determinant cubic on the three-dimensional space of maps
    std::array<std::array<MultiPoly, 3>, 3> pencil;
    for (unsigned r = 0; r < 3; ++r)
      for (unsigned c = 0; c < 3; ++c) {
        pencil[r][c] = MultiPoly(3);
        for (unsigned g = 0; g < 3; ++g)
          pencil[r][c] = pencil[r][c] + xvar(3, g) * h[g].at(r, c);
      }
    MultiPoly on_maps = det3(pencil);
    // determinant cubic on P(V02): columns are the images of x v0 + y v1 + z v2
    std::array<std::array<MultiPoly, 3>, 3> point;
    for (unsigned r = 0; r < 3; ++r)
      for (unsigned g = 0; g < 3; ++g) {
        point[r][g] = MultiPoly(3);
        for (unsigned m = 0; m < 3; ++m)
          point[r][g] = point[r][g] + xvar(3, m) * h[g].at(r, m);
      }
    MultiPoly on_points = det3(point);
    out.push_back("map cubic: " + on_maps.str());
    out.push_back("point cubic: " + on_points.str());
    if (!on_maps.proportional(xyz)) return false;
    if (!on_points.proportional(xyz)) return false;
    // the coefficient is the stated sum of products, up to one universal
    // convention scalar shared by all samples
    Exponents e111 = {1, 1, 1};
    Rational ratio = on_maps.coeff(e111) / (aprod + bprod);
    if (ratio == 0) return false;
    if (convention_ratio == 0)
      convention_ratio = ratio;
    else if (ratio != convention_ratio)
      return false;
  }
  return true;
}

bool claim_diagonale(std::vector<std::string>& out) {
  auto member = [&](Rational c0, Rational c1, Rational d0, Rational d1) {
    return in_triple_conic_class(plane_sextic(w_infty(), a_cd({c0, c1}, {d0, d1})));
  };
  struct Case {
    Rational c0, c1, d0, d1;
    bool expect;
  };
  const std::vector<Case> cases = {
      {1, 0, 1, 3, true},    // c1 = 0
      {1, 0, 0, 1, true},    // c1 = 0
      {1, 2, 1, -2, true},   // c0 d1 + c1 d0 = 0
      {1, -3, 1, 3, true},   // c0 d1 + c1 d0 = 0
      {2, 5, 2, -5, true},   // c0 d1 + c1 d0 = 0
      {1, 1, 1, 1, false},   {1, 2, 1, 3, false}, {1, -1, 1, 2, false},
  };
  for (const auto& k : cases) {
    bool got = member(k.c0, k.c1, k.d0, k.d1);
    Rational section = k.c1 * (k.c0 * k.d1 + k.c1 * k.d0);
    out.push_back("(c,d) section value " + section.str() + " membership " +
                  (got ? "yes" : "no"));
    if (got != k.expect) return false;
    if ((section == 0) != k.expect) return false;
  }
  return true;
}

bool claim_xv_equation(std::vector<std::string>& out) {
  Rng rng(0x43415456u);
  const Exponents bad = {2, 2, 2};  // X0^2 X1^2 X2^2
  for (int trial = 0; trial < 3; ++trial) {
    QMatrix m(3, 3);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = i; j < 3; ++j) {
        Rational v = Rational(static_cast<long>(rng.next() % 7) - 3);
        m.at(i, j) = m.at(j, i) = v;
      }
    if (m.at(0, 0) == 0) m.at(0, 0) = 1;
    // Pluecker coordinates of the graph plane in the recorded 6-frame.  The
    // divisor is c0*p345 + 2*c1*p234 = 0: on graph planes this is exactly
    // 2*m12^2 - m11*m22 - 2*m11*c1 = 0, the membership equation that the
    // direct computation yields.  (The closed-form restatement with the
    // opposite sign on the c1 term contradicts that equation; the root it
    // predicts is checked below as a non-root whenever the two differ.)
    Rational p234 = m.at(0, 0);
    Rational p345 = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(0, 1) * 2;
    Rational c1 = -p345 / (p234 * 2);
    PlaneSextic on = plane_sextic(w_infty(), a_cl({1, c1}, m));
    if (on.full_plane_flag || on.form.coeff(bad) != 0) {
      out.push_back("section zero but obstruction coefficient nonzero");
      return false;
    }
    PlaneSextic off = plane_sextic(w_infty(), a_cl({1, c1 + 1}, m));
    if (off.full_plane_flag || off.form.coeff(bad) == 0) {
      out.push_back("section nonzero but obstruction coefficient vanishes");
      return false;
    }
    if (p345 != 0) {
      PlaneSextic flip = plane_sextic(w_infty(), a_cl({1, -c1}, m));
      if (flip.full_plane_flag || flip.form.coeff(bad) == 0) {
        out.push_back("sign-flipped root unexpectedly on the divisor");
        return false;
      }
    }
    out.push_back("divisor membership matches coefficient vanishing (trial " +
                  std::to_string(trial) + ")");
  }
  return true;
}

const std::vector<ClaimCheck>& checks() {
  static const std::vector<ClaimCheck> c = {
      {"Y-AIII", claim_y_aiii},
      {"Y-Aplus", claim_y_aplus},
      {"Y-AkAh", claim_y_akah},
      {"Y-Fv0-degenerate", claim_y_fv0},
      {"C-AIII-triangle", claim_c_aiii},
      {"C-Ah-conic", claim_c_ah},
      {"C-Ak-plane", claim_c_ak},
      {"Cinf-Acd", claim_cinf_acd},
      {"E-Aprime-triangle", claim_e_aprime},
      {"diagonale", claim_diagonale},
      {"XV-equation", claim_xv_equation},
  };
  return c;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : checks()) ids.push_back(c.id);
  return ids;
}

ClaimResult run_claim(const std::string& id) {
  for (const auto& c : checks()) {
    if (c.id != id) continue;
    ClaimResult r;
    r.id = id;
    r.pass = c.run(r.details);
    return r;
  }
  throw std::invalid_argument("run_claim: unregistered claim " + id);
}

}  // namespace epws
