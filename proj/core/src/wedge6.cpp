#include "epwstab/wedge6.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace epws {

const std::vector<std::array<unsigned, 3>>& triples() {
  static const std::vector<std::array<unsigned, 3>> t = [] {
    std::vector<std::array<unsigned, 3>> v;
    for (unsigned i = 0; i < 6; ++i)
      for (unsigned j = i + 1; j < 6; ++j)
        for (unsigned k = j + 1; k < 6; ++k) v.push_back({i, j, k});
    return v;
  }();
  return t;
}

std::size_t triple_index(unsigned i, unsigned j, unsigned k) {
  static const std::map<std::array<unsigned, 3>, std::size_t> idx = [] {
    std::map<std::array<unsigned, 3>, std::size_t> m;
    for (std::size_t n = 0; n < triples().size(); ++n) m[triples()[n]] = n;
    return m;
  }();
  auto it = idx.find({i, j, k});
  if (it == idx.end()) throw std::invalid_argument("bad triple");
  return it->second;
}

std::pair<std::size_t, int> triple_index_signed(unsigned i, unsigned j, unsigned k) {
  std::array<unsigned, 3> t = {i, j, k};
  int sign = 1;
  // bubble sort, 3 entries
  for (int pass = 0; pass < 2; ++pass)
    for (int p = 0; p < 2; ++p)
      if (t[p] > t[p + 1]) {
        std::swap(t[p], t[p + 1]);
        sign = -sign;
      }
  if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("repeated index");
  return {triple_index(t[0], t[1], t[2]), sign};
}

TriVector::TriVector(Vec coords) : c(std::move(coords)) {
  if (c.size() != kTriDim) throw std::invalid_argument("need 20 coordinates");
}

TriVector TriVector::monomial(unsigned i, unsigned j, unsigned k, Rational a) {
  TriVector t;
  auto [n, s] = triple_index_signed(i, j, k);
  t.c[n] = a * s;
  return t;
}

bool TriVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

TriVector TriVector::operator+(const TriVector& o) const {
  TriVector r;
  for (std::size_t i = 0; i < kTriDim; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

TriVector TriVector::operator-(const TriVector& o) const {
  TriVector r;
  for (std::size_t i = 0; i < kTriDim; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

TriVector TriVector::operator*(const Rational& k) const {
  TriVector r;
  for (std::size_t i = 0; i < kTriDim; ++i) r.c[i] = c[i] * k;
  return r;
}

int monomial_pairing(std::size_t a, std::size_t b) {
  const auto& ta = triples()[a];
  const auto& tb = triples()[b];
  bool seen[6] = {};
  for (unsigned x : ta) seen[x] = true;
  for (unsigned x : tb) {
    if (seen[x]) return 0;
    seen[x] = true;
  }
  // sign of the permutation (ta, tb) of (0..5)
  unsigned p[6] = {ta[0], ta[1], ta[2], tb[0], tb[1], tb[2]};
  int sign = 1;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

const QMatrix& symplectic_form_matrix() {
  static const QMatrix j = [] {
    QMatrix m(kTriDim, kTriDim);
    for (std::size_t a = 0; a < kTriDim; ++a)
      for (std::size_t b = 0; b < kTriDim; ++b) m.at(a, b) = monomial_pairing(a, b);
    return m;
  }();
  return j;
}

Rational symplectic_pairing(const TriVector& a, const TriVector& b) {
  Vec jb = symplectic_form_matrix().apply(b.c);
  Rational acc = 0;
  for (std::size_t i = 0; i < kTriDim; ++i) acc += a.c[i] * jb[i];
  return acc;
}

TriVector wedge3(const Vec& u, const Vec& v, const Vec& w) {
  if (u.size() != 6 || v.size() != 6 || w.size() != 6)
    throw std::invalid_argument("vectors must be in Q^6");
  TriVector t;
  for (std::size_t n = 0; n < kTriDim; ++n) {
    const auto& [i, j, k] = triples()[n];
    // 3x3 determinant of the (i,j,k) coordinates
    t.c[n] = u[i] * (v[j] * w[k] - v[k] * w[j]) - u[j] * (v[i] * w[k] - v[k] * w[i]) +
             u[k] * (v[i] * w[j] - v[j] * w[i]);
  }
  return t;
}

Subspace support3(const TriVector& a) {
  if (a.is_zero()) throw std::invalid_argument("support of zero");
  // contraction by v_l-dual ^ v_m-dual applied to every monomial of a
  std::vector<Vec> imgs;
  for (unsigned l = 0; l < 6; ++l)
    for (unsigned m = l + 1; m < 6; ++m) {
      Vec img(6);
      for (std::size_t n = 0; n < kTriDim; ++n) {
        if (a.c[n] == 0) continue;
        const auto& t = triples()[n];
        // contract e_t with the covector pair (l, m): nonzero only if both
        // appear; result is +-(the remaining basis vector)
        int pos_l = -1, pos_m = -1;
        for (int p = 0; p < 3; ++p) {
          if (t[p] == l) pos_l = p;
          if (t[p] == m) pos_m = p;
        }
        if (pos_l < 0 || pos_m < 0) continue;
        int rest = 3 - pos_l - pos_m;
        // sign of moving v_l, v_m to the front of v_{t0}^v_{t1}^v_{t2}
        int sign = ((pos_l + pos_m + 1) % 2 == 0) ? 1 : -1;
        if (pos_l > pos_m) sign = -sign;
        img[t[rest]] += a.c[n] * sign;
      }
      imgs.push_back(img);
    }
  return Subspace::span(imgs, 6);
}

bool is_decomposable(const TriVector& a) { return support3(a).dim() == 3; }

bool is_lagrangian(const Subspace& s) {
  if (s.ambient() != kTriDim || s.dim() != 10) return false;
  const QMatrix& b = s.basis();
  QMatrix g = b * symplectic_form_matrix() * b.transpose();
  return g == QMatrix(10, 10);
}

Lagrangian::Lagrangian(const Subspace& s) : space_(s) {
  if (!is_lagrangian(s)) throw std::invalid_argument("not a lagrangian subspace");
}

Lagrangian Lagrangian::from_rows(const std::vector<Vec>& rows) {
  return Lagrangian(Subspace::span(rows, kTriDim));
}

Lagrangian f_v(const Vec& v) {
  if (v.size() != 6) throw std::invalid_argument("vector must be in Q^6");
  // kernel of wedging with v: wedge^3 V -> wedge^4 V (15-dim, quadruples lex)
  std::vector<std::array<unsigned, 4>> quads;
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = i + 1; j < 6; ++j)
      for (unsigned k = j + 1; k < 6; ++k)
        for (unsigned l = k + 1; l < 6; ++l) quads.push_back({i, j, k, l});
  QMatrix m(quads.size(), kTriDim);
  for (std::size_t n = 0; n < kTriDim; ++n) {
    const auto& t = triples()[n];
    for (unsigned x = 0; x < 6; ++x) {
      if (v[x] == 0) continue;
      if (x == t[0] || x == t[1] || x == t[2]) continue;
      // v_x ^ e_t: sort (x, t0, t1, t2)
      std::array<unsigned, 4> q = {x, t[0], t[1], t[2]};
      int sign = 1;
      for (int p = 0; p < 3 && q[p] > q[p + 1]; ++p) {
        std::swap(q[p], q[p + 1]);
        sign = -sign;
      }
      std::size_t qi = std::find(quads.begin(), quads.end(), q) - quads.begin();
      m.at(qi, n) += sign * v[x];
    }
  }
  Subspace ker = Subspace::span(m.kernel_basis(), kTriDim);
  if (ker.dim() != 10) throw std::invalid_argument("zero vector");
  return Lagrangian(ker);
}

Subspace s_w(const Subspace& w) {
  if (w.ambient() != 6 || w.dim() != 3) throw std::invalid_argument("need dim-3 W");
  std::vector<Vec> gens;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = a + 1; b < 3; ++b)
      for (unsigned i = 0; i < 6; ++i) {
        Vec ei(6);
        ei[i] = 1;
        gens.push_back(wedge3(w.basis_vector(a), w.basis_vector(b), ei).c);
      }
  return Subspace::span(gens, kTriDim);
}

TriVector wedge3_of(const Subspace& w) {
  if (w.ambient() != 6 || w.dim() != 3) throw std::invalid_argument("need dim-3 W");
  return wedge3(w.basis_vector(0), w.basis_vector(1), w.basis_vector(2));
}

bool theta_membership(const Lagrangian& a, const Subspace& w) {
  return a.contains(wedge3_of(w));
}

std::size_t a_cap_sw_dim(const Lagrangian& a, const Subspace& w) {
  return a.space().intersect(s_w(w)).dim();
}

TriVector delta_v(const TriVector& a) {
  // delta(e_I) = eps_I e_{I-complement}-dual, eps_I = (e_I, e_{I^c})_V
  TriVector d;
  for (std::size_t n = 0; n < kTriDim; ++n) {
    if (a.c[n] == 0) continue;
    std::size_t comp = kTriDim - 1 - n;  // lex order reverses under complement
    d.c[comp] += a.c[n] * monomial_pairing(n, comp);
  }
  return d;
}

DualLagrangian dual_lagrangian(const Lagrangian& a) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < 10; ++i) {
    TriVector t(a.matrix().row(i));
    rows.push_back(delta_v(t).c);
  }
  return DualLagrangian{Lagrangian::from_rows(rows)};
}

QMatrix wedge3_matrix(const QMatrix& g) {
  if (g.rows() != 6 || g.cols() != 6) throw std::invalid_argument("need 6x6");
  QMatrix m(kTriDim, kTriDim);
  for (std::size_t n = 0; n < kTriDim; ++n) {
    const auto& t = triples()[n];
    Vec gi(6), gj(6), gk(6);
    for (unsigned r = 0; r < 6; ++r) {
      gi[r] = g.at(r, t[0]);
      gj[r] = g.at(r, t[1]);
      gk[r] = g.at(r, t[2]);
    }
    TriVector img = wedge3(gi, gj, gk);
    for (std::size_t r = 0; r < kTriDim; ++r) m.at(r, n) = img.c[r];
  }
  return m;
}

Lagrangian transform(const Lagrangian& a, const QMatrix& g) {
  return Lagrangian(a.space().apply(wedge3_matrix(g)));
}

Lagrangian graph_lagrangian(const QMatrix& s) {
  if (s.rows() != 10 || s.cols() != 10) throw std::invalid_argument("need 10x10");
  if (!(s == s.transpose())) throw std::invalid_argument("need symmetric matrix");
  // symplectic frame: f_I = e_I for the ten triples I containing 0,
  // g_I = e_{I^c} / (e_I, e_{I^c})_V, so (f_I, g_J) = delta_IJ.
  std::vector<std::size_t> fs;
  for (std::size_t n = 0; n < kTriDim; ++n)
    if (triples()[n][0] == 0) fs.push_back(n);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < 10; ++i) {
    Vec r(kTriDim);
    r[fs[i]] = 1;
    for (std::size_t j = 0; j < 10; ++j) {
      if (s.at(i, j) == 0) continue;
      std::size_t comp = kTriDim - 1 - fs[j];
      r[comp] += s.at(i, j) / monomial_pairing(fs[j], comp);
    }
    rows.push_back(r);
  }
  return Lagrangian::from_rows(rows);
}

Lagrangian random_lagrangian(Rng& rng) {
  QMatrix s(10, 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i; j < 10; ++j) {
      s.at(i, j) = rng.rational();
      s.at(j, i) = s.at(i, j);
    }
  return graph_lagrangian(s);
}

Subspace v_span(unsigned i, unsigned j) {
  std::vector<Vec> rows;
  for (unsigned k = i; k <= j; ++k) {
    Vec e(6);
    e[k] = 1;
    rows.push_back(e);
  }
  return Subspace::span(rows, 6);
}

}  // namespace epws
