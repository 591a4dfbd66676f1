#include "epwstab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace epws {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i, unsigned power) {
  if (i >= nvars) throw std::invalid_argument("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[i] = power;
  p.terms_[e] = 1;
  return p;
}

MultiPoly MultiPoly::from_univariate(const std::vector<Rational>& coeffs) {
  MultiPoly p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_[{static_cast<unsigned>(i)}] = coeffs[i];
  return p;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) {
    Rational v = r.coeff(e) + c;
    r.set_coeff(e, v);
  }
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      Rational v = r.coeff(e) + c1 * c2;
      r.set_coeff(e, v);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Rational MultiPoly::eval(const Vec& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (unsigned k = 0; k < e[var]; ++k) t *= value;
    Exponents e2 = e;
    e2[var] = 0;
    r.set_coeff(e2, r.coeff(e2) + t);
  }
  return r;
}

MultiPoly MultiPoly::substitute_linear(const std::vector<MultiPoly>& sub) const {
  if (sub.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
  std::size_t out_vars = sub.empty() ? 0 : sub[0].nvars();
  MultiPoly r(out_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * sub[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents e2 = e;
    e2[var] -= 1;
    r.set_coeff(e2, r.coeff(e2) + c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::homogenize(std::size_t var, unsigned deg) const {
  if (var > nvars_) throw std::invalid_argument("insertion index out of range");
  if (total_degree() > deg) throw std::invalid_argument("degree below attained degree");
  MultiPoly r(nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    unsigned d = std::accumulate(e.begin(), e.end(), 0u);
    Exponents e2;
    e2.reserve(nvars_ + 1);
    e2.insert(e2.end(), e.begin(), e.begin() + var);
    e2.push_back(deg - d);
    e2.insert(e2.end(), e.begin() + var, e.end());
    r.terms_[e2] = c;
  }
  return r;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
  return true;
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  return *this * (1 / leading_term().second);
}

bool MultiPoly::proportional(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return normalized() == o.normalized();
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (!first) {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
    if (!any_var || a != 1) {
      out << a.str();
      if (any_var) out << "*";
    }
    bool started = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (started) out << "*";
      started = true;
      if (i < names.size())
        out << names[i];
      else
        out << "x" << i;
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

std::vector<Rational> univariate_coeffs(const MultiPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("not univariate");
  std::vector<Rational> c(p.is_zero() ? 0 : p.total_degree() + 1);
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return c;
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  std::vector<Rational> f = univariate_coeffs(a), g = univariate_coeffs(b);
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(f);
  trim(g);
  while (!g.empty()) {
    // f mod g
    while (f.size() >= g.size() && !f.empty()) {
      Rational q = f.back() / g.back();
      std::size_t off = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= q * g[i];
      trim(f);
    }
    std::swap(f, g);
  }
  if (f.empty()) return MultiPoly(1);
  Rational lead = f.back();
  for (auto& c : f) c /= lead;
  return MultiPoly::from_univariate(f);
}

MultiPoly binary_form_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != 2 || b.nvars() != 2) throw std::invalid_argument("not binary");
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("gcd with zero form");
  if (!a.is_homogeneous() || !b.is_homogeneous())
    throw std::invalid_argument("not homogeneous");
  auto split = [](const MultiPoly& p, unsigned& px, unsigned& py) {
    px = py = ~0u;
    for (const auto& [e, c] : p.terms()) {
      px = std::min(px, e[0]);
      py = std::min(py, e[1]);
    }
  };
  unsigned ax, ay, bx, by;
  split(a, ax, ay);
  split(b, bx, by);
  auto dehom = [&](const MultiPoly& p, unsigned px, unsigned py) {
    MultiPoly q(1);
    for (const auto& [e, c] : p.terms()) q.set_coeff({e[0] - px}, c);
    return q;  // strip x^px y^py, then set y = 1
  };
  MultiPoly g = univariate_gcd(dehom(a, ax, ay), dehom(b, bx, by));
  unsigned dg = g.is_zero() ? 0 : g.total_degree();
  MultiPoly form = g.homogenize(1, dg);
  MultiPoly xy(2);
  Exponents e = {std::min(ax, bx), std::min(ay, by)};
  xy.set_coeff(e, 1);
  return (form * xy).normalized();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) return std::nullopt;
  std::size_t n = num.nvars();
  MultiPoly rem = num, quo(n);
  auto [de, dc] = den.leading_term();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading_term();
    Exponents qe(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = re[i] - de[i];
    }
    MultiPoly t(n);
    t.set_coeff(qe, rc / dc);
    quo = quo + t;
    rem = rem - t * den;
  }
  return quo;
}

std::optional<MultiPoly> poly_kth_root(const MultiPoly& p, unsigned k) {
  if (k == 0) return std::nullopt;
  if (p.is_zero()) return MultiPoly(p.nvars());
  if (k == 1) return p.normalized();
  std::size_t n = p.nvars();
  MultiPoly q = p.normalized();
  auto [le, lc] = q.leading_term();
  Exponents re(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (le[i] % k != 0) return std::nullopt;
    re[i] = le[i] / k;
  }
  MultiPoly root(n);
  root.set_coeff(re, 1);
  // Newton-style completion in graded-lex order: each step cancels the
  // leading term of the residual, adding a strictly smaller term to root.
  for (std::size_t guard = 0; guard < 100000; ++guard) {
    MultiPoly resid = q - root.pow(k);
    if (resid.is_zero()) return root;
    auto [ee, cc] = resid.leading_term();
    // next term t satisfies k * lead(root)^(k-1) * t = leading term of resid
    Exponents te(n);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned base = re[i] * (k - 1);
      if (ee[i] < base) return std::nullopt;
      te[i] = ee[i] - base;
    }
    GradedLexLess less;
    if (!less(te, re) && te != re) return std::nullopt;  // not descending: no root
    if (te == re) return std::nullopt;
    MultiPoly t(n);
    t.set_coeff(te, cc / Rational(k));
    root = root + t;
  }
  return std::nullopt;
}

namespace {

MultiPoly det_numeric_as_poly(const std::vector<std::vector<MultiPoly>>& m,
                              std::size_t nvars) {
  std::size_t n = m.size();
  QMatrix q(n, n);
  Exponents zero(nvars, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.at(i, j) = m[i][j].coeff(zero);
  return MultiPoly::constant(nvars, q.det());
}

MultiPoly det_interp_rec(const std::vector<std::vector<MultiPoly>>& m,
                         unsigned degree_bound, std::size_t nvars) {
  std::size_t var = nvars;
  for (std::size_t v = nvars; v-- > 0;) {
    bool used = false;
    for (const auto& row : m)
      for (const auto& e : row)
        if (e.degree_in(v) > 0) used = true;
    if (used) {
      var = v;
      break;
    }
  }
  if (var == nvars) return det_numeric_as_poly(m, nvars);

  std::vector<MultiPoly> vals;
  for (unsigned t = 0; t <= degree_bound; ++t) {
    std::vector<std::vector<MultiPoly>> mt(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (const auto& e : m[i]) mt[i].push_back(e.substitute(var, Rational(t)));
    vals.push_back(det_interp_rec(mt, degree_bound, nvars));
  }
  // Lagrange combination in the chosen variable.
  MultiPoly acc(nvars);
  for (unsigned j = 0; j <= degree_bound; ++j) {
    if (vals[j].is_zero()) continue;
    MultiPoly basis = MultiPoly::constant(nvars, 1);
    Rational denom = 1;
    for (unsigned i = 0; i <= degree_bound; ++i) {
      if (i == j) continue;
      basis = basis * (MultiPoly::variable(nvars, var) -
                       MultiPoly::constant(nvars, Rational(i)));
      denom *= Rational(j) - Rational(i);
    }
    acc = acc + vals[j] * basis * (1 / denom);
  }
  return acc;
}

}  // namespace

MultiPoly det_interpolated(const std::vector<std::vector<MultiPoly>>& m,
                           unsigned degree_bound) {
  std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  std::size_t nvars = m[0][0].nvars();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix not square");
    for (const auto& e : row)
      if (e.nvars() != nvars) throw std::invalid_argument("variable count mismatch");
  }
  MultiPoly d = det_interp_rec(m, degree_bound, nvars);
  // Degree guard: compare against direct numeric determinants at points off
  // the interpolation grid. A true degree above the bound shows up here.
  for (unsigned shift = 1; shift <= 2; ++shift) {
    Vec pt(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      pt[i] = Rational(degree_bound + shift + 2 * i) + Rational(1, 2);
    QMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q.at(i, j) = m[i][j].eval(pt);
    if (q.det() != d.eval(pt))
      throw std::runtime_error("det_interpolated: degree bound exceeded");
  }
  return d;
}

}  // namespace epws
