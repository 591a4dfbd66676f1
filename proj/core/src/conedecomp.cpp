#include "epwstab/conedecomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace epws {

namespace {

long lgcd(long a, long b) { return std::gcd(a, b); }

QMatrix rows_matrix(const std::vector<IVec>& rows, std::size_t n) {
  std::vector<Vec> qr;
  for (const auto& r : rows) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(r[i]);
    qr.push_back(v);
  }
  return QMatrix::from_rows(qr, n);
}

IVec integerize(const Vec& v) {
  Integer den = 1;
  for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
  IVec out;
  for (const auto& x : v) {
    Rational y = x * Rational(den);
    out.push_back(static_cast<long>(numerator(y)));
  }
  return out;
}

}  // namespace

IVec primitive(IVec v) {
  long g = 0;
  for (long x : v) g = lgcd(g, std::abs(x));
  if (g == 0) return v;
  for (long& x : v) x /= g;
  return v;
}

IVec wall_canonical(IVec v) {
  v = primitive(std::move(v));
  for (long x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (long& y : v) y = -y;
    break;
  }
  return v;
}

std::vector<IVec> chamber_canonical(IVec v, const std::vector<bool>& constrained) {
  v = primitive(std::move(v));
  if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) return {};
  bool pos = true, neg = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!constrained[i]) continue;
    if (v[i] > 0) neg = false;
    if (v[i] < 0) pos = false;
  }
  std::vector<IVec> out;
  if (pos) out.push_back(v);
  if (neg) {
    IVec w = v;
    for (long& x : w) x = -x;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<IVec> all_wall_functions(const TorusActionSpec& spec) {
  std::set<IVec> walls;
  for (const auto& chars : spec.factors)
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = a + 1; b < chars.size(); ++b) {
        IVec d(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) d[i] = chars[a][i] - chars[b][i];
        d = wall_canonical(std::move(d));
        if (std::any_of(d.begin(), d.end(), [](long x) { return x != 0; }))
          walls.insert(std::move(d));
      }
  for (const auto& w : spec.explicit_walls) walls.insert(wall_canonical(w));
  return {walls.begin(), walls.end()};
}

std::vector<IVec> ordering_hyperplanes(const TorusActionSpec& spec) {
  std::set<IVec> keep;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (!spec.constrained[i]) continue;
    IVec e(spec.n);
    e[i] = 1;
    keep.insert(std::move(e));
  }
  for (const auto& w : all_wall_functions(spec)) {
    bool free_part = false;
    for (std::size_t i = 0; i < spec.n; ++i)
      if (!spec.constrained[i] && w[i] != 0) free_part = true;
    if (free_part) {
      keep.insert(w);
      continue;
    }
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (!spec.constrained[i]) continue;
      if (w[i] > 0) has_pos = true;
      if (w[i] < 0) has_neg = true;
    }
    if (has_pos && has_neg) keep.insert(w);
  }
  return {keep.begin(), keep.end()};
}

std::vector<IVec> ordering_rays(const TorusActionSpec& spec) {
  const std::vector<IVec> normals = ordering_hyperplanes(spec);
  const std::vector<IVec> full = all_wall_functions(spec);
  const std::size_t n = spec.n;
  if (normals.size() < n - 1) return {};
  std::set<IVec> rays;
  std::vector<std::size_t> idx(n - 1);
  std::iota(idx.begin(), idx.end(), 0);
  auto advance = [&]() {
    std::size_t k = n - 1;
    while (k-- > 0) {
      if (++idx[k] <= normals.size() - (n - 1 - k)) {
        for (std::size_t j = k + 1; j < n - 1; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<IVec> sub;
    for (std::size_t i : idx) sub.push_back(normals[i]);
    std::vector<Vec> ker = rows_matrix(sub, n).kernel_basis();
    if (ker.size() != 1) continue;
    for (IVec cand : chamber_canonical(integerize(ker[0]), spec.constrained)) {
      if (rays.count(cand)) continue;
      // re-verify: the genuine walls vanishing on the ray must cut exactly
      // its span (they do by construction; full-set check for safety)
      std::vector<IVec> active;
      for (const auto& w : full) {
        long dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += w[i] * cand[i];
        if (dot == 0) active.push_back(w);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!spec.constrained[i] || cand[i] != 0) continue;
        IVec e(n);
        e[i] = 1;
        active.push_back(std::move(e));
      }
      if (!active.empty() && rows_matrix(active, n).rank() == n - 1)
        rays.insert(std::move(cand));
    }
  } while (advance());
  return {rays.begin(), rays.end()};
}

ConeHypothesesReport verify_cone_hypotheses(const TorusActionSpec& spec) {
  ConeHypothesesReport rep;
  std::vector<IVec> full = all_wall_functions(spec);
  std::set<IVec> wallset(full.begin(), full.end());
  rep.faces_are_hyperplanes = true;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (!spec.constrained[i]) continue;
    IVec e(spec.n);
    e[i] = 1;
    if (!wallset.count(e)) {
      rep.faces_are_hyperplanes = false;
      rep.unmatched_faces.push_back(i);
    }
  }
  rep.common_intersection_dim =
      full.empty() ? spec.n : rows_matrix(full, spec.n).kernel_basis().size();
  return rep;
}

namespace {

const std::vector<IVec>& r6_rows() {
  static const std::vector<IVec> r = {{5, 4, 3, 2, 1},    {-1, 4, 3, 2, 1},
                                      {-1, -2, 3, 2, 1},  {-1, -2, -3, 2, 1},
                                      {-1, -2, -3, -4, 1}, {-1, -2, -3, -4, -5}};
  return r;
}

TorusActionSpec make_sl6() {
  TorusActionSpec s;
  s.name = "sl6-wedge3";
  s.n = 5;
  s.constrained.assign(5, true);
  std::vector<IVec> chars;
  for (const auto& t : triples()) {
    IVec c(5, 0);
    for (unsigned v : t)
      for (std::size_t i = 0; i < 5; ++i) c[i] += r6_rows()[v][i];
    chars.push_back(std::move(c));
  }
  s.factors.push_back(std::move(chars));
  s.to_sl6_weights = r6_rows();
  return s;
}

TorusActionSpec make_gd() {
  // torus C* x maximal torus of SL(4); coordinates (n, x1, x2, x3) with the
  // SL(4) weights written through rows scaled by 4
  static const std::vector<IVec> r4 = {
      {3, 2, 1}, {-1, 2, 1}, {-1, -2, 1}, {-1, -2, -3}};
  TorusActionSpec s;
  s.name = "gD";
  s.n = 4;
  s.constrained = {false, true, true, true};
  std::vector<IVec> f1;  // wedge^2 of the 4-dim factor, trivial C* weight
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      f1.push_back({0, r4[i][0] + r4[j][0], r4[i][1] + r4[j][1], r4[i][2] + r4[j][2]});
  std::vector<IVec> f2;  // C*-weight +-12 paired with the 4-dim weights
  for (std::size_t i = 0; i < 4; ++i) {
    f2.push_back({12, r4[i][0], r4[i][1], r4[i][2]});
    f2.push_back({-12, -r4[i][0], -r4[i][1], -r4[i][2]});
  }
  s.factors = {std::move(f1), std::move(f2)};
  return s;
}

TorusActionSpec make_ge1(bool dual) {
  // coordinates (m, r, x1, x2); s-weights of the SL(3) factor scaled by 3
  static const std::vector<IVec> s3 = {{2, 1}, {-1, 1}, {-1, -2}};
  TorusActionSpec s;
  s.name = dual ? "gE1v" : "gE1";
  s.n = 4;
  s.constrained = {false, true, true, true};
  std::vector<IVec>& w = s.explicit_walls;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      w.push_back({0, 0, s3[i][0] - s3[j][0], s3[i][1] - s3[j][1]});
  w.push_back({0, 1, 0, 0});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j)
        w.push_back({0, 6, s3[j][0] - s3[i][0], s3[j][1] - s3[i][1]});
  for (std::size_t i = 0; i < 3; ++i) {
    w.push_back({18, 0, s3[i][0], s3[i][1]});
    w.push_back({-9, 0, s3[i][0], s3[i][1]});
  }
  if (dual)
    for (auto& f : w)
      for (long& x : f) x = -x;
  return s;
}

TorusActionSpec make_gf1() {
  TorusActionSpec s;
  s.name = "gF1";
  s.n = 3;
  s.constrained.assign(3, true);
  std::vector<IVec> chars;
  for (long a : {1, -1})
    for (long b : {1, -1})
      for (long c : {1, -1}) chars.push_back({a, b, c});
  s.factors.push_back(std::move(chars));
  return s;
}

TorusActionSpec make_gf2() {
  TorusActionSpec s;
  s.name = "gF2";
  s.n = 4;  // (m, r1, r2, r3)
  s.constrained = {false, true, true, true};
  s.explicit_walls = {{0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
                      {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1},
                      {0, 1, -1, -1}, {0, -1, 1, -1}, {0, -1, -1, 1},
                      {6, 1, 0, -1}, {-6, 1, 0, -1}, {6, 1, 0, 1},
                      {-6, 1, 0, 1}};
  return s;
}

TorusActionSpec make_gn3() {
  TorusActionSpec s;
  s.name = "gN3";
  s.n = 4;  // (m0, m1, m2, r)
  s.constrained = {false, false, false, true};
  s.explicit_walls = {{0, 0, 0, 1},   {1, -1, -1, 0}, {1, -1, -1, 1},
                      {1, -1, -1, -1}, {1, 2, 2, 0},   {2, 1, 1, 0},
                      {2, -1, 3, 1},  {2, -1, 3, -1}, {2, 3, -1, 1},
                      {2, 3, -1, -1}};
  return s;
}

}  // namespace

std::vector<std::string> builtin_spec_names() {
  return {"sl6-wedge3", "gD", "gE1", "gE1v", "gF1", "gF2", "gN3"};
}

TorusActionSpec builtin_spec(const std::string& name) {
  if (name == "sl6-wedge3") return make_sl6();
  if (name == "gD") return make_gd();
  if (name == "gE1") return make_ge1(false);
  if (name == "gE1v") return make_ge1(true);
  if (name == "gF1") return make_gf1();
  if (name == "gF2") return make_gf2();
  if (name == "gN3") return make_gn3();
  throw std::invalid_argument("unknown spec: " + name);
}

IVec x_to_sl6(const TorusActionSpec& spec, const IVec& x) {
  if (spec.to_sl6_weights.empty())
    throw std::invalid_argument("spec has no SL(6) weight map");
  IVec r;
  for (const auto& row : spec.to_sl6_weights) {
    long acc = 0;
    for (std::size_t i = 0; i < spec.n; ++i) acc += row[i] * x[i];
    r.push_back(acc);
  }
  return primitive(std::move(r));
}

OnePS ray_to_oneps(const TorusActionSpec& spec, const IVec& ray) {
  return OnePS(x_to_sl6(spec, ray));
}

IVec sl6_dual(const IVec& r) {
  IVec d(r.rbegin(), r.rend());
  for (long& x : d) x = -x;
  return d;
}

std::pair<IVec, long> worst_ordering_ray(const Lagrangian& a,
                                         const TorusActionSpec& spec) {
  if (spec.to_sl6_weights.empty())
    throw std::invalid_argument("worst_ordering_ray needs an SL(6) spec");
  std::optional<std::pair<IVec, long>> best;
  for (const IVec& ray : ordering_rays(spec)) {
    long mu = mu_value(a, ray_to_oneps(spec, ray));
    if (!best || mu > best->second) best = {x_to_sl6(spec, ray), mu};
  }
  if (!best) throw std::logic_error("spec produced no rays");
  return *best;
}

}  // namespace epws
