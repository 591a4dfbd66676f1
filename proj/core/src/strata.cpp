#include "epwstab/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace epws {

namespace {

Subspace tri_span(const std::vector<std::array<unsigned, 3>>& ts) {
  std::vector<Vec> rows;
  for (const auto& t : ts) {
    Vec e(kTriDim);
    e[triple_index(t[0], t[1], t[2])] = 1;
    rows.push_back(e);
  }
  return Subspace::span(rows, kTriDim);
}

// Monomial building blocks of the flag conditions, standard frame.
const Subspace& span_012() {
  static const Subspace s = tri_span({{0, 1, 2}});
  return s;
}
const Subspace& span_A() {  // [v0] ^ wedge^2 V15
  static const Subspace s = tri_span({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5},
                                      {0, 2, 3}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                      {0, 3, 5}, {0, 4, 5}});
  return s;
}
const Subspace& span_Av() {  // wedge^3 V04
  static const Subspace s = tri_span({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3},
                                      {0, 2, 4}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4},
                                      {1, 3, 4}, {2, 3, 4}});
  return s;
}
const Subspace& span_C() {  // wedge^2 V02 ^ V35
  static const Subspace s = tri_span({{0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 2, 3},
                                      {0, 2, 4}, {0, 2, 5}, {1, 2, 3}, {1, 2, 4},
                                      {1, 2, 5}});
  return s;
}
const Subspace& span_D() {  // [v0] ^ wedge^2 V14
  static const Subspace s =
      tri_span({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {0, 3, 4}});
  return s;
}
const Subspace& span_E1() {  // [v0] ^ V12 ^ V35
  static const Subspace s =
      tri_span({{0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 4}, {0, 2, 5}});
  return s;
}
const Subspace& span_E1v() {  // wedge^2 V02 ^ V34
  static const Subspace s =
      tri_span({{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}, {1, 2, 4}});
  return s;
}
const Subspace& span_F1() {  // wedge^2 V01 ^ V23
  static const Subspace s = tri_span({{0, 1, 2}, {0, 1, 3}});
  return s;
}
const Subspace& span_F1_aux() {  // wedge^2 V01 ^ V45 + V01 ^ wedge^2 V23
  static const Subspace s = tri_span({{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {1, 2, 3}});
  return s;
}
const Subspace& span_F2_sum() {
  static const Subspace s =
      tri_span({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {1, 2, 3}});
  return s;
}
const Subspace& span_N3_2() {  // wedge^2 V01 ^ V23 + <014, 023>
  static const Subspace s = tri_span({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}});
  return s;
}
const Subspace& span_N3_3() {  // wedge^3 V03 + [v0]^V13^[v4] + <015>
  static const Subspace s = tri_span({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5},
                                      {0, 2, 3}, {0, 2, 4}, {0, 3, 4}, {1, 2, 3}});
  return s;
}

std::size_t cap_dim(const Lagrangian& a, const Subspace& s) {
  return a.space().intersect(s).dim();
}

const char* name_str(StratumName n) {
  switch (n) {
    case StratumName::A: return "A";
    case StratumName::Av: return "Av";
    case StratumName::C1: return "C1";
    case StratumName::C2: return "C2";
    case StratumName::D: return "D";
    case StratumName::E1: return "E1";
    case StratumName::E2: return "E2";
    case StratumName::E1v: return "E1v";
    case StratumName::E2v: return "E2v";
    case StratumName::F1: return "F1";
    case StratumName::F2: return "F2";
    case StratumName::N3: return "N3";
  }
  throw std::logic_error("bad stratum name");
}

}  // namespace

std::string StratumId::str() const {
  std::string s = name_str(name);
  if (unstable) s += "+";
  return s;
}

StratumId StratumId::parse(const std::string& s) {
  StratumId id;
  std::string base = s;
  if (!base.empty() && base.back() == '+') {
    id.unstable = true;
    base.pop_back();
  }
  static const std::map<std::string, StratumName> names = {
      {"A", StratumName::A},     {"Av", StratumName::Av},
      {"C1", StratumName::C1},   {"C2", StratumName::C2},
      {"D", StratumName::D},     {"E1", StratumName::E1},
      {"E2", StratumName::E2},   {"E1v", StratumName::E1v},
      {"E2v", StratumName::E2v}, {"F1", StratumName::F1},
      {"F2", StratumName::F2},   {"N3", StratumName::N3}};
  auto it = names.find(base);
  if (it == names.end()) throw std::invalid_argument("unknown stratum: " + s);
  id.name = it->second;
  return id;
}

std::vector<StratumId> all_strata() {
  std::vector<StratumId> out;
  for (int u = 0; u < 2; ++u)
    for (int n = 0; n < 12; ++n)
      out.push_back({static_cast<StratumName>(n), u == 1});
  return out;
}

OnePS stratum_lambda(StratumName name) {
  switch (name) {
    case StratumName::A: return OnePS({5, -1, -1, -1, -1, -1});
    case StratumName::Av: return OnePS({1, 1, 1, 1, 1, -5});
    case StratumName::C1:
    case StratumName::C2: return OnePS({1, 1, 1, -1, -1, -1});
    case StratumName::D: return OnePS({1, 0, 0, 0, 0, -1});
    case StratumName::E1:
    case StratumName::E2: return OnePS({4, 1, 1, -2, -2, -2});
    case StratumName::E1v:
    case StratumName::E2v: return OnePS({2, 2, 2, -1, -1, -4});
    case StratumName::F1:
    case StratumName::F2: return OnePS({1, 1, 0, 0, -1, -1});
    case StratumName::N3: return OnePS({2, 1, 0, 0, -1, -2});
  }
  throw std::logic_error("bad stratum name");
}

std::vector<std::size_t> stratum_type(const StratumId& id) {
  const std::size_t u = id.unstable ? 1 : 0;
  switch (id.name) {
    case StratumName::A:
    case StratumName::Av: return {5 + u};
    case StratumName::C1: return {1, 3 + u};
    case StratumName::C2: return {0, 6 + u};
    case StratumName::D: return {3 + u};
    case StratumName::E1:
    case StratumName::E1v: return {1, 2 + u};
    case StratumName::E2:
    case StratumName::E2v: return {0, 4 + u};
    case StratumName::F1: return {2, u};
    case StratumName::F2: return {1, 2 + u};
    case StratumName::N3: return {1, 1, 2 + u};
  }
  throw std::logic_error("bad stratum name");
}

MuForm stratum_mu_form(StratumName name) {
  return mu_symbolic(stratum_lambda(name));
}

bool flag_condition_check(const Lagrangian& a, const QMatrix& basis,
                          const StratumId& id) {
  auto inv = basis.inverse();
  if (!inv) throw std::invalid_argument("basis is not a frame");
  const Lagrangian b = transform(a, *inv);
  const std::size_t u = id.unstable ? 1 : 0;
  switch (id.name) {
    case StratumName::A:
      return cap_dim(b, span_A()) >= 5 + u;
    case StratumName::Av:
      return cap_dim(b, span_Av()) >= 5 + u;
    case StratumName::C1:
      return b.space().contains(span_012()) && cap_dim(b, span_C()) >= 3 + u;
    case StratumName::C2:
      return cap_dim(b, span_012().sum(span_C())) >= 6 + u;
    case StratumName::D:
      return cap_dim(b, span_D()) >= 3 + u;
    case StratumName::E1:
      return b.space().contains(span_012()) && cap_dim(b, span_E1()) >= 2 + u;
    case StratumName::E2:
      return cap_dim(b, span_012().sum(span_E1())) >= 4 + u;
    case StratumName::E1v:
      return b.space().contains(span_012()) && cap_dim(b, span_E1v()) >= 2 + u;
    case StratumName::E2v:
      return cap_dim(b, span_012().sum(span_E1v())) >= 4 + u;
    case StratumName::F1:
      return b.space().contains(span_F1()) &&
             (!id.unstable || cap_dim(b, span_F1_aux()) >= 1);
    case StratumName::F2:
      return cap_dim(b, span_F1()) >= 1 && cap_dim(b, span_F2_sum()) >= 3 + u;
    case StratumName::N3:
      return cap_dim(b, span_F1()) >= 1 && cap_dim(b, span_N3_2()) >= 2 &&
             cap_dim(b, span_N3_3()) >= 4 + u;
  }
  throw std::logic_error("bad stratum name");
}

CertVerdict verify_certificate(const Lagrangian& a, const DestabCertificate& cert) {
  auto inv = cert.basis.inverse();
  if (!inv) throw std::invalid_argument("certificate basis is not a frame");
  OnePS lambda(cert.weights);
  const Lagrangian b = transform(a, *inv);
  const long mu = mu_value(b, lambda);
  if (mu != cert.mu) return CertVerdict::Invalid;
  const LambdaType t = lambda_type(b, lambda);
  if (!cert.claimed_type.empty()) {
    if (cert.claimed_type.size() != t.reduced.size()) return CertVerdict::Invalid;
    LambdaType claimed;
    claimed.d = cert.claimed_type;
    LambdaType actual;
    actual.d = t.reduced;
    if (!dominates(actual, claimed)) return CertVerdict::Invalid;
  }
  if (mu > 0) return CertVerdict::SemistableExcluded;
  if (mu == 0) return CertVerdict::StableExcluded;
  return CertVerdict::Invalid;
}

namespace {

using TypeVec = std::vector<std::size_t>;

// sum of entries d_i..d_j inclusive
std::size_t seg(const TypeVec& d, std::size_t i, std::size_t j) {
  std::size_t s = 0;
  for (std::size_t k = i; k <= j && k < d.size(); ++k) s += d[k];
  return s;
}

StratumId ns(StratumName n) { return {n, false}; }

std::vector<ScanRow> build_scan_rows() {
  using N = StratumName;
  std::vector<ScanRow> rows;
  auto add = [&rows](std::vector<long> lambda, std::vector<long> coeff,
                     long constant, std::vector<ScanRow::Cover> covers) {
    ScanRow r;
    r.lambda = std::move(lambda);
    r.printed_mu.coeff = std::move(coeff);
    r.printed_mu.constant = constant;
    r.covers = std::move(covers);
    rows.push_back(std::move(r));
  };
  auto C = [](std::function<bool(const TypeVec&)> f,
              std::vector<StratumId> ids) {
    return ScanRow::Cover{std::move(f), std::move(ids)};
  };

  add({1, 0, 0, 0, 0, -1}, {1}, -3,
      {C([](const TypeVec& d) { return d[0] >= 3; }, {ns(N::D)})});

  add({1, 1, 0, 0, -1, -1}, {2, 1}, -4,
      {C([](const TypeVec& d) { return d[0] == 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] == 1 && d[1] >= 2; }, {ns(N::F2)}),
       C([](const TypeVec& d) { return d[1] == 4; }, {ns(N::F1)})});

  add({1, 1, 0, 0, 0, -2}, {2, 1}, -6,
      {C([](const TypeVec& d) { return d[0] >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] + d[1] >= 5; }, {ns(N::Av)})});

  add({1, 1, 1, -1, -1, -1}, {3, 1}, -6,
      {C([](const TypeVec& d) { return d[0] == 1 && d[1] >= 3; }, {ns(N::C1)}),
       C([](const TypeVec& d) { return d[1] >= 6; }, {ns(N::C2)})});

  add({1, 1, 1, 1, -2, -2}, {3}, -6,
      {C([](const TypeVec& d) { return d[0] >= 2; }, {ns(N::F1)})});

  add({2, 1, 0, 0, -1, -2}, {3, 2, 1}, -7,
      {C([](const TypeVec& d) { return d[0] == 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 3 || seg(d, 0, 2) >= 5;
        }, {ns(N::D)}),
       C([](const TypeVec& d) { return d == TypeVec{1, 1, 2}; }, {ns(N::N3)})});

  add({2, 1, 1, -1, -1, -2}, {4, 2, 1}, -8,
      {C([](const TypeVec& d) { return d[0] == 1 && d[1] + d[2] >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 6; }, {ns(N::E2)})});

  add({2, 1, 1, 0, -1, -3}, {4, 3, 2, 1}, -9,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 2) >= 4 || seg(d, 0, 3) >= 5;
        }, {ns(N::D)}),
       C([](const TypeVec& d) { return d[0] == 1 && d[1] + d[2] >= 2; },
         {ns(N::E1v)})});

  add({3, 1, 1, -1, -1, -3}, {5, 3, 1}, -11,
      {C([](const TypeVec& d) { return d[0] == 1 && d[1] + d[2] >= 4; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 7; }, {ns(N::A)})});

  add({3, 1, 1, 0, -2, -3}, {5, 4, 2, 1}, -11,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] == 1 && d[1] + d[2] >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 5; }, {ns(N::D)})});

  add({3, 2, 1, -1, -2, -3}, {6, 4, 3, 2, 1}, -12,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] + d[3] >= 3; },
         {ns(N::F2)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 4) >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 3) >= 5 || seg(d, 0, 4) >= 6;
        }, {ns(N::E2)})});

  add({3, 2, 1, 0, -1, -5}, {6, 5, 4, 3, 2, 1}, -15,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] + d[3] >= 3; },
         {ns(N::F2)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 3) >= 2; },
         {ns(N::E1v)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 5) >= 5; }, {ns(N::Av)})});

  add({4, 1, 1, -2, -2, -2}, {6, 3}, -12,
      {C([](const TypeVec& d) { return d[0] == 1 && d[1] >= 2; }, {ns(N::E1)}),
       C([](const TypeVec& d) { return d[1] >= 4; }, {ns(N::E2)})});

  add({4, 1, 1, 1, -2, -5}, {6, 3}, -15,
      {C([](const TypeVec& d) { return d[0] >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 4; }, {ns(N::D)})});

  add({4, 2, 1, 0, -3, -4}, {7, 6, 5, 3, 2, 1}, -15,
      {C([](const TypeVec& d) { return seg(d, 0, 2) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] + d[3] >= 2; },
         {ns(N::F2)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 3) >= 2; },
         {ns(N::E1)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 4) >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 4) >= 5; }, {ns(N::E2v)}),
       C([](const TypeVec& d) { return seg(d, 0, 5) >= 6; }, {ns(N::A)})});

  add({4, 3, 1, 0, -3, -5}, {8, 7, 5, 4, 2, 1}, -17,
      {C([](const TypeVec& d) { return seg(d, 0, 2) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] + d[3] >= 2; },
         {ns(N::F2)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 4) >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 4) >= 5 || seg(d, 0, 5) >= 6;
        }, {ns(N::E2v)})});

  add({4, 4, 1, -2, -2, -5}, {9, 6, 3}, -18,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] == 1 && d[1] + d[2] >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 5; }, {ns(N::E2v)})});

  add({4, 4, 1, 1, -2, -8}, {9, 6, 3}, -24,
      {C([](const TypeVec& d) { return d[0] >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] >= 1 && d[1] >= 2; }, {ns(N::F2)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 5; }, {ns(N::Av)})});

  add({5, -1, -1, -1, -1, -1}, {3}, -15,
      {C([](const TypeVec& d) { return d[0] >= 5; }, {ns(N::A)})});

  add({5, 2, 2, -1, -1, -7}, {9, 6, 3}, -21,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) {
          return d[0] == 1 && (d[1] >= 2 || d[1] + d[2] >= 3);
        }, {ns(N::E1v)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 5; }, {ns(N::Av)})});

  add({5, 3, 1, -1, -3, -5}, {9, 7, 5, 3, 1}, -19,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] + d[3] >= 3; },
         {ns(N::F2)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 2) >= 3 || seg(d, 0, 3) >= 5;
        }, {ns(N::D)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 4) >= 4; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 4) >= 7; }, {ns(N::A)})});

  add({5, 5, -1, -1, -1, -7}, {9, 3}, -24,
      {C([](const TypeVec& d) { return d[0] >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 6; }, {ns(N::Av)})});

  add({5, 5, 2, -1, -4, -7}, {12, 9, 6, 3}, -24,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] >= 2; },
         {ns(N::F2)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 5; }, {ns(N::E2v)}),
       C([](const TypeVec& d) {
          return d[0] == 1 && (d[1] + d[2] >= 2 || seg(d, 1, 3) >= 3);
        }, {ns(N::E1v)})});

  add({7, 4, 1, -2, -2, -8}, {12, 9, 6, 3}, -27,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 6; }, {ns(N::Av)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 3) >= 4; },
         {ns(N::C1)})});

  add({7, 4, 1, 1, -5, -8}, {12, 9, 6, 3}, -27,
      {C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 2 || (seg(d, 0, 1) >= 1 && d[2] >= 2);
        }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 4; }, {ns(N::E2v)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 6; }, {ns(N::A)}),
       C([](const TypeVec& d) {
          return d[0] == 1 && (d[1] + d[2] >= 2 || seg(d, 1, 3) >= 4);
        }, {ns(N::E1v)})});

  add({7, 4, 1, 1, -2, -11}, {12, 9, 6, 3}, -33,
      {C([](const TypeVec& d) { return d[0] >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 3 || seg(d, 0, 2) >= 4;
        }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 5; }, {ns(N::Av)})});

  // The mu form printed for this row, 6(4d0+3d1+2d2+d3-11), contradicts the
  // weight listing for the same 1-PS (levels t^15, t^9, t^6, t^3 of dimensions
  // 1, 2, 3, 3); the consistent form is 2(15d0+9d1+6d2+3d3-30). We keep the
  // printed coefficients here so the discrepancy is pinned by a test.
  add({7, 4, 4, -2, -5, -8}, {12, 9, 6, 3}, -33,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) {
          return (d[0] >= 1 && d[1] + d[2] >= 2) || (d[2] >= 1 && d[3] >= 3);
        }, {ns(N::E1), ns(N::E1v)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 2) >= 4 || seg(d, 0, 3) >= 6;
        }, {ns(N::E2v)})});

  add({7, 7, 1, 1, -5, -11}, {15, 9, 3}, -36,
      {C([](const TypeVec& d) { return d[0] >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] >= 1 && d[1] >= 2; }, {ns(N::F2)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 6; }, {ns(N::Av)})});

  add({8, 5, 2, -1, -4, -10}, {15, 12, 9, 6, 3}, -33,
      {C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 2 || seg(d, 0, 2) >= 3;
        }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 4; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 4) >= 6; }, {ns(N::Av)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 3) >= 2; },
         {ns(N::E1v)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 4) >= 4; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return d == TypeVec{0, 1, 1, 1, 2}; },
         {ns(N::N3)})});

  add({10, 7, 1, -2, -5, -11}, {18, 15, 12, 9, 6, 3}, -39,
      {C([](const TypeVec& d) { return seg(d, 0, 2) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && seg(d, 2, 4) >= 3; },
         {ns(N::F2)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 5) >= 6; }, {ns(N::Av)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 5) >= 4; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return d == TypeVec{0, 0, 1, 1, 3, 0}; },
         {ns(N::N3)})});

  add({10, 7, 4, -2, -8, -11}, {21, 15, 12, 9, 6, 3}, -42,
      {C([](const TypeVec& d) { return seg(d, 0, 2) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] + d[3] >= 2; },
         {ns(N::F2)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 4) >= 5 || seg(d, 0, 5) >= 6;
        }, {ns(N::E2v)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 5) >= 3; },
         {ns(N::C1)})});

  add({11, 5, 2, -1, -4, -13}, {18, 15, 12, 9, 6, 3}, -42,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 3; }, {ns(N::D)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 4) >= 5 || seg(d, 0, 5) >= 6;
        }, {ns(N::Av)}),
       C([](const TypeVec& d) {
          return d[0] == 1 && (seg(d, 1, 4) >= 3 || seg(d, 1, 5) >= 4);
        }, {ns(N::E1v)}),
       C([](const TypeVec& d) { return d == TypeVec{0, 1, 1, 0, 2, 1}; },
         {ns(N::N3)})});

  add({11, 5, 5, -1, -7, -13}, {21, 15, 9, 3}, -45,
      {C([](const TypeVec& d) { return seg(d, 0, 1) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 4; }, {ns(N::E2v)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 7; }, {ns(N::A)}),
       C([](const TypeVec& d) { return d[0] == 1 && d[1] + d[2] >= 2; },
         {ns(N::E1v)})});

  add({11, 8, 2, -1, -7, -13}, {21, 18, 12, 9, 6, 3}, -45,
      {C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 2 || seg(d, 0, 2) >= 3;
        }, {ns(N::F1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 1 && (d[2] + d[3] >= 2 || seg(d, 2, 4) >= 3);
        }, {ns(N::F2)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 5) >= 4; },
         {ns(N::C1)}),
       C([](const TypeVec& d) { return seg(d, 0, 4) >= 5; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 5) >= 6; }, {ns(N::Av)})});

  add({11, 8, 5, -4, -7, -13}, {24, 15, 12, 9, 6, 3}, -48,
      {C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 2 || seg(d, 0, 2) >= 3;
        }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 3) >= 2; },
         {ns(N::E1v)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 5) >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 3) >= 4 || seg(d, 0, 4) >= 5;
        }, {ns(N::E2v)})});

  add({13, 7, 1, 1, -5, -17}, {21, 15, 9, 3}, -54,
      {C([](const TypeVec& d) { return d[0] == 2 || seg(d, 0, 1) >= 3; },
         {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 2) >= 4; }, {ns(N::D)}),
       C([](const TypeVec& d) { return seg(d, 0, 3) >= 6; }, {ns(N::Av)})});

  add({17, 11, 5, -1, -13, -19}, {33, 27, 21, 15, 9, 3}, -69,
      {C([](const TypeVec& d) { return seg(d, 0, 2) >= 2; }, {ns(N::F1)}),
       C([](const TypeVec& d) { return seg(d, 0, 1) >= 1 && d[2] + d[3] >= 2; },
         {ns(N::F2)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 4) >= 3; },
         {ns(N::C1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 4) >= 5 || seg(d, 0, 5) >= 7;
        }, {ns(N::E2v)})});

  add({19, 13, 7, -5, -11, -23}, {39, 27, 21, 15, 9, 3}, -81,
      {C([](const TypeVec& d) {
          return seg(d, 0, 1) >= 2 || seg(d, 0, 2) >= 3;
        }, {ns(N::F1)}),
       C([](const TypeVec& d) { return d[0] == 1 && seg(d, 1, 3) >= 2; },
         {ns(N::E1v)}),
       C([](const TypeVec& d) {
          return d[0] == 1 && (seg(d, 1, 4) >= 3 || seg(d, 1, 5) >= 4);
        }, {ns(N::C1)}),
       C([](const TypeVec& d) {
          return seg(d, 0, 3) >= 4 || seg(d, 0, 4) >= 5;
        }, {ns(N::E2v)})});

  return rows;
}

}  // namespace

const std::vector<ScanRow>& scan_rows() {
  static const std::vector<ScanRow> rows = build_scan_rows();
  return rows;
}

std::vector<ScanEntry> table_scan(const Lagrangian& a, const QMatrix& basis) {
  auto inv = basis.inverse();
  if (!inv) throw std::invalid_argument("basis is not a frame");
  const Lagrangian b = transform(a, *inv);
  std::vector<ScanEntry> out;
  for (const auto& row : scan_rows()) {
    OnePS lambda(row.lambda);
    ScanEntry e;
    e.lambda = row.lambda;
    e.mu = mu_value(b, lambda);
    e.type = lambda_type(b, lambda).reduced;
    if (e.mu >= 0) {
      for (const auto& cover : row.covers) {
        if (!cover.cond(e.type)) continue;
        for (const auto& id : cover.strata)
          e.matched.emplace_back(id, flag_condition_check(a, basis, id));
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::pair<StratumId, bool> dual_stratum(const StratumId& id) {
  using N = StratumName;
  if (id.unstable) {
    // weight-preserving mirror; the dual flag is read in reversed order
    static const std::map<N, N> m = {
        {N::A, N::Av},   {N::Av, N::A},   {N::C1, N::C1}, {N::C2, N::C2},
        {N::D, N::D},    {N::E1, N::E1v}, {N::E1v, N::E1}, {N::E2, N::E2v},
        {N::E2v, N::E2}, {N::F1, N::F1},  {N::F2, N::F2}, {N::N3, N::N3}};
    return {{m.at(id.name), true}, true};
  }
  if (id.name == N::F1) return {{N::F1, false}, true};
  static const std::map<N, N> m = {
      {N::A, N::Av},  {N::Av, N::A},   {N::C1, N::C2},  {N::C2, N::C1},
      {N::D, N::D},   {N::E1, N::E2},  {N::E2, N::E1},  {N::E1v, N::E2v},
      {N::E2v, N::E1v}, {N::F2, N::F2}, {N::N3, N::N3}};
  return {{m.at(id.name), false}, false};
}

bool strata_duality_probe(const Lagrangian& a, const StratumId& id) {
  auto [mirror, reversed] = dual_stratum(id);
  const Lagrangian b = dual_lagrangian(a).value;
  QMatrix frame = QMatrix::identity(6);
  if (reversed) {
    frame = QMatrix(6, 6);
    for (std::size_t i = 0; i < 6; ++i) frame.at(5 - i, i) = 1;
  }
  return flag_condition_check(b, frame, mirror);
}

namespace {

Vec random_vec_in(const Subspace& s, Rng& rng) {
  Vec v(s.ambient());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Rational c = rng.integer(-9, 9);
    const Vec b = s.basis_vector(k);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * b[j];
  }
  return v;
}

Subspace random_subspace_in(const Subspace& s, std::size_t dim, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < dim; ++k) rows.push_back(random_vec_in(s, rng));
    Subspace candidate = Subspace::span(rows, s.ambient());
    if (candidate.dim() == dim) return candidate;
  }
  throw std::runtime_error("random subspace draw degenerated");
}

Subspace coordinate_level(const IsotypicLevel& level, std::size_t ambient) {
  std::vector<Vec> rows;
  for (std::size_t c : level.coords) {
    Vec e(ambient);
    e[c] = 1;
    rows.push_back(e);
  }
  return Subspace::span(rows, ambient);
}

// random lagrangian of the symplectic coordinate subspace u, by greedy
// isotropic completion
Subspace random_middle_lagrangian(const Subspace& u, Rng& rng) {
  const std::size_t target = u.dim() / 2;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Subspace chosen(u.ambient());
    while (chosen.dim() < target) {
      Subspace room = chosen.dim() == 0
                          ? u
                          : u.intersect(chosen.perp(symplectic_form_matrix()));
      Vec v = random_vec_in(room, rng);
      Subspace next = chosen.sum(Subspace::span({v}, u.ambient()));
      if (next.dim() == chosen.dim()) break;  // degenerate draw; restart
      chosen = next;
    }
    if (chosen.dim() == target) return chosen;
  }
  throw std::runtime_error("middle lagrangian draw degenerated");
}

}  // namespace

Lagrangian split_stratum_sampler(const StratumId& id, std::uint64_t seed) {
  Rng rng(seed);
  const OnePS lambda = stratum_lambda(id.name);
  const IsotypicDecomp dec = induced_decomposition(lambda);
  const std::vector<std::size_t> want = stratum_type(id);
  const std::size_t s = dec.levels.size() - 1;

  std::vector<Subspace> parts(dec.levels.size(), Subspace(kTriDim));
  for (std::size_t i = 0; i < dec.levels.size(); ++i) {
    if (dec.levels[i].weight <= 0) continue;
    Subspace level = coordinate_level(dec.levels[i], kTriDim);
    parts[i] = random_subspace_in(level, want[i], rng);
    // opposite level: perp of the chosen piece under the symplectic pairing
    Subspace opposite = coordinate_level(dec.levels[s - i], kTriDim);
    parts[s - i] = parts[i].perp(symplectic_form_matrix()).intersect(opposite);
  }
  for (std::size_t i = 0; i < dec.levels.size(); ++i) {
    if (dec.levels[i].weight != 0) continue;
    parts[i] = random_middle_lagrangian(coordinate_level(dec.levels[i], kTriDim), rng);
  }

  Subspace total(kTriDim);
  for (const auto& p : parts) total = total.sum(p);
  Lagrangian a(total);
  if (lambda_type(a, lambda).reduced != want)
    throw std::runtime_error("split sample missed the defining type");
  return a;
}

}  // namespace epws
