#include "epwstab/oneps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace epws {

OnePS::OnePS(std::vector<long> weights) : r(std::move(weights)) {
  if (r.size() != 6) throw std::invalid_argument("need 6 weights");
  if (std::accumulate(r.begin(), r.end(), 0L) != 0)
    throw std::invalid_argument("weights must sum to 0");
  if (std::all_of(r.begin(), r.end(), [](long x) { return x == 0; }))
    throw std::invalid_argument("trivial 1-PS");
}

std::size_t IsotypicDecomp::ambient() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.coords.size();
  return n;
}

IsotypicDecomp grade_coordinates(const std::vector<long>& coord_weights) {
  std::map<long, std::vector<std::size_t>, std::greater<long>> groups;
  for (std::size_t i = 0; i < coord_weights.size(); ++i)
    groups[coord_weights[i]].push_back(i);
  IsotypicDecomp dec;
  for (auto& [w, idx] : groups) dec.levels.push_back({w, std::move(idx)});
  return dec;
}

IsotypicDecomp induced_decomposition(const OnePS& lambda) {
  std::vector<long> w(kTriDim);
  for (std::size_t n = 0; n < kTriDim; ++n) {
    const auto& t = triples()[n];
    w[n] = lambda.r[t[0]] + lambda.r[t[1]] + lambda.r[t[2]];
  }
  return grade_coordinates(w);
}

namespace {

// coordinate subspace spanned by levels 0..i
Subspace filtration_piece(const IsotypicDecomp& dec, std::size_t upto,
                          std::size_t ambient) {
  std::vector<Vec> rows;
  for (std::size_t l = 0; l <= upto; ++l)
    for (std::size_t c : dec.levels[l].coords) {
      Vec e(ambient);
      e[c] = 1;
      rows.push_back(e);
    }
  return Subspace::span(rows, ambient);
}

}  // namespace

LambdaType graded_type(const Subspace& a, const IsotypicDecomp& dec) {
  std::size_t ambient = dec.ambient();
  if (a.ambient() != ambient) throw std::invalid_argument("ambient mismatch");
  LambdaType t;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < dec.levels.size(); ++i) {
    std::size_t di = a.intersect(filtration_piece(dec, i, ambient)).dim();
    t.d.push_back(di - prev);
    prev = di;
  }
  for (std::size_t i = 0; i < dec.levels.size(); ++i)
    if (dec.levels[i].weight > 0) t.reduced.push_back(t.d[i]);
  return t;
}

LambdaType lambda_type(const Lagrangian& a, const OnePS& lambda) {
  return graded_type(a.space(), induced_decomposition(lambda));
}

long graded_mu(const Subspace& a, const IsotypicDecomp& dec) {
  LambdaType t = graded_type(a, dec);
  long mu = 0;
  for (std::size_t i = 0; i < dec.levels.size(); ++i)
    mu += dec.levels[i].weight * static_cast<long>(t.d[i]);
  return mu;
}

long mu_value(const Lagrangian& a, const OnePS& lambda) {
  return graded_mu(a.space(), induced_decomposition(lambda));
}

long mu_value_halved_form(const Lagrangian& a, const OnePS& lambda) {
  IsotypicDecomp dec = induced_decomposition(lambda);
  LambdaType t = graded_type(a.space(), dec);
  long acc = 0;
  for (std::size_t i = 0; i < dec.levels.size(); ++i) {
    if (dec.levels[i].weight <= 0) continue;
    acc += dec.levels[i].weight *
           (2 * static_cast<long>(t.d[i]) - static_cast<long>(dec.levels[i].coords.size()));
  }
  return acc;
}

long MuForm::eval(const std::vector<std::size_t>& reduced_type) const {
  if (reduced_type.size() != coeff.size())
    throw std::invalid_argument("type length mismatch");
  Rational acc = constant;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    acc += Rational(coeff[i]) * Rational(static_cast<long>(reduced_type[i]));
  acc *= 2;
  if (denominator(acc) != 1) throw std::logic_error("non-integral mu");
  return static_cast<long>(numerator(acc));
}

std::string MuForm::str() const {
  std::ostringstream out;
  out << "2(";
  bool first = true;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == 0) continue;
    if (!first) out << (coeff[i] > 0 ? " + " : " - ");
    else if (coeff[i] < 0) out << "-";
    long a = std::abs(coeff[i]);
    if (a != 1) out << a;
    out << "d" << i;
    first = false;
  }
  if (constant != 0 || first) {
    if (!first) out << (constant >= 0 ? " + " : " - ");
    Rational a = constant >= 0 ? constant : Rational(-constant);
    if (first && constant < 0) out << "-";
    out << a.str();
  }
  out << ")";
  return out.str();
}

MuForm mu_symbolic(const IsotypicDecomp& dec) {
  MuForm f;
  f.constant = 0;
  for (const auto& l : dec.levels) {
    if (l.weight <= 0) continue;
    f.coeff.push_back(l.weight);
    f.constant -= Rational(l.weight) * Rational(static_cast<long>(l.coords.size())) / 2;
  }
  return f;
}

MuForm mu_symbolic(const OnePS& lambda) {
  return mu_symbolic(induced_decomposition(lambda));
}

bool dominates(const LambdaType& a, const LambdaType& b) {
  if (a.d.size() != b.d.size()) throw std::invalid_argument("type length mismatch");
  std::size_t ca = 0, cb = 0;
  for (std::size_t i = 0; i < a.d.size(); ++i) {
    ca += a.d[i];
    cb += b.d[i];
    if (ca < cb) return false;
  }
  return true;
}

Subspace graded_limit(const Subspace& a, const IsotypicDecomp& dec) {
  std::size_t ambient = dec.ambient();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dec.levels.size(); ++i) {
    Subspace piece = a.intersect(filtration_piece(dec, i, ambient));
    for (std::size_t k = 0; k < piece.dim(); ++k) {
      Vec v = piece.basis_vector(k);
      Vec proj(ambient);
      for (std::size_t c : dec.levels[i].coords) proj[c] = v[c];
      rows.push_back(proj);
    }
  }
  return Subspace::span(rows, ambient);
}

Lagrangian limit_lagrangian(const Lagrangian& a, const OnePS& lambda) {
  return Lagrangian(graded_limit(a.space(), induced_decomposition(lambda)));
}

bool is_split(const Subspace& a, const IsotypicDecomp& dec) {
  return graded_limit(a, dec) == a;
}

}  // namespace epws
