#include "doctest.h"

#include <algorithm>
#include <functional>

#include "epwstab/oneps.hpp"

using namespace epws;

namespace {

std::vector<long> random_weights(Rng& rng) {
  std::vector<long> r(6);
  long s = 0;
  for (int i = 0; i < 5; ++i) {
    r[i] = rng.integer(-6, 6);
    s += r[i];
  }
  r[5] = -s;
  std::sort(r.begin(), r.end(), std::greater<long>());
  bool zero = true;
  for (long x : r) zero = zero && x == 0;
  if (zero) r = {1, 0, 0, 0, 0, -1};
  return r;
}

}  // namespace

TEST_CASE("induced decomposition is symmetric with matching dimensions") {
  Rng rng(0x33c1);
  for (int t = 0; t < 40; ++t) {
    OnePS l(random_weights(rng));
    IsotypicDecomp dec = induced_decomposition(l);
    CHECK(dec.ambient() == kTriDim);
    std::size_t n = dec.level_count();
    long prev = dec.levels.front().weight + 1;
    std::size_t total = 0;
    for (const auto& lev : dec.levels) {
      CHECK(lev.weight < prev);
      prev = lev.weight;
      CHECK(!lev.coords.empty());
      total += lev.coords.size();
      for (std::size_t c : lev.coords) {
        auto tr = triples()[c];
        CHECK(lev.weight == l.r[tr[0]] + l.r[tr[1]] + l.r[tr[2]]);
      }
    }
    CHECK(total == kTriDim);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(dec.levels[i].weight + dec.levels[n - 1 - i].weight == 0);
      CHECK(dec.levels[i].coords.size() == dec.levels[n - 1 - i].coords.size());
    }
  }
}

TEST_CASE("graded type sums to the dimension and mu agrees with its halved form") {
  Rng rng(0x33c2);
  for (int t = 0; t < 25; ++t) {
    OnePS l(random_weights(rng));
    Lagrangian a = random_lagrangian(rng);
    LambdaType lt = lambda_type(a, l);
    std::size_t total = 0;
    for (std::size_t d : lt.d) total += d;
    CHECK(total == 10);
    CHECK(mu_value(a, l) == mu_value_halved_form(a, l));
    // mu of the split limit is the same
    Lagrangian lim = limit_lagrangian(a, l);
    CHECK(is_split(lim.space(), induced_decomposition(l)));
    CHECK(lambda_type(lim, l) == lt);
    CHECK(mu_value(lim, l) == mu_value(a, l));
  }
}

TEST_CASE("symbolic mu evaluates to mu_value") {
  Rng rng(0x33c3);
  for (int t = 0; t < 25; ++t) {
    OnePS l(random_weights(rng));
    MuForm f = mu_symbolic(l);
    Lagrangian a = random_lagrangian(rng);
    LambdaType lt = lambda_type(a, l);
    CHECK(f.eval(lt.reduced) == mu_value(a, l));
  }
  // pinned sample: the split coordinate lagrangian F_{v_0}
  OnePS l({5, -1, -1, -1, -1, -1});
  MuForm f = mu_symbolic(l);
  CHECK(f.str() == "2(3d0 - 15)");
  CHECK(f.eval({5}) == 0);
  CHECK(mu_value(f_v({1, 0, 0, 0, 0, 0}), l) == 2 * (3 * 10 - 15));
}

TEST_CASE("dominance is a partial order compatible with limits") {
  LambdaType a{{4, 3, 3}, {4}};
  LambdaType b{{3, 4, 3}, {3}};
  LambdaType c{{3, 3, 4}, {3}};
  CHECK(dominates(a, b));
  CHECK(dominates(b, c));
  CHECK(dominates(a, c));
  CHECK(!dominates(b, a));
  CHECK(dominates(a, a));
}

TEST_CASE("graded limit projects levelwise") {
  Rng rng(0x33c4);
  OnePS l({2, 1, 0, 0, -1, -2});
  IsotypicDecomp dec = induced_decomposition(l);
  for (int t = 0; t < 10; ++t) {
    Lagrangian a = random_lagrangian(rng);
    Subspace lim = graded_limit(a.space(), dec);
    CHECK(lim.dim() == 10);
    CHECK(is_lagrangian(lim));
    // idempotent on split spaces
    CHECK(graded_limit(lim, dec) == lim);
  }
}
