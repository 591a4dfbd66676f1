#include "doctest.h"

#include <algorithm>
#include <set>

#include "epwstab/conedecomp.hpp"
#include "printed_tables.h"

using namespace epws;

namespace {

IVec neg(IVec v) {
  for (auto& x : v) x = -x;
  return v;
}

bool ray_present(const std::vector<IVec>& rays, const IVec& v) {
  return std::find(rays.begin(), rays.end(), v) != rays.end() ||
         std::find(rays.begin(), rays.end(), neg(v)) != rays.end();
}

template <std::size_t N>
IVec to_ivec(const std::array<long, N>& a) {
  return IVec(a.begin(), a.end());
}

}  // namespace

TEST_CASE("primitive and canonical forms") {
  CHECK(primitive({4, -6, 2}) == IVec{2, -3, 1});
  CHECK(primitive({0, 0, 0}) == IVec{0, 0, 0});
  CHECK(wall_canonical({0, -2, 4}) == IVec{0, 1, -2});
  auto both = chamber_canonical({0, 0, 3}, {true, false, false});
  CHECK(both.size() == 2);  // constrained part zero: both orientations
  auto one = chamber_canonical({2, 0, 3}, {true, false, false});
  CHECK(one == std::vector<IVec>{{2, 0, 3}});
  CHECK(chamber_canonical({-2, 0, 3}, {true, false, false}).size() == 1);
}

TEST_CASE("cone hypotheses hold for every builtin torus") {
  for (const auto& name : builtin_spec_names()) {
    auto rep = verify_cone_hypotheses(builtin_spec(name));
    INFO(name);
    CHECK(rep.ok());
  }
}

TEST_CASE("sl6 ordering rays: published rows, their duals, one extra pair") {
  auto spec = builtin_spec("sl6-wedge3");
  auto rays = ordering_rays(spec);
  CHECK(rays.size() == 72);

  std::set<IVec> honest;
  for (const auto& x : rays) honest.insert(x_to_sl6(spec, x));
  CHECK(honest.size() == 72);

  std::set<IVec> expected;
  for (const auto& row : printed::ordering_rows()) {
    IVec r = to_ivec(row.r);
    expected.insert(r);
    expected.insert(sl6_dual(r));
  }
  CHECK(expected.size() == 70);
  for (const auto& extra : printed::sl6_missing_dual_pair()) {
    IVec r = to_ivec(extra);
    CHECK(!expected.count(r));
    expected.insert(r);
  }
  CHECK(honest == expected);

  // the honest set is closed under duality, and rays map to valid 1-PS
  for (const auto& r : honest) CHECK(honest.count(sl6_dual(r)));
  for (const auto& x : rays) {
    OnePS l = ray_to_oneps(spec, x);
    long s = 0;
    for (long w : l.r) s += w;
    CHECK(s == 0);
  }
}

TEST_CASE("F1 boundary torus rays are the permutation closure of the published list") {
  auto spec = builtin_spec("gF1");
  auto rays = ordering_rays(spec);
  CHECK(rays.size() == 10);
  std::set<IVec> expected;
  for (auto base : printed::gf1_ray_orbits()) {
    std::sort(base.begin(), base.end());
    do {
      for (const auto& c : chamber_canonical(to_ivec(base), spec.constrained))
        expected.insert(c);
    } while (std::next_permutation(base.begin(), base.end()));
  }
  CHECK(std::set<IVec>(rays.begin(), rays.end()) == expected);
}

TEST_CASE("D boundary torus: honest rays versus the published list") {
  auto spec = builtin_spec("gD");
  auto rays = ordering_rays(spec);
  CHECK(rays.size() == 20);
  auto extraneous = printed::gd_published_not_honest();
  for (const auto& pub : printed::gd_rays()) {
    IVec v = to_ivec(pub);
    bool bad = std::find(extraneous.begin(), extraneous.end(), pub) !=
               extraneous.end();
    CHECK(ray_present(rays, v) == !bad);
  }
}

TEST_CASE("E1 boundary torus: honest rays versus the published list") {
  auto spec = builtin_spec("gE1");
  auto rays = ordering_rays(spec);
  CHECK(rays.size() == 22);
  std::set<IVec> pub;
  for (const auto& raw : printed::ge1_rays_raw()) {
    IVec w = {raw[0], raw[1], raw[2] - raw[3], raw[3] - raw[4]};
    for (const auto& c : chamber_canonical(w, spec.constrained)) pub.insert(c);
  }
  std::set<IVec> honest(rays.begin(), rays.end());
  std::set<IVec> pub_only, honest_only;
  std::set_difference(pub.begin(), pub.end(), honest.begin(), honest.end(),
                      std::inserter(pub_only, pub_only.end()));
  std::set_difference(honest.begin(), honest.end(), pub.begin(), pub.end(),
                      std::inserter(honest_only, honest_only.end()));
  std::set<IVec> frozen_pub_only, frozen_honest_only;
  for (const auto& a : printed::ge1_published_not_honest())
    frozen_pub_only.insert(to_ivec(a));
  for (const auto& a : printed::ge1_honest_not_published())
    frozen_honest_only.insert(to_ivec(a));
  CHECK(pub_only == frozen_pub_only);
  CHECK(honest_only == frozen_honest_only);
}

TEST_CASE("remaining boundary tori have the frozen ray counts") {
  CHECK(ordering_rays(builtin_spec("gE1v")).size() == 22);
  CHECK(ordering_rays(builtin_spec("gF2")).size() == 28);
  CHECK(ordering_rays(builtin_spec("gN3")).size() == 28);
}

TEST_CASE("worst ordering ray flags a split non-stable point") {
  auto spec = builtin_spec("sl6-wedge3");
  auto [ray, mu] = worst_ordering_ray(f_v({1, 0, 0, 0, 0, 0}), spec);
  CHECK(mu >= 30);
  CHECK(!ray.empty());
}
