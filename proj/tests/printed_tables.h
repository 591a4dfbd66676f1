#pragma once

// Published finite data the acceptance gate compares against: the 39 ordering
// 1-PS rows with their positive isotypic monomial groups, and the boundary
// group ray lists. Monomials are "abc" = v_a^v_b^v_c. One row of the first
// table is a known copy-paste duplication in the source (it repeats the
// groups of (4,1,1,-2,-2,-2)); the corrected groups are used here and the
// substitution is called out by the acceptance output.

#include <array>
#include <string>
#include <vector>

namespace printed {

struct IsoGroup {
  long weight;
  std::vector<std::string> monomials;
};

struct OrderingRow {
  std::array<long, 6> r;
  std::vector<IsoGroup> groups;
  bool corrected = false;  // groups replace a misprint in the source
};

inline const std::vector<OrderingRow>& ordering_rows() {
  static const std::vector<OrderingRow> rows = {
      {{1, 0, 0, 0, 0, -1},
       {{1, {"012", "013", "014", "023", "024", "034"}}}},
      {{1, 1, 0, 0, -1, -1},
       {{2, {"012", "013"}}, {1, {"014", "015", "023", "123"}}},
       true},
      {{1, 1, 0, 0, 0, -2},
       {{2, {"012", "013", "014"}},
        {1, {"023", "024", "034", "123", "124", "134"}}}},
      {{1, 1, 1, -1, -1, -1},
       {{3, {"012"}},
        {1, {"013", "014", "015", "023", "024", "025", "123", "124", "125"}}}},
      {{1, 1, 1, 1, -2, -2}, {{3, {"012", "013", "023", "123"}}}},
      {{2, 1, 0, 0, -1, -2},
       {{3, {"012", "013"}},
        {2, {"014", "023"}},
        {1, {"015", "024", "034", "123"}}}},
      {{2, 1, 1, -1, -1, -2},
       {{4, {"012"}},
        {2, {"013", "014", "023", "024"}},
        {1, {"015", "025", "123", "124"}}}},
      {{2, 1, 1, 0, -1, -3},
       {{4, {"012"}},
        {3, {"013", "023"}},
        {2, {"014", "024", "123"}},
        {1, {"034", "124"}}}},
      {{3, 1, 1, -1, -1, -3},
       {{5, {"012"}},
        {3, {"013", "014", "023", "024"}},
        {1, {"015", "025", "034", "123", "124"}}}},
      {{3, 1, 1, 0, -2, -3},
       {{5, {"012"}},
        {4, {"013", "023"}},
        {2, {"014", "024", "123"}},
        {1, {"015", "025", "034"}}}},
      {{3, 2, 1, -1, -2, -3},
       {{6, {"012"}},
        {4, {"013"}},
        {3, {"014", "023"}},
        {2, {"015", "024", "123"}},
        {1, {"025", "124"}}}},
      {{3, 2, 1, 0, -2, -4},
       {{6, {"012"}},
        {5, {"013"}},
        {4, {"023"}},
        {3, {"014", "123"}},
        {2, {"024"}},
        {1, {"015", "034", "124"}}}},
      {{3, 2, 1, 0, -1, -5},
       {{6, {"012"}},
        {5, {"013"}},
        {4, {"014", "023"}},
        {3, {"024", "123"}},
        {2, {"034", "124"}},
        {1, {"134"}}}},
      {{4, 1, 1, -2, -2, -2},
       {{6, {"012"}},
        {3, {"013", "014", "015", "023", "024", "025"}}}},
      {{4, 1, 1, 1, -2, -5},
       {{6, {"012", "013", "023"}},
        {3, {"014", "024", "034", "123"}}}},
      {{4, 2, 1, 0, -3, -4},
       {{7, {"012"}},
        {6, {"013"}},
        {5, {"023"}},
        {3, {"014", "123"}},
        {2, {"015", "024"}},
        {1, {"025", "034"}}}},
      {{4, 3, 1, 0, -3, -5},
       {{8, {"012"}},
        {7, {"013"}},
        {5, {"023"}},
        {4, {"014", "123"}},
        {2, {"015", "024"}},
        {1, {"034", "124"}}}},
      {{4, 4, 1, -2, -2, -5},
       {{9, {"012"}},
        {6, {"013", "014"}},
        {3, {"015", "023", "024", "123", "124"}}}},
      {{4, 4, 1, 1, -2, -8},
       {{9, {"012", "013"}},
        {6, {"014", "023", "123"}},
        {3, {"024", "034", "124", "134"}}}},
      {{5, -1, -1, -1, -1, -1},
       {{3, {"012", "013", "014", "015", "023", "024", "025", "034", "035",
             "045"}}}},
      {{5, 2, 2, -1, -1, -7},
       {{9, {"012"}},
        {6, {"013", "014", "023", "024"}},
        {3, {"034", "123", "124"}}}},
      {{5, 3, 1, -1, -3, -5},
       {{9, {"012"}},
        {7, {"013"}},
        {5, {"014", "023"}},
        {3, {"015", "024", "123"}},
        {1, {"025", "034", "124"}}}},
      {{5, 5, -1, -1, -1, -7},
       {{9, {"012", "013", "014"}},
        {3, {"015", "023", "024", "034", "123", "124", "134"}}}},
      {{5, 5, 2, -1, -4, -7},
       {{12, {"012"}},
        {9, {"013"}},
        {6, {"014", "023", "123"}},
        {3, {"015", "024", "124"}}}},
      {{7, 4, 1, -2, -2, -8},
       {{12, {"012"}},
        {9, {"013", "014"}},
        {6, {"023", "024"}},
        {3, {"015", "034", "123", "124"}}}},
      {{7, 4, 1, 1, -5, -8},
       {{12, {"012", "013"}},
        {9, {"023"}},
        {6, {"014", "123"}},
        {3, {"015", "024", "034"}}}},
      {{7, 4, 1, 1, -2, -11},
       {{12, {"012", "013"}},
        {9, {"014", "023"}},
        {6, {"024", "034", "123"}},
        {3, {"124", "134"}}}},
      {{7, 4, 4, -2, -5, -8},
       {{15, {"012"}},
        {9, {"013", "023"}},
        {6, {"014", "024", "123"}},
        {3, {"015", "025", "124"}}}},
      {{7, 7, 1, 1, -5, -11},
       {{15, {"012", "013"}},
        {9, {"014", "023", "123"}},
        {3, {"015", "024", "034", "124", "134"}}}},
      {{8, 5, 2, -1, -4, -10},
       {{15, {"012"}},
        {12, {"013"}},
        {9, {"014", "023"}},
        {6, {"024", "123"}},
        {3, {"015", "034", "124"}}}},
      {{10, 7, 1, -2, -5, -11},
       {{18, {"012"}},
        {15, {"013"}},
        {12, {"014"}},
        {9, {"023"}},
        {6, {"015", "024", "123"}},
        {3, {"034", "124"}}}},
      {{10, 7, 4, -2, -8, -11},
       {{21, {"012"}},
        {15, {"013"}},
        {12, {"023"}},
        {9, {"014", "123"}},
        {6, {"015", "024"}},
        {3, {"025", "124"}}}},
      {{11, 5, 2, -1, -4, -13},
       {{18, {"012"}},
        {15, {"013"}},
        {12, {"014", "023"}},
        {9, {"024"}},
        {6, {"034", "123"}},
        {3, {"015", "124"}}}},
      {{11, 5, 5, -1, -7, -13},
       {{21, {"012"}},
        {15, {"013", "023"}},
        {9, {"014", "024", "123"}},
        {3, {"015", "025", "034", "124"}}}},
      {{11, 8, 2, -1, -7, -13},
       {{21, {"012"}},
        {18, {"013"}},
        {12, {"014", "023"}},
        {9, {"123"}},
        {6, {"015", "024"}},
        {3, {"034", "124"}}}},
      {{11, 8, 5, -4, -7, -13},
       {{24, {"012"}},
        {15, {"013"}},
        {12, {"014", "023"}},
        {9, {"024", "123"}},
        {6, {"015", "124"}},
        {3, {"025"}}}},
      {{13, 7, 1, 1, -5, -17},
       {{21, {"012", "013"}},
        {15, {"014", "023"}},
        {9, {"024", "034", "123"}},
        {3, {"015", "124", "134"}}}},
      {{17, 11, 5, -1, -13, -19},
       {{33, {"012"}},
        {27, {"013"}},
        {21, {"023"}},
        {15, {"014", "123"}},
        {9, {"015", "024"}},
        {3, {"025", "034", "124"}}}},
      {{19, 13, 7, -5, -11, -23},
       {{39, {"012"}},
        {27, {"013"}},
        {21, {"014", "023"}},
        {15, {"024", "123"}},
        {9, {"015", "124"}},
        {3, {"025", "034"}}}},
  };
  return rows;
}

// F1 boundary group: published rays, closed under coordinate permutations.
inline const std::vector<std::array<long, 3>>& gf1_ray_orbits() {
  static const std::vector<std::array<long, 3>> base = {
      {1, 0, 0}, {1, 1, 0}, {2, 1, 1}, {1, 1, 1}};
  return base;
}

// D boundary group, coordinates (n, x1, x2, x3): the published list.
inline const std::vector<std::array<long, 4>>& gd_rays() {
  static const std::vector<std::array<long, 4>> v = {
      {1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 1},
      {0, 1, 0, 0}, {0, 0, 0, 1},  {0, 0, 1, 0}};
  return v;
}

// E1 boundary group: published rays as raw (m, r, s1, s2, s3) tuples; the
// working lattice uses (m, r, s1-s2, s2-s3).
inline const std::vector<std::array<long, 5>>& ge1_rays_raw() {
  static const std::vector<std::array<long, 5>> v = [] {
    std::vector<std::array<long, 5>> out = {
        {1, 0, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}};
    for (auto [m, r] : {std::pair<long, long>{0, 0}, {0, 3}, {1, 3}, {2, 3}})
      out.push_back({m, r, 6, 0, -6});
    out.push_back({0, 0, 12, -6, -6});
    for (long m : {1, 4, -2})
      for (long r : {0, 9}) out.push_back({m, r, 12, -6, -6});
    out.push_back({0, 0, 6, 6, -12});
    for (long m : {-1, -4, 2})
      for (long r : {0, 9}) out.push_back({m, r, 6, 6, -12});
    return out;
  }();
  return v;
}

// Frozen analysis of the honest-vs-published differences (see the sl6 dual
// pair below: the published tables miss one dual pair of rays; the D and E1
// published lists mix rays with direction classes / rank-2 flats).
inline const std::vector<std::array<long, 6>>& sl6_missing_dual_pair() {
  static const std::vector<std::array<long, 6>> v = {
      {17, 11, 5, -1, -7, -25}, {25, 7, 1, -5, -11, -17}};
  return v;
}

inline const std::vector<std::array<long, 4>>& gd_published_not_honest() {
  static const std::vector<std::array<long, 4>> v = {{0, 0, 0, 1},
                                                     {0, 1, 0, 0}};
  return v;
}

inline const std::vector<std::array<long, 4>>& ge1_published_not_honest() {
  static const std::vector<std::array<long, 4>> v = {{0, 0, 0, 1},
                                                     {0, 0, 1, 0}};
  return v;
}

inline const std::vector<std::array<long, 4>>& ge1_honest_not_published() {
  static const std::vector<std::array<long, 4>> v = {
      {-2, 3, 6, 6}, {-1, 3, 6, 6}, {0, 1, 1, 1}};
  return v;
}

// The eight 1-PS rows of the non-stable strata table with their printed
// mu(d, lambda) forms, rendered the way MuForm::str prints them.
struct MuRow {
  std::array<long, 6> r;
  std::string form;
};
inline const std::vector<MuRow>& strata_mu_rows() {
  static const std::vector<MuRow> rows = {
      {{5, -1, -1, -1, -1, -1}, "2(3d0 - 15)"},
      {{1, 1, 1, 1, 1, -5}, "2(3d0 - 15)"},
      {{1, 1, 1, -1, -1, -1}, "2(3d0 + d1 - 6)"},
      {{1, 0, 0, 0, 0, -1}, "2(d0 - 3)"},
      {{4, 1, 1, -2, -2, -2}, "2(6d0 + 3d1 - 12)"},
      {{2, 2, 2, -1, -1, -4}, "2(6d0 + 3d1 - 12)"},
      {{1, 1, 0, 0, -1, -1}, "2(2d0 + d1 - 4)"},
      {{2, 1, 0, 0, -1, -2}, "2(3d0 + 2d1 + d2 - 7)"},
  };
  return rows;
}

}  // namespace printed
