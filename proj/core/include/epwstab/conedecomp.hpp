#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epwstab/oneps.hpp"

namespace epws {

// Integer vectors model linear functions / points on the working parameter
// lattice of a torus (coordinates chosen so the Weyl chamber is
// "listed coordinates >= 0, the rest free").
using IVec = std::vector<long>;

struct TorusActionSpec {
  std::string name;
  std::size_t n = 0;               // working lattice dimension
  std::vector<bool> constrained;   // chamber: coordinate >= 0 where true
  // characters of each irreducible factor, as linear functions on the lattice
  std::vector<std::vector<IVec>> factors;
  // complete list of ordering-hyperplane functions, for groups where the
  // source supplies the pairwise differences directly
  std::vector<IVec> explicit_walls;
  // map from working coordinates to the 6 SL(6) weights (empty if not SL(6))
  std::vector<IVec> to_sl6_weights;
};

IVec primitive(IVec v);                 // divide by gcd; zero stays zero
IVec wall_canonical(IVec v);            // primitive, first nonzero > 0
// primitive representatives lying in the chamber (both if the constrained
// part vanishes); empty if neither orientation is in C
std::vector<IVec> chamber_canonical(IVec v, const std::vector<bool>& constrained);

// Every pairwise in-factor character difference (plus any explicit walls),
// primitive and deduplicated up to sign. No chamber filtering.
std::vector<IVec> all_wall_functions(const TorusActionSpec& spec);
// The retained normals actually used for enumeration: chamber coordinate
// functions, every wall with a nonzero free-coordinate coefficient, and every
// wall with mixed signs on the constrained coordinates. Walls with
// same-signed constrained support and no free part vanish on C only where
// coordinate walls do, so dropping them loses no rays.
std::vector<IVec> ordering_hyperplanes(const TorusActionSpec& spec);

// All primitive chamber vectors whose span is the intersection of ordering
// hyperplanes of corank 1: enumerate (n-1)-subsets of the retained normals,
// keep 1-dimensional kernels, then re-verify each ray against the full wall
// set. Canonically sorted.
std::vector<IVec> ordering_rays(const TorusActionSpec& spec);

struct ConeHypothesesReport {
  bool faces_are_hyperplanes = false;   // each chamber face spans a wall
  std::vector<std::size_t> unmatched_faces;
  std::size_t common_intersection_dim = 0;  // dim of the kernel of all walls
  bool ok() const { return faces_are_hyperplanes && common_intersection_dim == 0; }
};
ConeHypothesesReport verify_cone_hypotheses(const TorusActionSpec& spec);

std::vector<std::string> builtin_spec_names();
TorusActionSpec builtin_spec(const std::string& name);

// SL(6) specifics: working x-coordinates <-> integer weight vectors r.
IVec x_to_sl6(const TorusActionSpec& spec, const IVec& x);  // primitive r
OnePS ray_to_oneps(const TorusActionSpec& spec, const IVec& ray);
IVec sl6_dual(const IVec& r);  // r -> (-r5, ..., -r0)

// Scan all sl6 ordering rays; returns the ray maximizing mu(A, .) in the
// standard basis, with the value. A mu >= 0 certifies non-stability for this
// torus only.
std::pair<IVec, long> worst_ordering_ray(const Lagrangian& a,
                                         const TorusActionSpec& spec);

}  // namespace epws
