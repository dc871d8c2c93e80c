#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antipod/antipodality.hpp"

namespace antipod {

// Generator id plus its parameters, echoed into output files so every
// configuration is reproducible from its metadata.
struct ConstructionSpec {
  std::string name;
  std::map<std::string, std::string> params;
};

enum class BaseKind {
  Simplex,
  CrossPolytope,
  Cube,
  RegularNgon,
  Parallelogram,
  Trapezoid,
  GenericQuadrangle,
};

/// Standard bases with exact coordinates: simplex {0, e_1..e_d},
/// cross-polytope {+-e_i}, cube {0,1}^d, the three quadrangle kinds, and
/// rational near-regular n-gons (d = 2, n >= 3) with the parallel-side
/// structure pinned exactly: even n gives antipodally symmetric vertices
/// (n/2 parallel side pairs), odd n gives no parallel sides at all.
PointConfig base_polytope(BaseKind kind, int d, std::optional<int> n = {});

/// Iterated pyramid: embeds the base in a hyperplane and adds an apex
/// over the barycenter, `times` times; each step adds |base| strict pairs
/// and |base| antipodal pairs. Heights default to 1 per level.
PointConfig pyramid_over(const PointConfig& base, int times,
                         const std::vector<Rational>& heights = {});

/// Simplex plus k-1 points just outside distinct facet barycenters, the
/// offset halved until the count of strict pairs is exactly
/// d(d+1)/2 + k - 1 and the points are in strictly convex position.
PointConfig simplex_barycenter(int d, int k, const Rational& eps0,
                               unsigned long long seed);

/// {+-e_1, ..., +-e_k, e_{k+1}, ..., e_d}: the k-cross-polytope with a
/// (d-k)-fold pyramid on top; n = d + k and the strict-pair count is
/// k + (d+k)(d+k-1)/2 - k(2k-1).
PointConfig crosspoly_pyramid(int d, int k);

/// The odd-cardinality minimizers with sa = 2d: the polytope
/// conv{+-e_i, +-v}, v = (1,...,1)/(d-2), truncated by a parallel slab
/// whose lower hyperplane passes through a prescribed number of the -e_i,
/// realizing every vertex count n in [2d+1, 4d]. The half-difference body
/// keeps exactly 4d vertices, which is verified exactly along with
/// |vert P| = n and the strict-pair count 2d.
PointConfig truncated_crosspolytope(int d, int n, unsigned long long seed);

enum class BipyramidVariant { Seven, SearchMax };

/// Triangular bipyramids at the two extremes of their strict-pair range:
/// Seven builds a near-regular pyramid glued to a flat one (sa = 7, the
/// flat height halved until verified); SearchMax scans a seeded rational
/// parameter family until a bipyramid with all ten pairs strict is found.
PointConfig bipyramid_triangle(BipyramidVariant variant, const Rational& eps,
                               unsigned long long seed);

/// Seeded random triangular bipyramid in strictly convex position with no
/// four points coplanar; its strict-pair count always lies in [7, 10].
PointConfig random_bipyramid(unsigned long long seed);

/// 4^k pairwise strictly antipodal points in R^{3k}: points are picked on
/// three strictly convex rational arcs bulging outward over three
/// mutually skew cube edges (each arc in the plane of its edge and the
/// origin) plus one remaining cube vertex, and combined blockwise so that
/// arc points are never reused within a block. pad in {0,1,2} stacks
/// pyramid apexes for ambient dimensions 3k+1 and 3k+2. Every pair of the
/// result is verified strictly antipodal by exact LP before returning.
PointConfig arcs_product(int k, int pad, unsigned long long seed);

/// Builds any construction from its metadata; throws std::invalid_argument
/// for unknown names, missing parameters, or out-of-range values.
PointConfig construct(const ConstructionSpec& spec);

/// Expected strict-pair count of crosspoly_pyramid(d, k).
long long crosspoly_pyramid_sa(int d, int k);

}  // namespace antipod
