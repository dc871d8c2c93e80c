#pragma once

#include "antipod/antipodality.hpp"

namespace antipod {

/// Seeded random configuration in strictly convex position: rational
/// points on the unit sphere via the stereographic parametrization
/// p = (2a, 1 - |a|^2) / (1 + |a|^2). Distinct unit vectors are always in
/// strictly convex position (each is exposed by itself as a direction),
/// so no rejection loop is needed beyond the full-dimension check.
PointConfig random_sphere_config(int dim, int n, unsigned long long seed);

/// Seeded random strictly convex polygon on the rational unit circle.
/// With force_symmetric (n even) the vertices come in antipodal pairs, so
/// opposite sides are exactly parallel.
PointConfig random_convex_polygon(int n, unsigned long long seed,
                                  bool force_symmetric = false);

}  // namespace antipod
