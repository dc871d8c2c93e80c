#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antipod/geom_core.hpp"

namespace antipod {

// A labeled finite set of distinct rational points in R^dim. The counting
// operations additionally require the affine hull to be all of R^dim; a
// degenerate configuration can be re-embedded first (see
// reembed_in_affine_hull).
struct PointConfig {
  int dim = 0;
  std::vector<Point> points;
  std::string label;

  PointConfig() = default;
  PointConfig(int dim, std::vector<Point> points, std::string label = {});

  int size() const { return static_cast<int>(points.size()); }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim; }

 private:
  int affine_dim_ = -1;
};

enum class PairMode { Antipodal, Strict };

// A direction u with the two supporting levels hi > lo witnessing a pair:
// <u, x_i> = hi, <u, x_j> = lo, and every x in X has lo <= <u, x> <= hi,
// with both inequalities strict for x outside the pair in strict mode.
struct Certificate {
  Point direction;
  Rational hi;
  Rational lo;
};

struct PairEntry {
  int i = 0;  // i < j
  int j = 0;
  Certificate certificate;
};

struct PairReport {
  PairMode mode = PairMode::Antipodal;
  int count = 0;
  std::vector<PairEntry> pairs;  // lexicographic by (i, j)
};

enum class PositionClass { StrictlyConvex, ConvexNotStrict, NotConvex };

/// Decides whether (points[i], points[j]) is an antipodal (or strictly
/// antipodal) pair of the configuration, by exact LP feasibility in the
/// direction u. Strict inequalities are scale-normalized to ">= 1".
/// Throws when i == j or when the configuration is not full-dimensional.
std::optional<Certificate> pair_test(const PointConfig& config, int i, int j,
                                     PairMode mode);

/// True iff the certificate exactly validates the pair in the given mode.
bool certificate_valid(const PointConfig& config, int i, int j, PairMode mode,
                       const Certificate& certificate);

/// Exhaustive pair_test over all C(n,2) pairs, in lexicographic order.
/// The pair loop runs on worker threads with a deterministic merge.
PairReport count_pairs(const PointConfig& config, PairMode mode);

struct DifferenceBodyCounts {
  long long antipodal = 0;       // pairs with x_i - x_j on bd conv(D)
  long long strict = 0;          // |vert conv(D)| / 2
  long long db_vertices = 0;     // |vert(P - P)|
};

/// The independent route to the same counts, through the difference set
/// D = {x_i - x_j : i != j}: strictly antipodal pairs correspond to
/// vertex pairs of P - P (so sa = |vert(P-P)|/2), and antipodal pairs to
/// differences on the boundary of P - P. Requires a full-dimensional
/// configuration (otherwise the boundary criterion is meaningless).
DifferenceBodyCounts difference_body_counts(const PointConfig& config);

/// Strictly convex / convex-but-not-strict / not convex, decided exactly.
PositionClass position_class(const PointConfig& config);

/// Lexicographically ordered index pairs that pair_test accepts; the
/// cheap entry point when certificates are not needed.
std::vector<std::pair<int, int>> strict_pairs(const PointConfig& config);

struct VertexProjection {
  PointConfig image;                    // vertices of the projected hull
  std::vector<std::vector<int>> fibers; // original indices per image point
  std::vector<int> image_index;         // -1 for originals that project
                                        // into the hull or onto non-vertices
};

/// Projects the configuration along a generic rational direction through
/// the given hull vertex and an interior point, into dimension dim-1. The
/// direction is perturbed deterministically from the seed until the image
/// of the apex lies in the relative interior of the projected hull
/// (verified exactly); the image keeps the hull vertices only, which is
/// what the strict-pair projection arguments consume. Throws if apex is
/// not a vertex or genericity is not reached within 64 retries.
VertexProjection project_at_vertex(const PointConfig& config, int apex,
                                   unsigned long long seed);

struct CoordinateProjection {
  PointConfig image;                    // distinct projected points, dim-1
  std::vector<std::vector<int>> fibers; // original indices per image point,
                                        // sorted by descending last coord
};

/// Drops the last coordinate and groups the fibers; the lifting lemma for
/// strict pairs is stated (and tested) against exactly this map.
CoordinateProjection drop_last_coordinate(const PointConfig& config);

/// Re-embeds a degenerate configuration into R^k, k = affine dimension,
/// by exact coordinates over an affine basis chosen from the points.
PointConfig reembed_in_affine_hull(const PointConfig& config);

/// Number of unordered side pairs of a strictly convex polygon (dim 2)
/// that are parallel, computed exactly from the hull cycle.
int parallel_side_pairs(const PointConfig& config);

/// Vertex indices of a strictly convex planar configuration in convex
/// cycle order (counterclockwise), exact.
std::vector<int> convex_cycle_order(const PointConfig& config);

}  // namespace antipod
