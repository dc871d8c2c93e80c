#include "antipod/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace antipod {

namespace {

Point zero(int d) { return Point(d, Rational(0)); }

Point unit(int d, int i, int sign = 1) {
  Point p = zero(d);
  p[i] = sign;
  return p;
}

Point centroid_of(const std::vector<Point>& pts) {
  Point c = zero(static_cast<int>(pts[0].size()));
  for (const auto& p : pts) c = add(c, p);
  return scale(Rational(1, static_cast<int>(pts.size())), c);
}

// Clears denominators by a common factor; counts and pair sets are
// invariant under scaling, and integer coordinates keep the exact LP
// pivots cheap.
std::vector<Point> cleared_denominators(std::vector<Point> pts) {
  Integer common = 1;
  for (const auto& p : pts) {
    for (const auto& c : p) common = lcm(common, denominator(c));
  }
  if (common == 1) return pts;
  const Rational f(common);
  for (auto& p : pts) {
    for (auto& c : p) c *= f;
  }
  return pts;
}

// Both oracles must agree with the expected strict-pair count before any
// generator hands out a configuration.
void verify_strict_count(const PointConfig& config, long long expected,
                         const char* what) {
  const long long by_lp = count_pairs(config, PairMode::Strict).count;
  if (by_lp != expected) {
    throw std::runtime_error(std::string(what) +
                             ": LP oracle count mismatch, got " +
                             std::to_string(by_lp) + ", expected " +
                             std::to_string(expected));
  }
  const long long by_db = difference_body_counts(config).strict;
  if (by_db != expected) {
    throw std::runtime_error(std::string(what) +
                             ": difference-body count mismatch, got " +
                             std::to_string(by_db) + ", expected " +
                             std::to_string(expected));
  }
}

void require_strictly_convex(const PointConfig& config, const char* what) {
  if (position_class(config) != PositionClass::StrictlyConvex) {
    throw std::runtime_error(std::string(what) +
                             ": output is not in strictly convex position");
  }
}

PointConfig ngon(int n, unsigned long long seed) {
  const bool even = n % 2 == 0;
  // Tangent half-angle snapshots of the regular n-gon; the parallel-side
  // pattern is enforced exactly and re-checked after snapping.
  for (int attempt = 0; attempt < 40; ++attempt) {
    const Integer denom = 997 + 256 * attempt + static_cast<long>(seed % 97);
    std::vector<Point> pts;
    const int draws = even ? n / 2 : n;
    for (int i = 0; i < draws; ++i) {
      const double theta = even ? M_PI * (2 * i + 1) / n
                                : 2.0 * M_PI * i / n + M_PI / (2 * n) - M_PI;
      const Rational t = snap_to_rational(std::tan(theta / 2), denom);
      const Rational dd = 1 + t * t;
      pts.push_back({(1 - t * t) / dd, 2 * t / dd});
    }
    if (even) {
      const int half = static_cast<int>(pts.size());
      for (int i = 0; i < half; ++i) {
        pts.push_back({-pts[i][0], -pts[i][1]});
      }
    }
    bool distinct = true;
    for (std::size_t i = 0; i < pts.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (pts[i] == pts[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (!distinct) continue;
    PointConfig config(2, pts, "ngon-" + std::to_string(n));
    if (parallel_side_pairs(config) != (even ? n / 2 : 0)) continue;
    return config;
  }
  throw std::runtime_error("ngon: no valid rational realization found");
}

}  // namespace

PointConfig base_polytope(BaseKind kind, int d, std::optional<int> n) {
  switch (kind) {
    case BaseKind::Simplex: {
      if (d < 1) throw std::invalid_argument("simplex needs d >= 1");
      std::vector<Point> pts{zero(d)};
      for (int i = 0; i < d; ++i) pts.push_back(unit(d, i));
      PointConfig config(d, std::move(pts), "simplex-" + std::to_string(d));
      verify_strict_count(config, static_cast<long long>(d) * (d + 1) / 2,
                          "simplex");
      return config;
    }
    case BaseKind::CrossPolytope: {
      if (d < 1) throw std::invalid_argument("cross-polytope needs d >= 1");
      std::vector<Point> pts;
      for (int i = 0; i < d; ++i) {
        pts.push_back(unit(d, i, 1));
        pts.push_back(unit(d, i, -1));
      }
      PointConfig config(d, std::move(pts), "cross-" + std::to_string(d));
      verify_strict_count(config, d, "cross-polytope");
      return config;
    }
    case BaseKind::Cube: {
      // Verification runs both oracles over all C(2^d, 2) pairs, which
      // stops being desk-scale past d = 5.
      if (d < 1 || d > 5) {
        throw std::invalid_argument("cube supported for 1 <= d <= 5");
      }
      std::vector<Point> pts;
      for (int mask = 0; mask < (1 << d); ++mask) {
        Point p(d);
        for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1;
        pts.push_back(std::move(p));
      }
      PointConfig config(d, std::move(pts), "cube-" + std::to_string(d));
      verify_strict_count(config, 1LL << (d - 1), "cube");
      return config;
    }
    case BaseKind::RegularNgon: {
      if (d != 2 || !n || *n < 3) {
        throw std::invalid_argument("regular_ngon needs d = 2 and n >= 3");
      }
      auto config = ngon(*n, 1);
      verify_strict_count(config,
                          *n - (*n % 2 == 0 ? *n / 2 : 0), "regular_ngon");
      return config;
    }
    case BaseKind::Parallelogram: {
      if (d != 2) throw std::invalid_argument("parallelogram needs d = 2");
      PointConfig config(
          2, {{Rational(0), Rational(0)}, {Rational(2), Rational(0)},
              {Rational(3), Rational(1)}, {Rational(1), Rational(1)}},
          "parallelogram");
      verify_strict_count(config, 2, "parallelogram");
      return config;
    }
    case BaseKind::Trapezoid: {
      if (d != 2) throw std::invalid_argument("trapezoid needs d = 2");
      PointConfig config(
          2, {{Rational(0), Rational(0)}, {Rational(3), Rational(0)},
              {Rational(2), Rational(1)}, {Rational(1), Rational(1)}},
          "trapezoid");
      verify_strict_count(config, 3, "trapezoid");
      return config;
    }
    case BaseKind::GenericQuadrangle: {
      if (d != 2) throw std::invalid_argument("quadrangle needs d = 2");
      PointConfig config(
          2, {{Rational(0), Rational(0)}, {Rational(3), Rational(0)},
              {Rational(4), Rational(2)}, {Rational(1), Rational(3)}},
          "generic-quadrangle");
      verify_strict_count(config, 4, "generic_quadrangle");
      return config;
    }
  }
  throw std::invalid_argument("unknown base kind");
}

PointConfig pyramid_over(const PointConfig& base, int times,
                         const std::vector<Rational>& heights) {
  if (times < 1) throw std::invalid_argument("times must be >= 1");
  if (!heights.empty() && static_cast<int>(heights.size()) != times) {
    throw std::invalid_argument("need one height per pyramid step");
  }
  if (position_class(base) != PositionClass::StrictlyConvex) {
    throw std::invalid_argument("pyramid base must be strictly convex");
  }

  const PointConfig flat =
      base.full_dimensional() ? base : reembed_in_affine_hull(base);
  long long expected = count_pairs(flat, PairMode::Strict).count;

  std::vector<Point> pts = flat.points;
  int dim = flat.dim;
  for (int step = 0; step < times; ++step) {
    const Rational h = heights.empty() ? Rational(1) : heights[step];
    if (h == 0) throw std::invalid_argument("pyramid height must be nonzero");
    // Any apex off the hyperplane works, so round the centroid to small
    // denominators to keep downstream LP arithmetic light.
    Point apex = centroid_of(pts);
    for (auto& c : apex) c = snap_to_rational(c, Integer(16));
    apex.push_back(h);
    for (auto& p : pts) p.push_back(Rational(0));
    expected += static_cast<long long>(pts.size());
    pts.push_back(std::move(apex));
    ++dim;
  }

  PointConfig config(dim, std::move(pts),
                     base.label + "+pyr" + std::to_string(times));
  require_strictly_convex(config, "pyramid_over");
  verify_strict_count(config, expected, "pyramid_over");
  return config;
}

PointConfig simplex_barycenter(int d, int k, const Rational& eps0,
                               unsigned long long seed) {
  if (d < 2 || k < 1 || k > d + 1) {
    throw std::invalid_argument("simplex_barycenter needs d >= 2, 1 <= k <= d+1");
  }
  if (eps0 <= 0) throw std::invalid_argument("eps0 must be positive");

  std::vector<Point> simplex{zero(d)};
  for (int i = 0; i < d; ++i) simplex.push_back(unit(d, i));
  const Point center = centroid_of(simplex);

  std::vector<int> facets(d + 1);
  std::iota(facets.begin(), facets.end(), 0);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  std::shuffle(facets.begin(), facets.end(), rng);
  facets.resize(k - 1);

  const long long target = static_cast<long long>(d) * (d + 1) / 2 + k - 1;
  Rational eps = eps0;
  for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
    std::vector<Point> pts = simplex;
    for (int f : facets) {
      // Barycenter of the facet opposite vertex f, pushed outward.
      Point b = zero(d);
      for (int v = 0; v <= d; ++v) {
        if (v != f) b = add(b, simplex[v]);
      }
      b = scale(Rational(1, d), b);
      pts.push_back(add(b, scale(eps, sub(b, center))));
    }
    PointConfig config(d, pts,
                       "simplex-barycenter-" + std::to_string(d) + "-" +
                           std::to_string(k));
    if (position_class(config) != PositionClass::StrictlyConvex) continue;
    if (count_pairs(config, PairMode::Strict).count != target) continue;
    if (difference_body_counts(config).strict != target) continue;
    return config;
  }
  throw std::runtime_error("simplex_barycenter: tuning cap exceeded");
}

long long crosspoly_pyramid_sa(int d, int k) {
  return k + static_cast<long long>(d + k) * (d + k - 1) / 2 -
         static_cast<long long>(k) * (2 * k - 1);
}

PointConfig crosspoly_pyramid(int d, int k) {
  if (d < 1 || k < 1 || k > d) {
    throw std::invalid_argument("crosspoly_pyramid needs 1 <= k <= d");
  }
  std::vector<Point> pts;
  for (int i = 0; i < k; ++i) {
    pts.push_back(unit(d, i, 1));
    pts.push_back(unit(d, i, -1));
  }
  for (int i = k; i < d; ++i) pts.push_back(unit(d, i, 1));
  PointConfig config(d, std::move(pts),
                     "crosspoly-pyramid-" + std::to_string(d) + "-" +
                         std::to_string(k));
  require_strictly_convex(config, "crosspoly_pyramid");
  verify_strict_count(config, crosspoly_pyramid_sa(d, k), "crosspoly_pyramid");
  return config;
}

PointConfig truncated_crosspolytope(int d, int n, unsigned long long seed) {
  if (d < 3) throw std::invalid_argument("truncated_crosspolytope needs d >= 3");
  if (n < 2 * d + 1 || n > 4 * d) {
    throw std::invalid_argument("n must lie in [2d+1, 4d]");
  }

  // Lower hyperplane through exactly `on_lower` of the -e_i; the upper
  // one either passes through the apex v (keeping it, low range of n) or
  // cuts all upper edges (high range). Both are normal to the same u.
  const bool keep_apex = n <= 3 * d + 1;
  const int on_lower = keep_apex ? 3 * d + 1 - n : 4 * d - n;

  const Rational one(1);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 3);
  const int jitter = 1 + static_cast<int>(rng() % 7);

  Rational t(1, 8 * d * (jitter + 1));
  for (int attempt = 0; attempt < 40; ++attempt, t /= 2) {
    Point u(d, one);
    for (int j = on_lower; j < d; ++j) {
      u[j] = one - t * (j - on_lower + 1);
    }
    Rational usum = 0;
    for (const auto& c : u) usum += c;
    const Rational v_level = usum / (d - 2);  // <u, v>
    if (v_level <= 1) continue;
    Rational u_max = u[0];
    for (const auto& c : u) {
      if (c > u_max) u_max = c;
    }

    const Point v(d, Rational(1, d - 2));
    const Rational upper = keep_apex ? v_level : (u_max + v_level) / 2;
    const Rational lower =
        on_lower > 0 ? Rational(-1) : -(u_max + v_level) / 2;

    std::vector<Point> pts;
    for (int i = 0; i < d; ++i) pts.push_back(unit(d, i, 1));
    for (int i = 0; i < d; ++i) pts.push_back(unit(d, i, -1));
    if (keep_apex) {
      pts.push_back(v);
    } else {
      for (int i = 0; i < d; ++i) {
        // Cut of edge (e_i, v) at level `upper`.
        const Rational lam = (upper - u[i]) / (v_level - u[i]);
        if (lam <= 0 || lam >= 1) {
          pts.clear();
          break;
        }
        pts.push_back(add(unit(d, i, 1), scale(lam, sub(v, unit(d, i, 1)))));
      }
      if (pts.empty()) continue;
    }
    bool bad = false;
    for (int j = on_lower; j < d; ++j) {
      // Cut of edge (-e_j, -v) at level `lower`.
      const Rational at_e = -u[j];
      const Rational at_v = -v_level;
      const Rational lam = (lower - at_e) / (at_v - at_e);
      if (lam <= 0 || lam >= 1) {
        bad = true;
        break;
      }
      pts.push_back(
          add(unit(d, j, -1), scale(lam, sub(scale(-1, v), unit(d, j, -1)))));
    }
    if (bad) continue;
    if (static_cast<int>(pts.size()) != n) continue;

    PointConfig config(d, pts,
                       "truncated-cross-" + std::to_string(d) + "-" +
                           std::to_string(n));
    if (static_cast<int>(hull_vertices(config.points).size()) != n) continue;
    if (position_class(config) != PositionClass::StrictlyConvex) continue;
    const auto db = difference_body_counts(config);
    if (db.db_vertices != 4LL * d || db.strict != 2LL * d) continue;
    if (count_pairs(config, PairMode::Strict).count != 2 * d) continue;
    return config;
  }
  throw std::runtime_error("truncated_crosspolytope: tuning cap exceeded");
}

PointConfig bipyramid_triangle(BipyramidVariant variant, const Rational& eps,
                               unsigned long long seed) {
  if (variant == BipyramidVariant::Seven) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    // Near-regular triangle; one apex at near-tetrahedral height, the
    // other pushed just below the base plane.
    const std::vector<Point> base = {
        {Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(0), Rational(0)},
        {Rational(1, 2), Rational(433, 500), Rational(0)}};
    Point g = centroid_of(base);
    Rational flat = eps;
    for (int attempt = 0; attempt < 40; ++attempt, flat /= 2) {
      std::vector<Point> pts = base;
      Point top = g;
      top[2] = Rational(49, 60);
      Point bottom = g;
      bottom[2] = -flat;
      pts.push_back(top);
      pts.push_back(bottom);
      PointConfig config(3, pts, "bipyramid-7");
      if (position_class(config) != PositionClass::StrictlyConvex) continue;
      if (count_pairs(config, PairMode::Strict).count != 7) continue;
      if (difference_body_counts(config).strict != 7) continue;
      return config;
    }
    throw std::runtime_error("bipyramid_triangle: tuning cap exceeded");
  }

  // SearchMax: scan a seeded rational family of bipyramids
  //   (+-1, 0, 0), (0, +-1, t), (0, 0, s)
  // until all ten pairs verify strictly antipodal.
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 5);
  std::vector<std::pair<int, int>> grid;
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= 8; ++b) grid.emplace_back(a, b);
  }
  std::shuffle(grid.begin(), grid.end(), rng);
  for (const auto& [a, b] : grid) {
    const Rational t(a, 8);
    const Rational s = t + 1 + Rational(b, 8);
    const std::vector<Point> pts = {
        {Rational(1), Rational(0), Rational(0)},
        {Rational(-1), Rational(0), Rational(0)},
        {Rational(0), Rational(1), t},
        {Rational(0), Rational(-1), t},
        {Rational(0), Rational(0), s}};
    PointConfig config(3, pts, "bipyramid-10");
    if (position_class(config) != PositionClass::StrictlyConvex) continue;
    if (count_pairs(config, PairMode::Strict).count != 10) continue;
    if (difference_body_counts(config).strict != 10) continue;
    return config;
  }
  throw std::runtime_error("bipyramid_triangle: search cap exceeded");
}

PointConfig random_bipyramid(unsigned long long seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 7);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::uniform_int_distribution<int> height(1, 8);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Point> pts = {
        {Rational(coord(rng)), Rational(coord(rng)), Rational(0)},
        {Rational(coord(rng)), Rational(coord(rng)), Rational(0)},
        {Rational(coord(rng)), Rational(coord(rng)), Rational(0)}};
    if (affine_dimension(pts) != 2) continue;
    const Point g = centroid_of(pts);
    Point top{g[0] + Rational(coord(rng), 4), g[1] + Rational(coord(rng), 4),
              Rational(height(rng), 2)};
    Point bottom{g[0] + Rational(coord(rng), 4),
                 g[1] + Rational(coord(rng), 4), -Rational(height(rng), 3)};
    pts.push_back(top);
    pts.push_back(bottom);

    bool degenerate = false;
    for (int skip = 0; skip < 5 && !degenerate; ++skip) {
      std::vector<Point> four;
      for (int i = 0; i < 5; ++i) {
        if (i != skip) four.push_back(pts[i]);
      }
      if (affine_dimension(four) != 3) degenerate = true;
    }
    if (degenerate) continue;
    PointConfig config(3, pts, "random-bipyramid");
    if (position_class(config) != PositionClass::StrictlyConvex) continue;
    return config;
  }
  throw std::runtime_error("random_bipyramid: no candidate found");
}

namespace {

// Rational points on the outward-bulging strictly convex arc over a skew
// cube edge, in the coordinates (a, b) of the plane spanned by the edge
// midpoint direction and the edge itself: the parabola
// a = 1 + (1 - b^2)/m through the edge endpoints (1, +-1). The samples
// share one small denominator (circle parametrizations force four nearly
// coprime denominators whose lcm wrecks the exact LP pivots), and sit in
// the middle 1/shrink portion of the arc: exposing an arc point must
// keep the free cube corner strictly inside the slab, and the room for
// that tilt scales with the sample spread, not with the curvature.
std::vector<std::pair<Rational, Rational>> arc_samples(int m, int count,
                                                       long long shrink,
                                                       int spread_prime) {
  std::vector<std::pair<Rational, Rational>> samples;
  for (int j = 0; j < count; ++j) {
    const Rational bj((2LL * j - (count - 1)) * spread_prime + 1,
                      2LL * count * shrink * spread_prime);
    samples.emplace_back(1 + (1 - bj * bj) / m, bj);
  }
  return samples;
}

}  // namespace

PointConfig arcs_product(int k, int pad, unsigned long long seed) {
  if (k < 1) throw std::invalid_argument("arcs_product needs k >= 1");
  if (pad < 0 || pad > 2) throw std::invalid_argument("pad must be 0, 1 or 2");
  if (k > 2) {
    throw std::invalid_argument(
        "arcs_product verification is supported for k <= 2");
  }

  const int per_arc = k == 1 ? 1 : 4;  // 4^{k-1} points needed per arc
  const int prime = 3 + static_cast<int>(seed % 5) * 2;

  // Plane frames for three mutually skew edges of [-1,1]^3, each written
  // as span{outward, along}: edge = {outward + b*along, |b| <= 1}.
  const std::vector<std::pair<Point, Point>> frames = {
      {{Rational(1), Rational(0), Rational(-1)}, {Rational(0), Rational(1), Rational(0)}},
      {{Rational(-1), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)}},
      {{Rational(0), Rational(-1), Rational(1)}, {Rational(1), Rational(0), Rational(0)}}};
  const Point corner{Rational(1), Rational(1), Rational(1)};

  const int m = 6;
  for (long long shrink = 4; shrink <= 4096; shrink *= 4) {
    // sites[s] for s in 0..2 are arc points; sites[3] = {corner}.
    std::vector<std::vector<Point>> sites(4);
    std::vector<Point> flat;
    for (int s = 0; s < 3; ++s) {
      for (const auto& [a, b] : arc_samples(m, per_arc, shrink, prime)) {
        flat.push_back(
            add(scale(a, frames[s].first), scale(b, frames[s].second)));
      }
    }
    flat.push_back(corner);
    flat = cleared_denominators(std::move(flat));
    for (int s = 0; s < 3; ++s) {
      sites[s].assign(flat.begin() + s * per_arc,
                      flat.begin() + (s + 1) * per_arc);
    }
    sites[3].push_back(flat.back());

    // Gadget check: every cross-site pair strictly antipodal in R^3.
    std::vector<Point> gadget;
    std::vector<int> site_of;
    for (int s = 0; s < 4; ++s) {
      for (const auto& p : sites[s]) {
        gadget.push_back(p);
        site_of.push_back(s);
      }
    }
    PointConfig gcfg(3, gadget, "arc-gadget");
    bool ok = true;
    for (std::size_t i = 0; i < gadget.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < gadget.size(); ++j) {
        if (site_of[i] == site_of[j]) continue;
        if (!pair_test(gcfg, static_cast<int>(i), static_cast<int>(j),
                       PairMode::Strict)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    // Blockwise product: coordinate l of the multi-index selects the site
    // in block l; ranks over the remaining coordinates keep arc points
    // distinct within each (block, arc).
    int count = 1;
    for (int i = 0; i < k; ++i) count *= 4;
    std::vector<Point> product;
    for (int code = 0; code < count; ++code) {
      Point x;
      x.reserve(3 * k);
      int rest = code;
      for (int block = 0; block < k; ++block) {
        const int site = rest % 4;
        rest /= 4;
        int rank = 0;
        {
          int mul = 1;
          int r2 = code;
          for (int b2 = 0; b2 < k; ++b2) {
            const int digit = r2 % 4;
            r2 /= 4;
            if (b2 == block) continue;
            rank += digit * mul;
            mul *= 4;
          }
        }
        const Point& p = site == 3 ? sites[3][0] : sites[site][rank % per_arc];
        for (const auto& c : p) x.push_back(c);
      }
      product.push_back(std::move(x));
    }

    PointConfig config(3 * k, product, "arcs-product-" + std::to_string(k));
    const long long all_pairs =
        static_cast<long long>(count) * (count - 1) / 2;
    if (count_pairs(config, PairMode::Strict).count != all_pairs) continue;
    if (difference_body_counts(config).strict != all_pairs) continue;
    require_strictly_convex(config, "arcs_product");

    // pyramid_over re-verifies under both oracles; its expected count is
    // all pairs of the padded set since the base already has all pairs.
    if (pad > 0) config = pyramid_over(config, pad);
    return config;
  }
  throw std::runtime_error("arcs_product: arc flattening cap exceeded");
}

namespace {

int param_int(const ConstructionSpec& spec, const std::string& key,
              std::optional<int> fallback = {}) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    if (fallback) return *fallback;
    throw std::invalid_argument("missing parameter '" + key + "'");
  }
  try {
    return std::stoi(it->second);
  } catch (...) {
    throw std::invalid_argument("bad integer for '" + key + "'");
  }
}

Rational param_rational(const ConstructionSpec& spec, const std::string& key,
                        const Rational& fallback) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  return parse_rational(it->second);
}

unsigned long long param_seed(const ConstructionSpec& spec) {
  auto it = spec.params.find("seed");
  if (it == spec.params.end()) return 1;
  return std::stoull(it->second);
}

BaseKind parse_kind(const std::string& name) {
  if (name == "simplex") return BaseKind::Simplex;
  if (name == "cross_polytope") return BaseKind::CrossPolytope;
  if (name == "cube") return BaseKind::Cube;
  if (name == "regular_ngon") return BaseKind::RegularNgon;
  if (name == "parallelogram") return BaseKind::Parallelogram;
  if (name == "trapezoid") return BaseKind::Trapezoid;
  if (name == "generic_quadrangle") return BaseKind::GenericQuadrangle;
  throw std::invalid_argument("unknown base kind '" + name + "'");
}

}  // namespace

PointConfig construct(const ConstructionSpec& spec) {
  const auto& name = spec.name;
  if (name == "base_polytope") {
    auto it = spec.params.find("kind");
    if (it == spec.params.end()) {
      throw std::invalid_argument("base_polytope needs kind=...");
    }
    const BaseKind kind = parse_kind(it->second);
    std::optional<int> n;
    if (spec.params.count("n")) n = param_int(spec, "n");
    const int d = param_int(spec, "d", kind == BaseKind::RegularNgon ||
                                               kind == BaseKind::Parallelogram ||
                                               kind == BaseKind::Trapezoid ||
                                               kind == BaseKind::GenericQuadrangle
                                           ? std::optional<int>(2)
                                           : std::nullopt);
    return base_polytope(kind, d, n);
  }
  if (name == "pyramid_over") {
    auto it = spec.params.find("base");
    if (it == spec.params.end()) {
      throw std::invalid_argument("pyramid_over needs base=<kind>");
    }
    ConstructionSpec base_spec{"base_polytope", spec.params};
    base_spec.params["kind"] = it->second;
    const PointConfig base = construct(base_spec);
    return pyramid_over(base, param_int(spec, "times", 1));
  }
  if (name == "simplex_barycenter") {
    return simplex_barycenter(param_int(spec, "d"), param_int(spec, "k"),
                              param_rational(spec, "eps0", Rational(1, 8)),
                              param_seed(spec));
  }
  if (name == "crosspoly_pyramid") {
    return crosspoly_pyramid(param_int(spec, "d"), param_int(spec, "k"));
  }
  if (name == "truncated_crosspolytope") {
    return truncated_crosspolytope(param_int(spec, "d"), param_int(spec, "n"),
                                   param_seed(spec));
  }
  if (name == "bipyramid_triangle") {
    auto it = spec.params.find("variant");
    const std::string variant = it == spec.params.end() ? "seven" : it->second;
    if (variant == "seven") {
      return bipyramid_triangle(BipyramidVariant::Seven,
                                param_rational(spec, "eps", Rational(1, 10)),
                                param_seed(spec));
    }
    if (variant == "search_max") {
      return bipyramid_triangle(BipyramidVariant::SearchMax, Rational(1, 10),
                                param_seed(spec));
    }
    throw std::invalid_argument("unknown bipyramid variant '" + variant + "'");
  }
  if (name == "arcs_product") {
    return arcs_product(param_int(spec, "k"), param_int(spec, "pad", 0),
                        param_seed(spec));
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace antipod
