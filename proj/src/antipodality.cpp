#include "antipod/antipodality.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "antipod/parallel.hpp"

namespace antipod {

PointConfig::PointConfig(int dim, std::vector<Point> pts, std::string lbl)
    : dim(dim), points(std::move(pts)), label(std::move(lbl)) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) {
      throw std::invalid_argument("point length does not match dim");
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("points must be distinct");
      }
    }
  }
  affine_dim_ = points.empty() ? -1 : affine_dimension(points);
}

namespace {

void require_full_dimensional(const PointConfig& config) {
  if (!config.full_dimensional()) {
    throw std::invalid_argument(
        "configuration does not affinely span its ambient space");
  }
}

void require_pair(const PointConfig& config, int i, int j) {
  const int n = config.size();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("pair index out of range");
  }
  if (i == j) throw std::invalid_argument("pair indices must differ");
}

}  // namespace

std::optional<Certificate> pair_test(const PointConfig& config, int i, int j,
                                     PairMode mode) {
  require_pair(config, i, j);
  require_full_dimensional(config);

  const auto& x = config.points;
  LinearSystem system;
  system.num_vars = config.dim;
  const Rational margin = mode == PairMode::Strict ? 1 : 0;
  for (int k = 0; k < config.size(); ++k) {
    if (k != i) system.add_ge(sub(x[i], x[k]), margin);  // x_i on top
    if (k != j) system.add_ge(sub(x[k], x[j]), margin);  // x_j at bottom
  }
  if (mode == PairMode::Antipodal) {
    system.add_ge(sub(x[i], x[j]), 1);  // forces H' != H''
  }

  const auto witness = lp_witness(system);
  if (!witness) return std::nullopt;
  Certificate cert;
  cert.direction = witness->values;
  cert.hi = dot(cert.direction, x[i]);
  cert.lo = dot(cert.direction, x[j]);
  return cert;
}

bool certificate_valid(const PointConfig& config, int i, int j, PairMode mode,
                       const Certificate& cert) {
  require_pair(config, i, j);
  const auto& x = config.points;
  if (cert.hi <= cert.lo) return false;
  if (dot(cert.direction, x[i]) != cert.hi) return false;
  if (dot(cert.direction, x[j]) != cert.lo) return false;
  for (int k = 0; k < config.size(); ++k) {
    const Rational v = dot(cert.direction, x[k]);
    if (v > cert.hi || v < cert.lo) return false;
    if (mode == PairMode::Strict) {
      if (k != i && v == cert.hi) return false;
      if (k != j && v == cert.lo) return false;
    }
  }
  return true;
}

PairReport count_pairs(const PointConfig& config, PairMode mode) {
  require_full_dimensional(config);
  const int n = config.size();
  std::vector<std::pair<int, int>> index_pairs;
  index_pairs.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) index_pairs.emplace_back(i, j);
  }

  std::vector<std::optional<Certificate>> found(index_pairs.size());
  parallel_for(static_cast<int>(index_pairs.size()), [&](int p) {
    found[p] =
        pair_test(config, index_pairs[p].first, index_pairs[p].second, mode);
  });

  PairReport report;
  report.mode = mode;
  for (std::size_t p = 0; p < index_pairs.size(); ++p) {
    if (found[p]) {
      report.pairs.push_back(
          {index_pairs[p].first, index_pairs[p].second, *found[p]});
    }
  }
  report.count = static_cast<int>(report.pairs.size());
  return report;
}

std::vector<std::pair<int, int>> strict_pairs(const PointConfig& config) {
  const PairReport report = count_pairs(config, PairMode::Strict);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(report.pairs.size());
  for (const auto& e : report.pairs) pairs.emplace_back(e.i, e.j);
  return pairs;
}

DifferenceBodyCounts difference_body_counts(const PointConfig& config) {
  require_full_dimensional(config);
  const int n = config.size();
  const auto& x = config.points;

  std::map<Point, int> index_of;
  std::vector<Point> diffs;
  std::vector<std::vector<int>> pair_diff(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Point z = sub(x[i], x[j]);
      auto it = index_of.find(z);
      if (it == index_of.end()) {
        it = index_of.emplace(z, static_cast<int>(diffs.size())).first;
        diffs.push_back(std::move(z));
      }
      pair_diff[i][j] = it->second;
    }
  }

  DifferenceBodyCounts counts;
  counts.db_vertices = static_cast<long long>(hull_vertices(diffs).size());
  if (counts.db_vertices % 2 != 0) {
    throw std::logic_error("difference body has odd vertex count");
  }
  counts.strict = counts.db_vertices / 2;

  // Boundary membership per distinct difference; D is centrally symmetric
  // and full-dimensional, so bd = not relint.
  std::vector<char> on_boundary(diffs.size(), 0);
  parallel_for(static_cast<int>(diffs.size()), [&](int z) {
    on_boundary[z] = in_relative_interior(diffs[z], diffs) ? 0 : 1;
  });
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (on_boundary[pair_diff[i][j]]) ++counts.antipodal;
    }
  }
  return counts;
}

PositionClass position_class(const PointConfig& config) {
  const auto verts = hull_vertices(config.points);
  if (static_cast<int>(verts.size()) == config.size()) {
    return PositionClass::StrictlyConvex;
  }
  std::vector<char> is_vertex(config.size(), 0);
  for (int v : verts) is_vertex[v] = 1;
  for (int i = 0; i < config.size(); ++i) {
    if (is_vertex[i]) continue;
    if (in_relative_interior(config.points[i], config.points)) {
      return PositionClass::NotConvex;
    }
  }
  return PositionClass::ConvexNotStrict;
}

namespace {

// Exact linear solve of A c = y for one consistent system; A given as
// column vectors. Returns the coefficients.
std::vector<Rational> solve_columns(const std::vector<Point>& columns,
                                    const Point& y) {
  const int rows = static_cast<int>(y.size());
  const int cols = static_cast<int>(columns.size());
  std::vector<std::vector<Rational>> aug(rows,
                                         std::vector<Rational>(cols + 1, 0));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) aug[r][c] = columns[c][r];
    aug[r][cols] = y[r];
  }
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int sel = row;
    while (sel < rows && aug[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(aug[sel], aug[row]);
    for (int r = 0; r < rows; ++r) {
      if (r == row || aug[r][c] == 0) continue;
      const Rational f = aug[r][c] / aug[row][c];
      for (int k = c; k <= cols; ++k) aug[r][k] -= f * aug[row][k];
    }
    pivot_col_of_row.push_back(c);
    ++row;
  }
  std::vector<Rational> solution(cols, 0);
  for (int r = 0; r < static_cast<int>(pivot_col_of_row.size()); ++r) {
    const int c = pivot_col_of_row[r];
    solution[c] = aug[r][cols] / aug[r][c];
  }
  return solution;
}

}  // namespace

PointConfig reembed_in_affine_hull(const PointConfig& config) {
  if (config.points.empty()) {
    throw std::invalid_argument("cannot re-embed an empty configuration");
  }
  const int k = config.affine_dim();
  if (k == config.dim) return config;
  if (k == 0) {
    throw std::invalid_argument("single point has no ambient dimension");
  }
  // Greedy affine basis from the points themselves.
  const Point& origin = config.points[0];
  std::vector<Point> basis;
  std::vector<std::vector<Rational>> rank_rows;
  for (int i = 1; i < config.size() && static_cast<int>(basis.size()) < k;
       ++i) {
    Point d = sub(config.points[i], origin);
    rank_rows.push_back(d);
    if (matrix_rank(rank_rows) == static_cast<int>(rank_rows.size())) {
      basis.push_back(std::move(d));
    } else {
      rank_rows.pop_back();
    }
  }
  std::vector<Point> embedded;
  embedded.reserve(config.size());
  for (const auto& p : config.points) {
    embedded.push_back(solve_columns(basis, sub(p, origin)));
  }
  return PointConfig(k, std::move(embedded), config.label);
}

VertexProjection project_at_vertex(const PointConfig& config, int apex,
                                   unsigned long long seed) {
  require_full_dimensional(config);
  if (config.dim < 2) {
    throw std::invalid_argument("projection needs dimension >= 2");
  }
  if (apex < 0 || apex >= config.size()) {
    throw std::invalid_argument("apex index out of range");
  }
  {
    const auto verts = hull_vertices(config.points);
    if (std::find(verts.begin(), verts.end(), apex) == verts.end()) {
      throw std::invalid_argument("apex is not a vertex of the hull");
    }
  }

  const int d = config.dim;
  const int n = config.size();
  Point centroid(d, Rational(0));
  for (const auto& p : config.points) centroid = add(centroid, p);
  centroid = scale(Rational(1, n), centroid);

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  std::uniform_int_distribution<int> jitter(-512, 512);

  for (int attempt = 0; attempt < 64; ++attempt) {
    Point dir = sub(centroid, config.points[apex]);
    if (attempt > 0) {
      Rational mag = 0;
      for (const auto& c : dir) {
        const Rational a = abs(c);
        if (a > mag) mag = a;
      }
      for (auto& c : dir) {
        c += mag * Rational(jitter(rng), 4096);
      }
    }
    int drop = -1;
    Rational best = 0;
    for (int c = 0; c < d; ++c) {
      if (abs(dir[c]) > best) {
        best = abs(dir[c]);
        drop = c;
      }
    }
    if (drop < 0) continue;  // zero direction, retry

    // Shear so the projection line maps to zero in coordinate `drop`,
    // then delete that coordinate.
    auto project = [&](const Point& p) {
      const Rational f = p[drop] / dir[drop];
      Point image;
      image.reserve(d - 1);
      for (int c = 0; c < d; ++c) {
        if (c == drop) continue;
        image.push_back(p[c] - f * dir[c]);
      }
      return image;
    };

    std::vector<Point> images(n);
    for (int i = 0; i < n; ++i) images[i] = project(config.points[i]);

    std::vector<Point> unique_images;
    std::vector<int> unique_of(n, -1);
    for (int i = 0; i < n; ++i) {
      for (std::size_t u = 0; u < unique_images.size(); ++u) {
        if (unique_images[u] == images[i]) {
          unique_of[i] = static_cast<int>(u);
          break;
        }
      }
      if (unique_of[i] < 0) {
        unique_of[i] = static_cast<int>(unique_images.size());
        unique_images.push_back(images[i]);
      }
    }

    if (affine_dimension(unique_images) != d - 1) continue;
    if (!in_relative_interior(images[apex], unique_images)) continue;

    const auto hull = hull_vertices(unique_images);
    std::vector<int> image_slot(unique_images.size(), -1);
    std::vector<Point> hull_points;
    for (std::size_t h = 0; h < hull.size(); ++h) {
      image_slot[hull[h]] = static_cast<int>(h);
      hull_points.push_back(unique_images[hull[h]]);
    }

    VertexProjection result;
    result.image = PointConfig(d - 1, std::move(hull_points), config.label);
    result.fibers.assign(hull.size(), {});
    result.image_index.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      const int slot = image_slot[unique_of[i]];
      result.image_index[i] = slot;
      if (slot >= 0) result.fibers[slot].push_back(i);
    }
    return result;
  }
  throw std::runtime_error("no generic projection direction found");
}

CoordinateProjection drop_last_coordinate(const PointConfig& config) {
  if (config.dim < 2) {
    throw std::invalid_argument("projection needs dimension >= 2");
  }
  const int d = config.dim;
  std::vector<Point> unique_images;
  std::vector<std::vector<int>> fibers;
  for (int i = 0; i < config.size(); ++i) {
    Point image(config.points[i].begin(), config.points[i].end() - 1);
    int slot = -1;
    for (std::size_t u = 0; u < unique_images.size(); ++u) {
      if (unique_images[u] == image) {
        slot = static_cast<int>(u);
        break;
      }
    }
    if (slot < 0) {
      slot = static_cast<int>(unique_images.size());
      unique_images.push_back(std::move(image));
      fibers.emplace_back();
    }
    fibers[slot].push_back(i);
  }
  for (auto& fiber : fibers) {
    std::sort(fiber.begin(), fiber.end(), [&](int a, int b) {
      return config.points[a][d - 1] > config.points[b][d - 1];
    });
  }
  CoordinateProjection result;
  result.image = PointConfig(d - 1, std::move(unique_images), config.label);
  result.fibers = std::move(fibers);
  return result;
}

std::vector<int> convex_cycle_order(const PointConfig& config) {
  if (config.dim != 2) {
    throw std::invalid_argument("convex cycle order is planar only");
  }
  if (position_class(config) != PositionClass::StrictlyConvex) {
    throw std::invalid_argument("configuration is not strictly convex");
  }
  const int n = config.size();
  Point centroid(2, Rational(0));
  for (const auto& p : config.points) centroid = add(centroid, p);
  centroid = scale(Rational(1, n), centroid);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto half = [&](const Point& v) {
    // 0 for the upper half plane (including the positive x-axis).
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Point va = sub(config.points[a], centroid);
    const Point vb = sub(config.points[b], centroid);
    const int ha = half(va), hb = half(vb);
    if (ha != hb) return ha < hb;
    const Rational cross = va[0] * vb[1] - va[1] * vb[0];
    return cross > 0;
  });
  return order;
}

int parallel_side_pairs(const PointConfig& config) {
  const auto order = convex_cycle_order(config);
  const int n = static_cast<int>(order.size());
  if (n < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
  std::vector<Point> sides(n);
  for (int i = 0; i < n; ++i) {
    sides[i] =
        sub(config.points[order[(i + 1) % n]], config.points[order[i]]);
  }
  int parallels = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sides[i][0] * sides[j][1] == sides[i][1] * sides[j][0]) {
        ++parallels;
      }
    }
  }
  return parallels;
}

}  // namespace antipod
