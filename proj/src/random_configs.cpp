#include "antipod/random_configs.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace antipod {

namespace {

Point stereographic(const std::vector<Rational>& a) {
  Rational norm2 = 0;
  for (const auto& c : a) norm2 += c * c;
  const Rational denom = 1 + norm2;
  Point p;
  p.reserve(a.size() + 1);
  for (const auto& c : a) p.push_back(2 * c / denom);
  p.push_back((1 - norm2) / denom);
  return p;
}

}  // namespace

PointConfig random_sphere_config(int dim, int n, unsigned long long seed) {
  if (dim < 1 || n < dim + 1) {
    throw std::invalid_argument("need n >= dim + 1");
  }
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xda942042e4dd58b5ULL);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);

  for (int attempt = 0; attempt < 256; ++attempt) {
    std::set<Point> seen;
    std::vector<Point> points;
    while (static_cast<int>(points.size()) < n) {
      std::vector<Rational> a(dim - 1);
      for (auto& c : a) c = Rational(num(rng), den(rng));
      Point p = stereographic(a);
      if (seen.insert(p).second) points.push_back(std::move(p));
    }
    if (affine_dimension(points) == dim) {
      return PointConfig(dim, std::move(points));
    }
  }
  throw std::runtime_error("failed to draw a spanning sphere configuration");
}

PointConfig random_convex_polygon(int n, unsigned long long seed,
                                  bool force_symmetric) {
  if (n < 3) throw std::invalid_argument("polygon needs n >= 3");
  if (force_symmetric && n % 2 != 0) {
    throw std::invalid_argument("symmetric polygon needs even n");
  }
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x94d049bb133111ebULL);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(7, 23);

  // Tangent half-angle points on the unit circle; t and -1/t give
  // antipodal points, so the symmetric variant mirrors half the draws.
  auto circle_point = [](const Rational& t) {
    const Rational d = 1 + t * t;
    return Point{(1 - t * t) / d, 2 * t / d};
  };

  for (int attempt = 0; attempt < 256; ++attempt) {
    std::set<Point> seen;
    std::vector<Point> points;
    const int draws = force_symmetric ? n / 2 : n;
    while (static_cast<int>(points.size()) < draws) {
      const Rational t(num(rng), den(rng));
      Point p = circle_point(t);
      if (seen.insert(p).second) points.push_back(std::move(p));
    }
    if (force_symmetric) {
      std::vector<Point> all = points;
      bool clash = false;
      for (const auto& p : points) {
        Point q{-p[0], -p[1]};
        if (!seen.insert(q).second) {
          clash = true;
          break;
        }
        all.push_back(std::move(q));
      }
      if (clash) continue;
      points = std::move(all);
    }
    if (affine_dimension(points) == 2) {
      return PointConfig(2, std::move(points));
    }
  }
  throw std::runtime_error("failed to draw a polygon");
}

}  // namespace antipod
