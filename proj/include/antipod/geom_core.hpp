#pragma once

#include <optional>
#include <vector>

#include "antipod/rational.hpp"

namespace antipod {

// A point is a coordinate vector over Rational; its length is the ambient
// dimension of the containing configuration.
using Point = std::vector<Rational>;

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Rational& s, const Point& a);
Rational dot(const Point& a, const Point& b);

/// dim aff(points), computed exactly as the rank of the difference
/// vectors against points[0]. Throws on empty input or mixed coordinate
/// lengths. Invariant under translations and invertible linear maps.
int affine_dimension(const std::vector<Point>& points);

/// Exact rank of a rational matrix (rows need equal length).
int matrix_rank(std::vector<std::vector<Rational>> rows);

enum class Relation { GreaterEqual, Equal };

struct LinearRow {
  std::vector<Rational> coeffs;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

// A feasibility system over free rational variables. Strict inequalities
// are never represented; callers that need "> 0" for a scale-free
// direction encode it as ">= 1".
struct LinearSystem {
  int num_vars = 0;
  std::vector<LinearRow> rows;

  void add_ge(std::vector<Rational> coeffs, Rational rhs);
  void add_eq(std::vector<Rational> coeffs, Rational rhs);
};

struct Witness {
  std::vector<Rational> values;
};

/// True iff the witness satisfies every row of the system exactly.
bool satisfies(const LinearSystem& system, const Witness& witness);

/// Exact LP feasibility: phase-I simplex with Bland's rule over Rational
/// (termination guaranteed, no floating-point phase). Returns a witness,
/// or nullopt when the system is infeasible. Every returned witness has
/// been substituted back into the system; a substitution failure throws,
/// as it would mean the solver itself is broken. Throws
/// std::invalid_argument on malformed systems (wrong row widths).
std::optional<Witness> lp_witness(const LinearSystem& system);

/// Indices i such that points[i] is a vertex of conv(points), i.e.
/// points[i] is not in the hull of the remaining points, decided by exact
/// LP. A duplicated point is reported at most once (lowest index wins).
/// The index set is invariant under permutations and invertible rational
/// affine maps of the input.
std::vector<int> hull_vertices(const std::vector<Point>& points);

/// Exact test for z in the relative interior of conv(points); z need not
/// be one of the points. Uses the characterization of relint conv(S) as
/// the strictly positive convex combinations of all of S, made scale-free
/// (mu_w >= 1, sum mu_w (w - z) = 0) so it fits the weak-inequality LP.
bool in_relative_interior(const Point& z, const std::vector<Point>& points);

}  // namespace antipod
