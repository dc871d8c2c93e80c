#include "antipod/geom_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace antipod {

namespace {

void require_same_size(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("mixed coordinate lengths");
  }
}

}  // namespace

Point add(const Point& a, const Point& b) {
  require_same_size(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  require_same_size(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Rational& s, const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational dot(const Point& a, const Point& b) {
  require_same_size(a, b);
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw std::invalid_argument("ragged matrix");
    }
  }
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t pivot_row = 0; pivot_row < rows.size() && col < cols;
       ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[pivot_row][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] -= f * rows[pivot_row][j];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) {
    throw std::invalid_argument("affine_dimension of empty set");
  }
  const std::size_t dim = points[0].size();
  std::vector<std::vector<Rational>> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw std::invalid_argument("mixed coordinate lengths");
    }
    diffs.push_back(sub(points[i], points[0]));
  }
  if (diffs.empty()) return 0;
  return matrix_rank(std::move(diffs));
}

void LinearSystem::add_ge(std::vector<Rational> coeffs, Rational rhs) {
  rows.push_back({std::move(coeffs), Relation::GreaterEqual, std::move(rhs)});
}

void LinearSystem::add_eq(std::vector<Rational> coeffs, Rational rhs) {
  rows.push_back({std::move(coeffs), Relation::Equal, std::move(rhs)});
}

bool satisfies(const LinearSystem& system, const Witness& witness) {
  if (static_cast<int>(witness.values.size()) != system.num_vars) return false;
  for (const auto& row : system.rows) {
    Rational lhs = 0;
    for (int j = 0; j < system.num_vars; ++j) {
      lhs += row.coeffs[j] * witness.values[j];
    }
    if (row.relation == Relation::Equal ? lhs != row.rhs : lhs < row.rhs) {
      return false;
    }
  }
  return true;
}

namespace {

// Phase-I simplex over Rational on the standard form
//   { A x (>=|=) b, x >= 0 },
// with Bland's pivoting rule throughout, which rules out cycling. Returns
// the feasible x, or nullopt. All callers funnel through here; the free
// variables of the public LinearSystem are split into positive parts by
// lp_witness.
std::optional<std::vector<Rational>> solve_nonneg(
    int num_vars, const std::vector<LinearRow>& input_rows) {
  const int m = static_cast<int>(input_rows.size());
  int num_slacks = 0;
  for (const auto& row : input_rows) {
    if (row.relation == Relation::GreaterEqual) ++num_slacks;
  }
  const int structural = num_vars + num_slacks;
  const int total = structural + m;  // one artificial per row
  const int rhs_col = total;

  // Build the tableau with rhs >= 0 in every row.
  std::vector<std::vector<Rational>> tab(m,
                                         std::vector<Rational>(total + 1, 0));
  int slack = num_vars;
  for (int i = 0; i < m; ++i) {
    const auto& row = input_rows[i];
    const bool flip = row.rhs < 0;
    const Rational sign = flip ? -1 : 1;
    for (int j = 0; j < num_vars; ++j) tab[i][j] = sign * row.coeffs[j];
    if (row.relation == Relation::GreaterEqual) {
      tab[i][slack++] = flip ? 1 : -1;  // surplus variable
    }
    tab[i][structural + i] = 1;
    tab[i][rhs_col] = sign * row.rhs;
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = structural + i;

  // Reduced costs for minimizing the sum of artificials; with the
  // artificial basis these are -(column sums) on non-artificial columns.
  std::vector<Rational> reduced(total + 1, 0);
  for (int j = 0; j <= total; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += tab[i][j];
    reduced[j] = (j >= structural && j < total) ? Rational(1) - s : -s;
  }

  auto pivot = [&](int row, int col) {
    const Rational p = tab[row][col];
    for (int j = 0; j <= total; ++j) tab[row][j] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || tab[i][col] == 0) continue;
      const Rational f = tab[i][col];
      for (int j = 0; j <= total; ++j) tab[i][j] -= f * tab[row][j];
    }
    if (reduced[col] != 0) {
      const Rational f = reduced[col];
      for (int j = 0; j <= total; ++j) reduced[j] -= f * tab[row][j];
    }
    basis[row] = col;
  };

  for (;;) {
    int entering = -1;
    for (int j = 0; j < total; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;
    int leaving = -1;
    Rational best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (tab[i][entering] <= 0) continue;
      const Rational ratio = tab[i][rhs_col] / tab[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) {
      // Phase-I objective is bounded below by zero.
      throw std::logic_error("phase-I simplex reported unbounded");
    }
    pivot(leaving, entering);
  }

  Rational objective = 0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= structural) objective += tab[i][rhs_col];
  }
  if (objective != 0) return std::nullopt;

  // Drive residual zero-level artificials out of the basis where a
  // structural pivot exists; all-zero rows are redundant and stay put.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < structural) continue;
    for (int j = 0; j < structural; ++j) {
      if (tab[i][j] != 0) {
        pivot(i, j);
        break;
      }
    }
  }

  std::vector<Rational> x(num_vars, 0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < num_vars) x[basis[i]] = tab[i][rhs_col];
  }
  return x;
}

}  // namespace

std::optional<Witness> lp_witness(const LinearSystem& system) {
  if (system.num_vars < 0) {
    throw std::invalid_argument("negative variable count");
  }
  for (const auto& row : system.rows) {
    if (static_cast<int>(row.coeffs.size()) != system.num_vars) {
      throw std::invalid_argument("row width does not match num_vars");
    }
  }

  // Split x = x+ - x- so the core sees nonnegative variables only.
  std::vector<LinearRow> split_rows;
  split_rows.reserve(system.rows.size());
  for (const auto& row : system.rows) {
    LinearRow r;
    r.relation = row.relation;
    r.rhs = row.rhs;
    r.coeffs.resize(2 * system.num_vars);
    for (int j = 0; j < system.num_vars; ++j) {
      r.coeffs[2 * j] = row.coeffs[j];
      r.coeffs[2 * j + 1] = -row.coeffs[j];
    }
    split_rows.push_back(std::move(r));
  }

  const auto solved = solve_nonneg(2 * system.num_vars, split_rows);
  if (!solved) return std::nullopt;

  Witness witness;
  witness.values.resize(system.num_vars);
  for (int j = 0; j < system.num_vars; ++j) {
    witness.values[j] = (*solved)[2 * j] - (*solved)[2 * j + 1];
  }
  if (!satisfies(system, witness)) {
    throw std::logic_error("simplex produced an invalid witness");
  }
  return witness;
}

namespace {

// z in conv(candidates)?  Convex-combination feasibility with the
// coefficients as the nonnegative variables, so the basis stays at
// dim+1 rows no matter how many candidate points there are.
bool in_convex_hull(const Point& z, const std::vector<const Point*>& candidates) {
  if (candidates.empty()) return false;
  const int dim = static_cast<int>(z.size());
  const int n = static_cast<int>(candidates.size());
  std::vector<LinearRow> rows(dim + 1);
  for (int k = 0; k < dim; ++k) {
    rows[k].relation = Relation::Equal;
    rows[k].rhs = z[k];
    rows[k].coeffs.resize(n);
    for (int w = 0; w < n; ++w) rows[k].coeffs[w] = (*candidates[w])[k];
  }
  rows[dim].relation = Relation::Equal;
  rows[dim].rhs = 1;
  rows[dim].coeffs.assign(n, Rational(1));
  return solve_nonneg(n, rows).has_value();
}

}  // namespace

std::vector<int> hull_vertices(const std::vector<Point>& points) {
  if (points.empty()) {
    throw std::invalid_argument("hull_vertices of empty set");
  }
  const std::size_t dim = points[0].size();
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw std::invalid_argument("mixed coordinate lengths");
    }
  }

  // Deduplicate; the lowest index represents each distinct point.
  std::vector<int> rep;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    bool duplicate = false;
    for (int r : rep) {
      if (points[r] == points[i]) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) rep.push_back(i);
  }

  std::vector<int> result;
  for (int i : rep) {
    std::vector<const Point*> others;
    others.reserve(rep.size() - 1);
    for (int r : rep) {
      if (r != i) others.push_back(&points[r]);
    }
    if (!in_convex_hull(points[i], others)) result.push_back(i);
  }
  return result;
}

bool in_relative_interior(const Point& z, const std::vector<Point>& points) {
  if (points.empty()) return false;
  const int dim = static_cast<int>(z.size());
  const int n = static_cast<int>(points.size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) {
      throw std::invalid_argument("mixed coordinate lengths");
    }
  }
  // relint conv(S) is the set of strictly positive convex combinations of
  // all of S. Scale freedom turns "lambda_w > 0, sum = 1" into
  // "mu_w >= 1": with mu = 1 + nu the system becomes
  //   sum_w nu_w (w - z) = -sum_w (w - z),  nu >= 0.
  std::vector<LinearRow> rows(dim);
  for (int k = 0; k < dim; ++k) {
    rows[k].relation = Relation::Equal;
    rows[k].coeffs.resize(n);
    Rational total = 0;
    for (int w = 0; w < n; ++w) {
      const Rational diff = points[w][k] - z[k];
      rows[k].coeffs[w] = diff;
      total += diff;
    }
    rows[k].rhs = -total;
  }
  return solve_nonneg(n, rows).has_value();
}

}  // namespace antipod
