#include "ibncut/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "ibncut/simplex.hpp"

namespace ibncut {

bool InequalitySystem::satisfied(const RatVec& x) const {
  for (int i = 0; i < nrows(); ++i) {
    if (dot(a[i], x) > Rat(b[i])) return false;
  }
  return true;
}

bool InequalitySystem::satisfied(const IntVec& x) const {
  for (int i = 0; i < nrows(); ++i) {
    if (dot(a[i], x) > b[i]) return false;
  }
  return true;
}

InequalitySystem InequalitySystem::make(IntMat a, IntVec b,
                                        std::vector<std::string>* warnings) {
  if (a.nrows() == 0 || a.ncols == 0)
    throw Error(ErrorCode::bad_input, "empty inequality system");
  if (a.nrows() != b.dim())
    throw Error(ErrorCode::bad_input, "row/rhs count mismatch");
  if (warnings) {
    for (const auto& row : a.rows) {
      if (is_zero(row)) {
        warnings->push_back("zero row in system");
      } else if (!is_primitive(row)) {
        warnings->push_back("non-primitive row kept as given");
      }
    }
  }
  return {std::move(a), std::move(b)};
}

LatticeBox LatticeBox::make(IntVec lo, IntVec hi) {
  if (lo.dim() != hi.dim())
    throw Error(ErrorCode::bad_input, "box bound dimension mismatch");
  for (int i = 0; i < lo.dim(); ++i) {
    if (lo[i] > hi[i]) throw Error(ErrorCode::bad_input, "box lower > upper");
  }
  return {std::move(lo), std::move(hi)};
}

LatticeBox LatticeBox::cube(int dim, long radius) {
  IntVec lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    lo[i] = -radius;
    hi[i] = radius;
  }
  return {lo, hi};
}

namespace {

void sort_vertices(std::vector<RatVec>& vs) {
  std::sort(vs.begin(), vs.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void sort_rays(std::vector<IntVec>& rs) {
  std::sort(rs.begin(), rs.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
}

// primitive integer kernel direction of an (n-1) x n matrix of full row rank
std::optional<IntVec> kernel_direction(const IntMat& m) {
  int rows = m.nrows(), n = m.ncols;
  // rational row reduction, track pivot columns
  std::vector<std::vector<Rat>> w(static_cast<size_t>(rows),
                                  std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m[i][j]);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (w[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[static_cast<size_t>(piv)], w[static_cast<size_t>(r)]);
    Rat inv = 1 / w[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (int j = c; j < n; ++j) w[static_cast<size_t>(r)][static_cast<size_t>(j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = w[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < n; ++j)
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * w[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != rows || rows != n - 1) return std::nullopt;  // not full row rank
  // pick the unique free column, back out a rational kernel vector
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) { free_col = c; break; }
  RatVec x(n);
  x[free_col] = 1;
  for (int i = 0; i < rows; ++i)
    x[pivot_col[static_cast<size_t>(i)]] = -w[static_cast<size_t>(i)][static_cast<size_t>(free_col)];
  // clear denominators, make primitive
  Int lcm = 1;
  for (int j = 0; j < n; ++j) {
    Int den = x[j].get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  IntVec d(n);
  for (int j = 0; j < n; ++j) {
    Rat scaled = x[j] * Rat(lcm);
    d[j] = scaled.get_num();
  }
  auto pp = primitive_part(d);
  if (pp.g == 0) return std::nullopt;
  return pp.w;
}

}  // namespace

std::vector<IntVec> extreme_rays(const InequalitySystem& s) {
  int m = s.nrows(), n = s.dim();
  std::vector<IntVec> rays;
  if (n == 1) {
    // rays of {ax <= 0} in dimension one
    bool pos_ok = true, neg_ok = true;
    for (int i = 0; i < m; ++i) {
      if (s.a[i][0] > 0) pos_ok = false;
      if (s.a[i][0] < 0) neg_ok = false;
    }
    if (pos_ok) rays.push_back(IntVec{1});
    if (neg_ok) rays.push_back(IntVec{-1});
    return rays;
  }
  std::vector<int> idx(static_cast<size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) idx[static_cast<size_t>(i)] = i;
  auto advance = [&]() {
    int pos = n - 2;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - (n - 1) + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < n - 1; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  if (m < n - 1) return rays;
  do {
    IntMat sub(n - 1, n);
    for (int i = 0; i < n - 1; ++i) sub[i] = s.a[idx[static_cast<size_t>(i)]];
    auto d = kernel_direction(sub);
    if (!d) continue;
    for (const IntVec& cand : {*d, -*d}) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (dot(s.a[i], cand) > 0) ok = false;
      }
      if (ok) rays.push_back(cand);
    }
  } while (advance());
  sort_rays(rays);
  return rays;
}

VRepresentation vertex_enumeration(const InequalitySystem& s) {
  int m = s.nrows(), n = s.dim();
  if (rank(s.a) < n)
    throw Error(ErrorCode::rank_deficient, "system matrix must have rank n");

  std::vector<RatVec> vertices;
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  auto advance = [&]() {
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - n + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  if (m >= n) {
    do {
      IntMat sub(n, n);
      IntVec rhs(n);
      for (int i = 0; i < n; ++i) {
        sub[i] = s.a[idx[static_cast<size_t>(i)]];
        rhs[i] = s.b[idx[static_cast<size_t>(i)]];
      }
      if (determinant(sub) == 0) continue;
      RatVec x = solve_right(sub, rhs);
      if (s.satisfied(x)) vertices.push_back(std::move(x));
    } while (advance());
  }
  sort_vertices(vertices);
  if (vertices.empty())
    throw Error(ErrorCode::empty, "polyhedron has no feasible point");

  VRepresentation rep;
  rep.vertices = std::move(vertices);
  rep.rays = extreme_rays(s);
  return rep;
}

LpResult lp_optimum(const IntVec& c, const InequalitySystem& s) {
  LpResult res;
  VRepresentation rep;
  try {
    rep = vertex_enumeration(s);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::empty) {
      res.status = LpStatus::infeasible;
      return res;
    }
    throw;
  }
  for (const auto& r : rep.rays) {
    if (dot(c, r) > 0) {
      res.status = LpStatus::unbounded;
      return res;
    }
  }
  bool first = true;
  for (const auto& v : rep.vertices) {
    Rat val = dot(c, v);
    if (first || val > res.value) {
      res.value = val;
      res.argmax = v;
      first = false;
    }
  }
  res.status = LpStatus::optimal;
  return res;
}

LatticePointsResult lattice_points(const InequalitySystem& s,
                                   const std::optional<LatticeBox>& box) {
  int m = s.nrows(), n = s.dim();
  LatticePointsResult res;
  if (box) {
    res.box = *box;
    res.box_limited = !extreme_rays(s).empty();
  } else {
    VRepresentation rep = vertex_enumeration(s);
    if (!rep.rays.empty())
      throw Error(ErrorCode::unbounded_no_box,
                  "unbounded polyhedron needs an explicit box");
    IntVec lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
      Rat mn = rep.vertices.front()[j], mx = mn;
      for (const auto& v : rep.vertices) {
        if (v[j] < mn) mn = v[j];
        if (v[j] > mx) mx = v[j];
      }
      lo[j] = ceil_rat(mn);
      hi[j] = floor_rat(mx);
      if (lo[j] > hi[j]) return res;  // no integer point in that slab
    }
    res.box = LatticeBox{lo, hi};
  }

  const LatticeBox& bx = res.box;

  // int64 fast path when every partial dot provably fits
  bool small = true;
  double magnitude = 0;
  for (int i = 0; i < m && small; ++i) {
    double row_mag = std::abs(s.b[i].get_d());
    for (int j = 0; j < n; ++j) {
      double span = std::max(std::abs(bx.lower[j].get_d()), std::abs(bx.upper[j].get_d()));
      row_mag += std::abs(s.a[i][j].get_d()) * span;
      if (!to_ll(s.a[i][j])) small = false;
    }
    magnitude = std::max(magnitude, row_mag);
    if (!to_ll(s.b[i]) || !to_ll(bx.lower.dim() > 0 ? bx.lower[0] : Int(0))) small = false;
  }
  for (int j = 0; j < n && small; ++j) {
    if (!to_ll(bx.lower[j]) || !to_ll(bx.upper[j])) small = false;
  }
  if (magnitude > 4.0e17) small = false;

  std::vector<IntVec> pts;
  if (small) {
    std::vector<long long> a(static_cast<size_t>(m) * n), b(static_cast<size_t>(m));
    std::vector<long long> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i) {
      b[static_cast<size_t>(i)] = *to_ll(s.b[i]);
      for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = *to_ll(s.a[i][j]);
    }
    for (int j = 0; j < n; ++j) {
      lo[static_cast<size_t>(j)] = *to_ll(bx.lower[j]);
      hi[static_cast<size_t>(j)] = *to_ll(bx.upper[j]);
    }
    std::vector<std::vector<long long>> rowmin(static_cast<size_t>(m),
                                               std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    for (int i = 0; i < m; ++i) {
      for (int k = n - 1; k >= 0; --k) {
        long long coef = a[static_cast<size_t>(i) * n + k];
        long long contrib = coef >= 0 ? coef * lo[static_cast<size_t>(k)] : coef * hi[static_cast<size_t>(k)];
        rowmin[static_cast<size_t>(i)][static_cast<size_t>(k)] =
            rowmin[static_cast<size_t>(i)][static_cast<size_t>(k) + 1] + contrib;
      }
    }
    std::vector<long long> x(static_cast<size_t>(n), 0), partial(static_cast<size_t>(m), 0);
    std::function<void(int)> scan = [&](int k) {
      for (int i = 0; i < m; ++i) {
        if (partial[static_cast<size_t>(i)] + rowmin[static_cast<size_t>(i)][static_cast<size_t>(k)] >
            b[static_cast<size_t>(i)])
          return;
      }
      if (k == n) {
        IntVec p(n);
        for (int j = 0; j < n; ++j) p[j] = static_cast<long>(x[static_cast<size_t>(j)]);
        pts.push_back(std::move(p));
        return;
      }
      for (long long v = lo[static_cast<size_t>(k)]; v <= hi[static_cast<size_t>(k)]; ++v) {
        x[static_cast<size_t>(k)] = v;
        for (int i = 0; i < m; ++i) partial[static_cast<size_t>(i)] += a[static_cast<size_t>(i) * n + k] * v;
        scan(k + 1);
        for (int i = 0; i < m; ++i) partial[static_cast<size_t>(i)] -= a[static_cast<size_t>(i) * n + k] * v;
      }
      x[static_cast<size_t>(k)] = 0;
    };
    scan(0);
  } else {
    // rowmin[i][k] = least possible contribution of coordinates k..n-1 to row i
    std::vector<std::vector<Int>> rowmin(static_cast<size_t>(m),
                                         std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
    for (int i = 0; i < m; ++i) {
      for (int k = n - 1; k >= 0; --k) {
        const Int& coef = s.a[i][k];
        Int contrib = coef >= 0 ? coef * bx.lower[k] : coef * bx.upper[k];
        rowmin[static_cast<size_t>(i)][static_cast<size_t>(k)] =
            rowmin[static_cast<size_t>(i)][static_cast<size_t>(k) + 1] + contrib;
      }
    }
    IntVec x(n);
    std::vector<Int> partial(static_cast<size_t>(m), Int(0));
    std::function<void(int)> scan = [&](int k) {
      for (int i = 0; i < m; ++i) {
        if (partial[static_cast<size_t>(i)] + rowmin[static_cast<size_t>(i)][static_cast<size_t>(k)] > s.b[i])
          return;
      }
      if (k == n) {
        pts.push_back(x);
        return;
      }
      for (Int v = bx.lower[k]; v <= bx.upper[k]; ++v) {
        x[k] = v;
        for (int i = 0; i < m; ++i) partial[static_cast<size_t>(i)] += s.a[i][k] * v;
        scan(k + 1);
        for (int i = 0; i < m; ++i) partial[static_cast<size_t>(i)] -= s.a[i][k] * v;
      }
      x[k] = 0;
    };
    scan(0);
  }
  res.points = std::move(pts);  // scan order is already lexicographic
  return res;
}

IlpResult ilp_optimum(const IntVec& c, const InequalitySystem& s,
                      const std::optional<LatticeBox>& box) {
  IlpResult res;
  std::vector<IntVec> rays = extreme_rays(s);
  bool improving_ray = false;
  for (const auto& r : rays) {
    if (dot(c, r) > 0) improving_ray = true;
  }
  if (!rays.empty() && !box)
    throw Error(ErrorCode::unbounded_no_box,
                "unbounded polyhedron needs an explicit box");
  LatticePointsResult pts = lattice_points(s, box);
  if (pts.points.empty()) {
    res.status = LpStatus::infeasible;
    res.box_limited = pts.box_limited;
    return res;
  }
  if (improving_ray) {
    res.status = LpStatus::unbounded;
    return res;
  }
  bool first = true;
  for (const auto& p : pts.points) {
    Int val = dot(c, p);
    if (first || val > res.value) {
      res.value = val;
      res.argmax = p;
      first = false;
    }
  }
  res.status = LpStatus::optimal;
  res.box_limited = pts.box_limited;
  return res;
}

bool in_convex_hull(const RatVec& x, const std::vector<IntVec>& points,
                    const std::vector<IntVec>& rays) {
  if (points.empty()) return false;
  int n = x.dim();
  // sum mu_p p + sum nu_r r = x, sum mu_p = 1, all >= 0
  std::vector<std::vector<Rat>> cols;
  cols.reserve(points.size() + rays.size());
  for (const auto& p : points) {
    std::vector<Rat> col(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = Rat(p[i]);
    col[static_cast<size_t>(n)] = 1;
    cols.push_back(std::move(col));
  }
  for (const auto& r : rays) {
    std::vector<Rat> col(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = Rat(r[i]);
    col[static_cast<size_t>(n)] = 0;
    cols.push_back(std::move(col));
  }
  std::vector<Rat> rhs(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) rhs[static_cast<size_t>(i)] = x[i];
  rhs[static_cast<size_t>(n)] = 1;
  return lp_feasible_eq(cols, rhs).feasible;
}

VRepresentation integer_hull(const InequalitySystem& s,
                             const std::optional<LatticeBox>& box) {
  LatticePointsResult pts = lattice_points(s, box);
  VRepresentation rep;
  rep.box_limited = pts.box_limited;
  if (pts.points.empty())
    throw Error(ErrorCode::empty_hull, "no integer points found");
  rep.rays = extreme_rays(s);  // rec(Q^I) = rec(Q) for rational polyhedra

  // Cheap sound reductions before any LP: a point expressible as another
  // point plus a ray, or as the midpoint of two set points, is not extreme.
  // Killed points stay inside conv(survivors) + cone(rays), so the final
  // exact test only needs the survivors as columns.
  int n = s.dim();
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> pset(lex_less);
  for (const auto& p : pts.points) pset.insert(p);

  std::vector<IntVec> directions;
  if (n <= 6) {
    IntVec d(n);
    std::function<void(int)> gen = [&](int k) {
      if (k == n) {
        for (int j = 0; j < n; ++j) {
          if (d[j] > 0) {
            directions.push_back(d);
            return;
          }
          if (d[j] < 0) return;  // keep one representative per +-pair
        }
        return;
      }
      for (long v : {-1L, 0L, 1L}) {
        d[k] = v;
        gen(k + 1);
      }
      d[k] = 0;
    };
    gen(0);
  } else {
    for (int i = 0; i < n; ++i) {
      directions.push_back(unit_vec(n, i));
      for (int j = i + 1; j < n; ++j) {
        directions.push_back(unit_vec(n, i) + unit_vec(n, j));
        directions.push_back(unit_vec(n, i) - unit_vec(n, j));
      }
    }
  }

  std::vector<IntVec> survivors;
  for (const auto& p : pts.points) {
    bool dropped = false;
    for (const auto& r : rep.rays) {
      if (pset.count(p - r)) {
        dropped = true;
        break;
      }
    }
    for (size_t di = 0; di < directions.size() && !dropped; ++di) {
      if (pset.count(p + directions[di]) && pset.count(p - directions[di])) dropped = true;
    }
    if (!dropped) survivors.push_back(p);
  }

  for (const auto& p : survivors) {
    std::vector<IntVec> others;
    others.reserve(survivors.size() - 1);
    for (const auto& q : survivors) {
      if (q != p) others.push_back(q);
    }
    if (!in_convex_hull(to_rat(p), others, rep.rays)) {
      rep.vertices.push_back(to_rat(p));
    }
  }
  sort_vertices(rep.vertices);
  return rep;
}

bool same_polyhedron(const VRepresentation& p, const VRepresentation& q) {
  return p.vertices == q.vertices && p.rays == q.rays;
}

}  // namespace ibncut
