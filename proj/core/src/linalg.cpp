#include "ibncut/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace ibncut {

int cmp_lex(const IntVec& a, const IntVec& b) {
  int n = std::min(a.dim(), b.dim());
  for (int i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.dim() - b.dim();
}

int cmp_lex(const RatVec& a, const RatVec& b) {
  int n = std::min(a.dim(), b.dim());
  for (int i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.dim() - b.dim();
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = -a[i];
  return r;
}

IntVec operator*(const Int& c, const IntVec& a) {
  IntVec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v.e)
    if (x != 0) return false;
  return true;
}

bool is_nonneg(const IntVec& v) {
  for (const Int& x : v.e)
    if (x < 0) return false;
  return true;
}

Int inf_norm(const IntVec& v) {
  Int m = 0;
  for (const Int& x : v.e) {
    Int a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

IntVec unit_vec(int dim, int i) {
  IntVec v(dim);
  v[i] = 1;
  return v;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.dim());
  for (int i = 0; i < v.dim(); ++i) r[i] = Rat(v[i]);
  return r;
}

std::optional<IntVec> to_int(const RatVec& v) {
  IntVec r(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    r[i] = v[i].get_num();
  }
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (int i = 0; i < a.dim(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

IntMat identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.ncols, m.nrows());
  for (int i = 0; i < m.nrows(); ++i)
    for (int j = 0; j < m.ncols; ++j) t[j][i] = m[i][j];
  return t;
}

IntVec mul_row(const IntVec& v, const IntMat& m) {
  IntVec r(m.ncols);
  for (int j = 0; j < m.ncols; ++j) {
    Int s = 0;
    for (int i = 0; i < m.nrows(); ++i) s += v[i] * m[i][j];
    r[j] = s;
  }
  return r;
}

RatVec mul_row(const RatVec& v, const IntMat& m) {
  RatVec r(m.ncols);
  for (int j = 0; j < m.ncols; ++j) {
    Rat s = 0;
    for (int i = 0; i < m.nrows(); ++i) s += v[i] * Rat(m[i][j]);
    r[j] = s;
  }
  return r;
}

PrimitivePart primitive_part(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v.e) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) return {Int(0), v};
  IntVec w(v.dim());
  for (int i = 0; i < v.dim(); ++i) w[i] = v[i] / g;
  return {g, w};
}

bool is_primitive(const IntVec& v) { return primitive_part(v).g == 1; }

namespace {

// Bareiss in __int128 when a Hadamard-style bound keeps every intermediate
// minor below 2^61. Entries must fit long long.
std::optional<long long> det_small(const IntMat& m) {
  int n = m.nrows();
  if (n > 24) return std::nullopt;
  double log2bound = 0.0;
  std::vector<long long> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (int j = 0; j < n; ++j) {
      auto x = to_ll(m[i][j]);
      if (!x) return std::nullopt;
      a[static_cast<size_t>(i) * n + j] = *x;
      norm2 += static_cast<double>(*x) * static_cast<double>(*x);
    }
    if (norm2 > 0) log2bound += 0.5 * std::log2(norm2);
  }
  if (log2bound > 61.0) return std::nullopt;

  using I128 = __int128;
  std::vector<I128> w(a.begin(), a.end());
  auto at = [&](int i, int j) -> I128& { return w[static_cast<size_t>(i) * n + j]; };
  I128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (at(i, k) != 0) { piv = i; break; }
    if (piv < 0) return 0LL;
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(at(piv, j), at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  I128 d = sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
  return static_cast<long long>(d);
}

Int det_bareiss(const IntMat& m) {
  int n = m.nrows();
  std::vector<std::vector<Int>> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = m[i].e;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (w[i][k] != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(w[piv], w[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w[i][j] = (w[k][k] * w[i][j] - w[i][k] * w[k][j]) / prev;
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  Int d = w[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign > 0 ? d : -d;
}

}  // namespace

Int determinant(const IntMat& m) {
  if (!m.square() || m.nrows() == 0)
    throw Error(ErrorCode::non_square, "determinant requires a square matrix");
  if (auto d = det_small(m)) return Int(static_cast<long>(*d));
  return det_bareiss(m);
}

int rank(const IntMat& m) {
  int nr = m.nrows(), nc = m.ncols;
  std::vector<std::vector<Int>> w(static_cast<size_t>(nr));
  for (int i = 0; i < nr; ++i) w[static_cast<size_t>(i)] = m[i].e;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (w[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[piv], w[r]);
    for (int i = r + 1; i < nr; ++i) {
      if (w[i][c] == 0) continue;
      Int f1 = w[r][c], f2 = w[i][c];
      for (int j = c; j < nc; ++j) w[i][j] = f1 * w[i][j] - f2 * w[r][j];
    }
    ++r;
  }
  return r;
}

SmithResult smith_normal_form(const IntMat& m) {
  if (!m.square() || m.nrows() == 0)
    throw Error(ErrorCode::non_square, "smith normal form requires a square matrix");
  int n = m.nrows();
  IntMat a = m;
  IntMat u = identity(n), v = identity(n), v_inv = identity(n);

  auto row_swap = [&](int i, int j) {
    std::swap(a.rows[i], a.rows[j]);
    std::swap(u.rows[i], u.rows[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    std::swap(v_inv.rows[i], v_inv.rows[j]);
  };
  auto row_addmul = [&](int dst, int src, const Int& f) {
    for (int j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < n; ++j) u[dst][j] += f * u[src][j];
  };
  auto col_addmul = [&](int dst, int src, const Int& f) {
    for (int r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
    for (int r = 0; r < n; ++r) v[r][dst] += f * v[r][src];
    // V <- V*E adds f*col_src to col_dst; V^{-1} <- E^{-1}*V^{-1}
    for (int j = 0; j < n; ++j) v_inv[src][j] -= f * v_inv[dst][j];
  };
  auto row_negate = [&](int i) {
    for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < n; ++j) u[i][j] = -u[i][j];
  };

  for (int t = 0; t < n; ++t) {
    // pick the absolutely smallest nonzero entry as pivot to limit growth
    for (;;) {
      int pi = -1, pj = -1;
      Int best;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          Int ab = abs(a[i][j]);
          if (pi < 0 || ab < best) {
            best = ab;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0)
        throw Error(ErrorCode::singular, "smith normal form requires det != 0");
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);

      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        Int q = floor_div(a[i][t], a[t][t]);
        row_addmul(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      if (!clean) continue;
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = floor_div(a[t][j], a[t][t]);
        col_addmul(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix
      bool divides = true;
      for (int i = t + 1; i < n && divides; ++i)
        for (int j = t + 1; j < n && divides; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            row_addmul(t, i, Int(1));
            divides = false;
          }
        }
      if (divides) break;
    }
    if (a[t][t] < 0) row_negate(t);
  }

  return {u, a, v, v_inv};
}

std::optional<std::vector<Rat>> gauss_solve(std::vector<std::vector<Rat>> a,
                                            std::vector<Rat> b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = 1 / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

RatVec solve_right(const IntMat& m, const IntVec& v) {
  if (!m.square())
    throw Error(ErrorCode::non_square, "solve requires a square matrix");
  int n = m.nrows();
  std::vector<std::vector<Rat>> a(static_cast<size_t>(n),
                                  std::vector<Rat>(static_cast<size_t>(n)));
  std::vector<Rat> b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    b[static_cast<size_t>(i)] = Rat(v[i]);
  }
  auto sol = gauss_solve(std::move(a), std::move(b));
  if (!sol) throw Error(ErrorCode::singular, "singular system");
  RatVec r(n);
  for (int i = 0; i < n; ++i) r[i] = (*sol)[static_cast<size_t>(i)];
  return r;
}

RatVec solve_rational(const IntMat& m, const IntVec& v) {
  return solve_right(transpose(m), v);
}

RatVec ScaledInverse::solve_left(const IntVec& z) const {
  int n = dim();
  RatVec lam(n);
  for (int j = 0; j < n; ++j) {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += z[i] * p[i][j];
    lam[j] = make_rat(s, det);
  }
  return lam;
}

ScaledInverse scaled_inverse(const IntMat& m) {
  if (!m.square())
    throw Error(ErrorCode::non_square, "inverse requires a square matrix");
  int n = m.nrows();
  Int d = determinant(m);
  if (d == 0) throw Error(ErrorCode::singular, "singular matrix");
  // solve m x = d*e_j column by column: x_i = d * (m^{-1})_{ij}
  IntMat p(n, n);
  std::vector<std::vector<Rat>> a(static_cast<size_t>(n),
                                  std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  for (int col = 0; col < n; ++col) {
    std::vector<Rat> b(static_cast<size_t>(n));
    b[static_cast<size_t>(col)] = Rat(d);
    auto sol = gauss_solve(a, b);
    if (!sol) throw Error(ErrorCode::singular, "singular matrix");
    for (int i = 0; i < n; ++i) {
      const Rat& x = (*sol)[static_cast<size_t>(i)];
      p[i][col] = x.get_num();  // denominator is 1 by Cramer
      if (x.get_den() != 1)
        throw Error(ErrorCode::singular, "scaled inverse not integral");
    }
  }
  return {d, p};
}

}  // namespace ibncut
