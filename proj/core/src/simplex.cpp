#include "ibncut/simplex.hpp"

#include <cassert>

namespace ibncut {

FeasibilityResult lp_feasible_eq(const std::vector<std::vector<Rat>>& cols,
                                 const std::vector<Rat>& rhs) {
  size_t m = rhs.size();
  size_t n = cols.size();
  for (const auto& c : cols) assert(c.size() == m);

  // tableau rows: [structural cols | artificial identity | rhs]
  size_t width = n + m + 1;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(width));
  for (size_t i = 0; i < m; ++i) {
    int s = sgn(rhs[i]) < 0 ? -1 : 1;
    for (size_t j = 0; j < n; ++j) t[i][j] = s * cols[j][i];
    t[i][n + i] = 1;
    t[i][width - 1] = s * rhs[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // phase-one objective: minimize sum of artificials. Reduced cost of column
  // j is c_j - sum over rows of c_basis * t[i][j] with c = 1 on artificials.
  auto reduced_cost = [&](size_t j) {
    Rat rc = j >= n ? Rat(1) : Rat(0);
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] >= n) rc -= t[i][j];
    }
    return rc;
  };

  for (;;) {
    // Bland: smallest index with negative reduced cost
    size_t enter = width;
    for (size_t j = 0; j < n + m; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    // ratio test, Bland tie-break on smallest basis index
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded in phase one cannot happen, be safe

    Rat piv = t[leave][enter];
    for (size_t j = 0; j < width; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rat obj = 0;
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) obj += t[i][width - 1];
  }
  FeasibilityResult res;
  res.feasible = (obj == 0);
  if (res.feasible) {
    res.x.assign(n, Rat(0));
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
    }
  }
  return res;
}

}  // namespace ibncut
