#ifndef IBNCUT_TESTS_SUPPORT_HPP
#define IBNCUT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "ibncut/hilbert.hpp"
#include "ibncut/linalg.hpp"

namespace testsupport {

using namespace ibncut;

// naive cofactor expansion, the independent determinant route
inline Int det_cofactor(const IntMat& m) {
  int n = m.nrows();
  if (n == 1) return m[0][0];
  Int sum = 0;
  for (int j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[i - 1][cc++] = m[i][c];
      }
    }
    Int term = m[0][j] * det_cofactor(minor);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

// can target be written as a nonnegative integer combination of elems, all
// living in the simplicial cone of `basis`? Sound because any summand of a
// representation is lambda-dominated by the target.
inline bool representable_in_cone(const IntVec& target,
                                  const std::vector<IntVec>& elems,
                                  const IntMat& basis, size_t from = 0) {
  if (is_zero(target)) return true;
  RatVec lt = solve_rational(basis, target);
  for (int i = 0; i < lt.dim(); ++i)
    if (lt[i] < 0) return false;
  for (size_t i = from; i < elems.size(); ++i) {
    RatVec le = solve_rational(basis, elems[i]);
    bool dominated = true;
    for (int j = 0; j < le.dim(); ++j)
      if (le[j] > lt[j]) dominated = false;
    if (!dominated) continue;
    if (representable_in_cone(target - elems[i], elems, basis, i)) return true;
  }
  return false;
}

inline IntVec vec(std::initializer_list<long> xs) { return IntVec(xs); }

inline IntMat random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = d(rng);
  return m;
}

}  // namespace testsupport

#endif
