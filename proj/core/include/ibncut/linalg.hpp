#ifndef IBNCUT_LINALG_HPP
#define IBNCUT_LINALG_HPP

#include <initializer_list>
#include <vector>

#include "ibncut/numeric.hpp"

namespace ibncut {

// Exact integer vector. Convention throughout: vectors are rows and act on
// matrices from the left (lambda * B = v), matching the dual view where
// configurations are inequality normals.
struct IntVec {
  std::vector<Int> e;

  IntVec() = default;
  explicit IntVec(int dim) : e(static_cast<size_t>(dim)) {}
  IntVec(std::initializer_list<long> xs) {
    e.reserve(xs.size());
    for (long x : xs) e.emplace_back(x);
  }

  int dim() const { return static_cast<int>(e.size()); }
  Int& operator[](int i) { return e[static_cast<size_t>(i)]; }
  const Int& operator[](int i) const { return e[static_cast<size_t>(i)]; }

  bool operator==(const IntVec& o) const { return e == o.e; }
  bool operator!=(const IntVec& o) const { return !(*this == o); }
};

// lexicographic order, entries compared exactly
int cmp_lex(const IntVec& a, const IntVec& b);
inline bool lex_less(const IntVec& a, const IntVec& b) { return cmp_lex(a, b) < 0; }

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Int& c, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
bool is_nonneg(const IntVec& v);
Int inf_norm(const IntVec& v);
IntVec unit_vec(int dim, int i);

struct RatVec {
  std::vector<Rat> e;

  RatVec() = default;
  explicit RatVec(int dim) : e(static_cast<size_t>(dim)) {}

  int dim() const { return static_cast<int>(e.size()); }
  Rat& operator[](int i) { return e[static_cast<size_t>(i)]; }
  const Rat& operator[](int i) const { return e[static_cast<size_t>(i)]; }

  bool operator==(const RatVec& o) const { return e == o.e; }
  bool operator!=(const RatVec& o) const { return !(*this == o); }
};

int cmp_lex(const RatVec& a, const RatVec& b);
inline bool lex_less(const RatVec& a, const RatVec& b) { return cmp_lex(a, b) < 0; }
RatVec to_rat(const IntVec& v);
// returns the integer vector when every entry has denominator 1
std::optional<IntVec> to_int(const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

struct IntMat {
  std::vector<IntVec> rows;
  int ncols = 0;

  IntMat() = default;
  IntMat(int nr, int nc) : rows(static_cast<size_t>(nr), IntVec(nc)), ncols(nc) {}
  explicit IntMat(std::vector<IntVec> r) : rows(std::move(r)) {
    ncols = rows.empty() ? 0 : rows.front().dim();
  }
  IntMat(std::initializer_list<IntVec> r) : rows(r) {
    ncols = rows.empty() ? 0 : rows.front().dim();
  }

  int nrows() const { return static_cast<int>(rows.size()); }
  IntVec& operator[](int i) { return rows[static_cast<size_t>(i)]; }
  const IntVec& operator[](int i) const { return rows[static_cast<size_t>(i)]; }
  bool square() const { return nrows() == ncols; }

  bool operator==(const IntMat& o) const { return ncols == o.ncols && rows == o.rows; }
};

IntMat identity(int n);
IntMat transpose(const IntMat& m);
// row * M for a row vector
IntVec mul_row(const IntVec& v, const IntMat& m);
RatVec mul_row(const RatVec& v, const IntMat& m);

struct PrimitivePart {
  Int g;    // gcd of |entries|, 0 for the zero vector
  IntVec w; // v/g when g > 0, v itself when v = 0
};

PrimitivePart primitive_part(const IntVec& v);
bool is_primitive(const IntVec& v);

Int determinant(const IntMat& m);  // throws NON_SQUARE
int rank(const IntMat& m);

struct SmithResult {
  IntMat u, d, v;      // u * m * v = d, u and v unimodular, d diagonal
  IntMat v_inv;        // inverse of v, kept for coset enumeration
};

SmithResult smith_normal_form(const IntMat& m);  // throws NON_SQUARE, SINGULAR

// solves lambda * m = v exactly (row convention); throws SINGULAR
RatVec solve_rational(const IntMat& m, const IntVec& v);
// solves m * x = v (column convention)
RatVec solve_right(const IntMat& m, const IntVec& v);

// p = det(m) * m^{-1}, an integer matrix; lets callers solve many systems
// against the same basis without repeating the elimination
struct ScaledInverse {
  Int det;
  IntMat p;
  int dim() const { return p.nrows(); }
  // lambda = z * m^{-1} as exact rationals
  RatVec solve_left(const IntVec& z) const;
};

ScaledInverse scaled_inverse(const IntMat& m);  // throws SINGULAR

// exact rational elimination; empty result when the system is singular
std::optional<std::vector<Rat>> gauss_solve(std::vector<std::vector<Rat>> a,
                                            std::vector<Rat> b);

}  // namespace ibncut

#endif
