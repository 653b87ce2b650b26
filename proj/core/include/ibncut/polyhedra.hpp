#ifndef IBNCUT_POLYHEDRA_HPP
#define IBNCUT_POLYHEDRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "ibncut/linalg.hpp"

namespace ibncut {

// H-form { x : A x <= b }. Rows built by this library are primitive; raw
// input rows are kept as given and only flagged.
struct InequalitySystem {
  IntMat a;
  IntVec b;

  int nrows() const { return a.nrows(); }
  int dim() const { return a.ncols; }
  bool satisfied(const RatVec& x) const;
  bool satisfied(const IntVec& x) const;

  static InequalitySystem make(IntMat a, IntVec b,
                               std::vector<std::string>* warnings = nullptr);
};

struct LatticeBox {
  IntVec lower, upper;  // componentwise lower <= upper

  static LatticeBox make(IntVec lo, IntVec hi);
  static LatticeBox cube(int dim, long radius);
};

struct VRepresentation {
  std::vector<RatVec> vertices;  // lex sorted
  std::vector<IntVec> rays;      // primitive, lex sorted
  bool box_limited = false;      // true when a finite box stood in for an
                                 // unbounded enumeration
};

// All vertices (every nonsingular n-subset of tight rows, filtered by
// feasibility) and all extreme rays of {Ax <= 0}. Throws RANK_DEFICIENT and
// EMPTY.
VRepresentation vertex_enumeration(const InequalitySystem& s);

// Extreme rays of the recession cone {x : Ax <= 0} only.
std::vector<IntVec> extreme_rays(const InequalitySystem& s);

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  RatVec argmax;
};

// max c.x by scanning enumerated vertices; UNBOUNDED when some extreme ray
// improves. Throws RANK_DEFICIENT.
LpResult lp_optimum(const IntVec& c, const InequalitySystem& s);

struct LatticePointsResult {
  std::vector<IntVec> points;  // lex sorted
  LatticeBox box;              // the box actually scanned
  bool box_limited = false;    // box was caller-supplied over an unbounded system
};

// Integer points of S inside the box (AUTO = bounds derived from the
// vertices; requires a bounded polyhedron). Throws UNBOUNDED_NO_BOX.
LatticePointsResult lattice_points(const InequalitySystem& s,
                                   const std::optional<LatticeBox>& box);

struct IlpResult {
  LpStatus status = LpStatus::infeasible;
  Int value;
  IntVec argmax;
  bool box_limited = false;
};

// max c.x over S cap Z^n. UNBOUNDED when an extreme ray r has c.r > 0 and an
// integer point exists.
IlpResult ilp_optimum(const IntVec& c, const InequalitySystem& s,
                      const std::optional<LatticeBox>& box);

// conv(S cap Z^n): vertices are the extreme lattice points, rays copied from
// the recession cone when integer points exist.
VRepresentation integer_hull(const InequalitySystem& s,
                             const std::optional<LatticeBox>& box);

// Exact equality of minimal V-forms: vertex sets equal, primitive ray sets
// equal.
bool same_polyhedron(const VRepresentation& p, const VRepresentation& q);

// Membership of a rational point in conv(points) + cone(rays).
bool in_convex_hull(const RatVec& x, const std::vector<IntVec>& points,
                    const std::vector<IntVec>& rays);

}  // namespace ibncut

#endif
