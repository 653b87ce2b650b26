#ifndef IBNCUT_HILBERT_HPP
#define IBNCUT_HILBERT_HPP

#include <vector>

#include "ibncut/linalg.hpp"

namespace ibncut {

// A full-dimensional simplicial cone given by n linearly independent
// primitive rows.
struct SimplicialCone {
  IntMat basis;

  static SimplicialCone make(IntMat b);  // validates squareness, det, primitivity
};

struct HilbertWitness {
  IntVec element;
  IntMat basis_rows;  // generators the coefficients refer to
  RatVec lambda;      // element = lambda * basis_rows, entries in [0,1);
                      // a generator carries its unit coefficient vector
};

struct HilbertBasisResult {
  std::vector<IntVec> elements;  // canonically sorted, generators included
  std::vector<HilbertWitness> witnesses;

  bool contains(const IntVec& v) const;
};

// All lattice points z with z = lambda * basis, lambda in [0,1)^n, the origin
// included; exactly |det| of them, found by walking Smith coset
// representatives and verified against solve_rational.
std::vector<IntVec> parallelepiped_points(const SimplicialCone& c);

// Unique minimal Hilbert basis of a simplicial cone: generators plus the
// irreducible nonzero parallelepiped points.
HilbertBasisResult minimal_hilbert_basis_simplicial(const SimplicialCone& c);

// Membership v in cone(gens) over the nonnegative rationals.
bool cone_contains(const std::vector<IntVec>& gens, const IntVec& v);

// Nonzero x with x and -x both in the cone?
bool cone_is_pointed(const std::vector<IntVec>& gens);

// Unique minimal Hilbert basis of a pointed full-dimensional cone: union of
// the simplicial Hilbert bases over all nonsingular n-subsets, globally
// reduced. Throws NOT_POINTED / NOT_FULL_RANK.
HilbertBasisResult minimal_hilbert_basis_pointed(const std::vector<IntVec>& gens);

}  // namespace ibncut

#endif
