#ifndef IBNCUT_SUPERNORMAL_HPP
#define IBNCUT_SUPERNORMAL_HPP

#include <optional>
#include <string>

#include "ibncut/closure.hpp"
#include "ibncut/ibn.hpp"

namespace ibncut {

struct Decision {
  bool verdict = false;
  bool complete = true;  // false when a cap truncated the basis sweep
  unsigned long long bases_checked = 0;
  std::string note;

  // certificate for a false verdict
  IntMat violating_basis;
  std::optional<Int> bad_determinant;    // unimodularity failures
  std::optional<IntVec> missing_element; // supernormality failures

  // scr-zero only: a concrete tight, non-integral system
  std::optional<InequalitySystem> witness_system;
  std::optional<RatVec> fractional_vertex;
  std::optional<std::vector<IntVec>> tightness_points;  // row i achiever
};

// Deciders reject non-primitive vectors (NON_PRIMITIVE) and rank-deficient
// input (RANK_DEFICIENT).
Decision is_unimodular(const std::vector<IntVec>& vectors,
                       unsigned long long basis_cap = IbnCaps{}.basis_cap);
Decision is_supernormal(const std::vector<IntVec>& vectors,
                        unsigned long long basis_cap = IbnCaps{}.basis_cap);
Decision scr_zero_decision(const std::vector<IntVec>& vectors,
                           unsigned long long basis_cap = IbnCaps{}.basis_cap);

// (2k+1) x (2k+1) edge-vertex incidence matrix of an odd circuit.
Configuration odd_circuit_incidence(int k);

// rows (1,0,0), (0,1,0), (1,j,2j-1); j >= 2
Configuration lowerbound_family(int j);

// predicted A^(k) of the lower-bound family: {(0,1,0)} plus (1,a,b) for the
// integer points of the polygon R^k
Configuration predict_Rk(int j, int k);

}  // namespace ibncut

#endif
