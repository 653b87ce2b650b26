#ifndef IBNCUT_CLOSURE_HPP
#define IBNCUT_CLOSURE_HPP

#include <optional>
#include <vector>

#include "ibncut/ibn.hpp"
#include "ibncut/polyhedra.hpp"

namespace ibncut {

// One enumeration shared by the many per-normal integer maxima a closure
// needs.
struct IntegerPointCache {
  LatticePointsResult points;
  std::vector<IntVec> rays;

  static IntegerPointCache build(const InequalitySystem& s,
                                 const std::optional<LatticeBox>& box);
};

struct TightenResult {
  IntVec beta;      // beta_i = max a_i.x over the integer points of S
  bool is_tight;    // beta == b
  bool box_limited = false;
};

// Throws EMPTY_HULL when S has no integer point (in the box, if one is
// needed).
TightenResult tighten(const InequalitySystem& s,
                      const std::optional<LatticeBox>& box = std::nullopt,
                      const IntegerPointCache* cache = nullptr);

struct ClosureReport {
  int k = 0;
  InequalitySystem system;              // normals = A^(k), rhs = m_a
  std::vector<IntVec> dropped_normals;  // m_a = +infinity
  std::optional<bool> hull_equal;       // set when compared against Q^I
  bool box_limited = false;
};

// k-th small Chvatal closure of S, m_a computed over the original S. The log
// must cover round k for the primitivized normals of S.
ClosureReport small_closure(const InequalitySystem& s, int k, const RoundLog& log,
                            const std::optional<LatticeBox>& box = std::nullopt,
                            const IntegerPointCache* cache = nullptr);

// Classical first Chvatal closure: cuts h.x <= floor(h.v) from the Hilbert
// basis of every vertex's active cone, unioned with S, strongest rhs per
// normal.
InequalitySystem chvatal_first_closure(const InequalitySystem& s);

struct ScrCaps {
  int max_k = 10;
  unsigned long long basis_cap = 1000000;
  std::optional<LatticeBox> box;
};

struct ScrResult {
  std::optional<int> scr;  // empty means EXCEEDED(max_k)
  int max_k = 0;
  std::vector<ClosureReport> per_k;
  IntVec tight_rhs;  // beta of the input system
  bool input_tight = false;
  VRepresentation hull;
  RoundLog log;
  bool complete = true;
  std::vector<std::string> warnings;
};

// Smallest k with S^(k) = Q^I, via V-form comparison per round.
ScrResult scr_of_system(const InequalitySystem& s, const ScrCaps& caps = ScrCaps{});

}  // namespace ibncut

#endif
