#ifndef IBNCUT_SIMPLEX_HPP
#define IBNCUT_SIMPLEX_HPP

#include <vector>

#include "ibncut/linalg.hpp"

namespace ibncut {

// Exact phase-one simplex: decide whether { x >= 0 : cols * x = rhs } is
// nonempty. `cols` is column-major (cols[j] is the j-th column). Bland's rule,
// so it terminates; everything is mpq.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rat> x;  // a feasible point when feasible
};

FeasibilityResult lp_feasible_eq(const std::vector<std::vector<Rat>>& cols,
                                 const std::vector<Rat>& rhs);

}  // namespace ibncut

#endif
