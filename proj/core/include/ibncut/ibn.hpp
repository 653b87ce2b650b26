#ifndef IBNCUT_IBN_HPP
#define IBNCUT_IBN_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ibncut/hilbert.hpp"
#include "ibncut/linalg.hpp"

namespace ibncut {

// Canonically ordered set of primitive vectors of a common dimension.
struct Configuration {
  int dim = 0;
  std::vector<IntVec> vectors;  // lex sorted, no duplicates

  // Normalizes non-primitive rows to their primitive part (recording a
  // warning), drops duplicates, sorts. Zero vectors are rejected.
  static Configuration make(std::vector<IntVec> vs,
                            std::vector<std::string>* warnings = nullptr);

  int size() const { return static_cast<int>(vectors.size()); }
  bool contains(const IntVec& v) const;
  bool operator==(const Configuration& o) const {
    return dim == o.dim && vectors == o.vectors;
  }
};

struct IbnCaps {
  int max_rounds = 10;
  unsigned long long basis_cap = 1000000;  // n-subsets examined per round
};

struct BasisEnumStats {
  unsigned long long subsets_examined = 0;
  unsigned long long bases_found = 0;
  bool truncated = false;
};

// Visits the nonsingular n-subsets of cfg in lexicographic index order, up to
// cap examined subsets. The callback gets the row indices.
BasisEnumStats enumerate_bases(const Configuration& cfg, unsigned long long cap,
                               const std::function<void(const std::vector<int>&)>& visit);

struct RoundWitness {
  IntVec element;
  IntMat basis;    // rows of the producing basis cone
  RatVec lambda;   // element = lambda * basis, entries in [0,1)
  int round = 0;   // 0 marks an original generator
};

struct RoundInfo {
  int round = 0;
  std::vector<IntVec> added;  // canonical order
  std::vector<RoundWitness> witnesses;
  unsigned long long subsets_examined = 0;
  unsigned long long bases_examined = 0;
  unsigned long long hilbert_cones = 0;  // non-unimodular cones processed
  bool truncated = false;
};

struct RoundLog {
  Configuration initial;
  std::vector<Configuration> configs;  // configs[k] = A^(k)
  std::vector<RoundInfo> rounds;       // rounds[k-1] describes round k
  int rounds_completed = 0;
  bool fixpoint_reached = false;
  int fixpoint_round = -1;  // smallest k with A^(k+1) = A^(k)
  bool complete = true;     // false once any round hit the basis cap
  std::vector<std::string> warnings;

  const Configuration& final_config() const { return configs.back(); }
};

// One round: cfg union all minimal Hilbert bases of all basis cones.
Configuration ibn_round(const Configuration& cfg,
                        unsigned long long basis_cap = IbnCaps{}.basis_cap,
                        RoundInfo* info = nullptr);

// Full driver; throws NOT_FULL_RANK when rank < n.
RoundLog ibn_run(const Configuration& cfg, const IbnCaps& caps = IbnCaps{});

std::optional<RoundWitness> witness_for(const RoundLog& log, const IntVec& v);

}  // namespace ibncut

#endif
