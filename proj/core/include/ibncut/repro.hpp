#ifndef IBNCUT_REPRO_HPP
#define IBNCUT_REPRO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ibncut/stableset.hpp"

namespace ibncut::repro {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> details;
  std::string summary() const;
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

CriterionResult odd_circuit_family();                       // supernormal-not-unimodular family
CriterionResult lowerbound_suite(int j_only = 0);           // exponential-SCR family
CriterionResult round1_oracle(std::uint64_t seed);          // A_G^(1) vs odd circuits
CriterionResult k5_example();                               // closures of FRAC(K_5)
CriterionResult clawfree_certificates(bool fish_only = false,
                                      bool gt_only = false);
CriterionResult nontermination();                           // 4 rounds, no fixpoint
CriterionResult n2_termination(std::uint64_t seed);         // 100 planar configs
CriterionResult triangle_family();                          // SCR 1 vs high Chvatal rank
CriterionResult ziegler7(std::uint64_t provenance_budget, std::uint64_t seed);
CriterionResult property_suites(std::uint64_t seed);        // norm growth, nonnegativity, oracle

std::vector<CriterionResult> run_all(std::uint64_t seed);

// deterministic helpers shared by the suites
std::vector<Graph> named_round1_graphs();
std::vector<Graph> random_round1_graphs(std::uint64_t seed, int count);

}  // namespace ibncut::repro

#endif
