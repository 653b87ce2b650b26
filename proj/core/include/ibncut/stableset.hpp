#ifndef IBNCUT_STABLESET_HPP
#define IBNCUT_STABLESET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ibncut/ibn.hpp"
#include "ibncut/polyhedra.hpp"

namespace ibncut {

// Simple undirected graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted

  static Graph make(int n, std::vector<std::pair<int, int>> edges);
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph wheel(int rim);  // hub 1 joined to a rim cycle 2..rim+1
  static Graph petersen();
  static Graph complement(const Graph& g);
};

enum class GraphFormat { edgelist, dimacs };

// EDGELIST: first line n, then one "u v" per line. DIMACS: c/p/e lines.
// Throws PARSE_ERROR with a line number.
Graph parse_graph(const std::string& text, GraphFormat format);

struct StableSetSystem {
  InequalitySystem system;  // |E| edge rows then n nonnegativity rows
  Graph graph;
};

StableSetSystem frac_system(const Graph& g);

// the IBN input A_G: edge vectors e_i + e_j and the negated units
Configuration stable_config(const Graph& g);

// Simple cycles of odd length <= max_len, one representative per
// rotation/reflection class, sorted. Throws on cap.
std::vector<std::vector<int>> odd_circuits(const Graph& g, int max_len,
                                           unsigned long long cap = 1000000);

// A_G together with the characteristic vectors of the odd circuits: the
// oracle for round one.
Configuration predicted_round1(const Graph& g);

int stability_number(const Graph& g);  // exact; throws TOO_LARGE beyond n=30

enum class InequalityClass { clique, odd_hole, odd_antihole, odd_wheel, rank };

struct KnownNormal {
  IntVec normal;
  Int rhs;
  std::vector<int> support;  // vertices of the defining substructure
};

// Normals and right-hand sides of the named valid-inequality classes found
// in g. For `rank`, `subset` names the subgraph. Throws NOT_FOUND-style
// (empty result) when the substructure is absent.
std::vector<KnownNormal> known_normals(const Graph& g, InequalityClass cls,
                                       const std::vector<int>& subset = {});

// 2k x 2k basis: the 2k-1 triangles of an odd wheel plus -e_hub; the normal
// is half the row sum.
struct WitnessBasis {
  IntMat basis;
  IntVec normal;
};
WitnessBasis wheel_witness_basis(int k);
WitnessBasis antihole_witness_basis(int n);  // n even >= 6: J - I and the ones vector

Graph line_graph(const Graph& g);
Graph product_graph(const Graph& g1, const Graph& g2);

struct FacetCertificate {
  std::string name;
  std::string version;
  IntVec normal;
  std::optional<Int> rhs;
  IntMat basis;
  RatVec lambda;
  int round_claimed = 0;

  enum class RowKind { edge, odd_circuit, neg_unit, generic };
  struct RowInfo {
    RowKind kind = RowKind::generic;
    std::vector<int> circuit;  // vertex list when the paper prints one
  };
  std::vector<RowInfo> rows;

  // paper presentation in original coordinates, when permuted
  std::optional<std::vector<int>> coordinate_permutation;
  std::optional<IntVec> original_normal;
};

struct VerifyResult {
  bool ok = false;
  std::string failed_check;  // first failed check when !ok
};

VerifyResult verify_certificate(const FacetCertificate& c);

}  // namespace ibncut

#endif
