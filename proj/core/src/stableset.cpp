#include "ibncut/stableset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ibncut/hilbert.hpp"

namespace ibncut {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw Error(ErrorCode::bad_input, "graph needs n >= 1");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::bad_input, "loop edge");
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) throw Error(ErrorCode::bad_input, "vertex out of range");
    if (!seen.insert({u, v}).second)
      throw Error(ErrorCode::bad_input, "duplicate edge");
  }
  std::sort(edges.begin(), edges.end());
  return Graph{n, std::move(edges)};
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return make(n, std::move(e));
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  if (n > 2) e.emplace_back(1, n);
  return make(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return make(n, std::move(e));
}

Graph Graph::wheel(int rim) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < rim; ++i) e.emplace_back(2 + i, 2 + (i + 1) % rim);
  for (int i = 0; i < rim; ++i) e.emplace_back(1, 2 + i);
  return make(rim + 1, std::move(e));
}

Graph Graph::petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) e.emplace_back(1 + i, 1 + (i + 1) % 5);   // outer
  for (int i = 0; i < 5; ++i) e.emplace_back(6 + i, 6 + (i + 2) % 5);   // inner star
  for (int i = 0; i < 5; ++i) e.emplace_back(1 + i, 6 + i);             // spokes
  return make(10, std::move(e));
}

Graph Graph::complement(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= g.n; ++u)
    for (int v = u + 1; v <= g.n; ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return make(g.n, std::move(e));
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  long expect_edges = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;

  auto add_edge = [&](int u, int v, int ln) {
    if (u == v) parse_fail(ln, "loop edge");
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) parse_fail(ln, "vertex out of range");
    if (!seen.insert({u, v}).second) parse_fail(ln, "duplicate edge");
    edges.emplace_back(u, v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (format == GraphFormat::dimacs) {
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag == "c") continue;
      if (tag == "p") {
        std::string kind;
        long m = -1;
        if (!(ls >> kind >> n >> m) || kind != "edge" || n < 1 || m < 0)
          parse_fail(lineno, "malformed problem line");
        expect_edges = m;
        continue;
      }
      if (tag == "e") {
        if (n < 0) parse_fail(lineno, "edge before problem line");
        int u, v;
        if (!(ls >> u >> v)) parse_fail(lineno, "malformed edge line");
        add_edge(u, v, lineno);
        continue;
      }
      parse_fail(lineno, "unknown line tag '" + tag + "'");
    } else {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (n < 0) {
        if (!(ls >> n) || n < 1) parse_fail(lineno, "expected vertex count");
        std::string rest;
        if (ls >> rest) parse_fail(lineno, "trailing tokens after vertex count");
        continue;
      }
      int u, v;
      if (!(ls >> u >> v)) parse_fail(lineno, "expected edge 'u v'");
      std::string rest;
      if (ls >> rest) parse_fail(lineno, "trailing tokens after edge");
      add_edge(u, v, lineno);
    }
  }
  if (n < 0) parse_fail(lineno, "no vertex count found");
  if (expect_edges >= 0 && expect_edges != static_cast<long>(edges.size()))
    parse_fail(lineno, "edge count does not match problem line");
  return Graph::make(n, std::move(edges));
}

StableSetSystem frac_system(const Graph& g) {
  std::vector<IntVec> rows;
  std::vector<Int> rhs;
  for (const auto& [u, v] : g.edges) {
    IntVec r(g.n);
    r[u - 1] = 1;
    r[v - 1] = 1;
    rows.push_back(r);
    rhs.emplace_back(1);
  }
  for (int i = 0; i < g.n; ++i) {
    IntVec r(g.n);
    r[i] = -1;
    rows.push_back(r);
    rhs.emplace_back(0);
  }
  IntMat a(std::move(rows));
  IntVec b(a.nrows());
  for (int i = 0; i < a.nrows(); ++i) b[i] = rhs[static_cast<size_t>(i)];
  return {InequalitySystem::make(std::move(a), std::move(b)), g};
}

Configuration stable_config(const Graph& g) {
  return Configuration::make(frac_system(g).system.a.rows);
}

std::vector<std::vector<int>> odd_circuits(const Graph& g, int max_len,
                                           unsigned long long cap) {
  if (max_len > g.n) max_len = g.n;
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(static_cast<size_t>(g.n) + 1, false);

  // start = smallest vertex of the cycle; reflections killed by requiring
  // path[1] < path.back() at close time
  std::function<void(int, int)> dfs = [&](int start, int v) {
    if (static_cast<int>(path.size()) > max_len) return;
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3) {
        if (path.size() % 2 == 1 && path[1] < path.back()) {
          if (out.size() >= cap)
            throw Error(ErrorCode::cap_exceeded, "odd circuit cap exceeded");
          out.push_back(path);
        }
        continue;
      }
      if (w <= start || used[static_cast<size_t>(w)]) continue;
      if (static_cast<int>(path.size()) == max_len) continue;
      used[static_cast<size_t>(w)] = true;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      used[static_cast<size_t>(w)] = false;
    }
  };

  for (int s = 1; s <= g.n; ++s) {
    path = {s};
    used.assign(static_cast<size_t>(g.n) + 1, false);
    used[static_cast<size_t>(s)] = true;
    dfs(s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Configuration predicted_round1(const Graph& g) {
  std::vector<IntVec> vecs = stable_config(g).vectors;
  for (const auto& c : odd_circuits(g, g.n)) {
    IntVec e(g.n);
    for (int v : c) e[v - 1] = 1;
    vecs.push_back(e);
  }
  return Configuration::make(vecs);
}

namespace {

void mis_branch(const std::vector<uint32_t>& adj, uint32_t candidates, int depth,
                int& best) {
  if (depth + __builtin_popcount(candidates) <= best) return;
  if (candidates == 0) {
    if (depth > best) best = depth;
    return;
  }
  int v = __builtin_ctz(candidates);
  uint32_t rest = candidates & ~(1u << v);
  mis_branch(adj, rest & ~adj[static_cast<size_t>(v)], depth + 1, best);
  mis_branch(adj, rest, depth, best);
}

}  // namespace

int stability_number(const Graph& g) {
  if (g.n > 30) throw Error(ErrorCode::too_large, "stability number limited to n <= 30");
  std::vector<uint32_t> adj(static_cast<size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<size_t>(u - 1)] |= 1u << (v - 1);
    adj[static_cast<size_t>(v - 1)] |= 1u << (u - 1);
  }
  uint32_t all = (1u << g.n) - 1;
  int best = 0;
  mis_branch(adj, all, 0, best);
  return best;
}

namespace {

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

void max_cliques(const Graph& g, std::vector<int>& r, std::vector<int> p,
                 std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    if (r.size() >= 2) out.push_back(r);
    return;
  }
  std::vector<int> p_copy = p;
  for (int v : p_copy) {
    std::vector<int> np, nx;
    for (int w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (int w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    max_cliques(g, r, np, nx, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

bool chordless(const Graph& g, const std::vector<int>& cyc) {
  int len = static_cast<int>(cyc.size());
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;  // cycle edge
      if (g.adjacent(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>(j)])) return false;
    }
  return true;
}

IntVec char_vec(int n, const std::vector<int>& vs) {
  IntVec e(n);
  for (int v : vs) e[v - 1] = 1;
  return e;
}

Graph induced(const Graph& g, const std::vector<int>& vs) {
  std::map<int, int> relabel;
  int k = 0;
  for (int v : vs) relabel[v] = ++k;
  std::vector<std::pair<int, int>> e;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) e.emplace_back(relabel[vs[i]], relabel[vs[j]]);
  return Graph::make(k, std::move(e));
}

}  // namespace

std::vector<KnownNormal> known_normals(const Graph& g, InequalityClass cls,
                                       const std::vector<int>& subset) {
  std::vector<KnownNormal> out;
  switch (cls) {
    case InequalityClass::clique: {
      std::vector<int> r, p, x;
      for (int v = 1; v <= g.n; ++v) p.push_back(v);
      std::vector<std::vector<int>> cliques;
      max_cliques(g, r, p, x, cliques);
      std::sort(cliques.begin(), cliques.end());
      for (auto& K : cliques) {
        std::sort(K.begin(), K.end());
        out.push_back({char_vec(g.n, K), Int(1), K});
      }
      break;
    }
    case InequalityClass::odd_hole: {
      for (const auto& c : odd_circuits(g, g.n)) {
        if (c.size() < 5 || !chordless(g, c)) continue;
        std::vector<int> vs = c;
        std::sort(vs.begin(), vs.end());
        out.push_back({char_vec(g.n, vs), Int((c.size() - 1) / 2), vs});
      }
      break;
    }
    case InequalityClass::odd_antihole: {
      Graph comp = Graph::complement(g);
      std::set<std::vector<int>> seen;
      for (const auto& c : odd_circuits(comp, comp.n)) {
        if (c.size() < 5 || !chordless(comp, c)) continue;
        std::vector<int> vs = c;
        std::sort(vs.begin(), vs.end());
        if (!seen.insert(vs).second) continue;
        out.push_back({char_vec(g.n, vs), Int(2), vs});
      }
      break;
    }
    case InequalityClass::odd_wheel: {
      for (int hub = 1; hub <= g.n; ++hub) {
        std::vector<int> nb = g.neighbors(hub);
        if (nb.size() < 3) continue;
        Graph sub = induced(g, nb);
        for (const auto& c : odd_circuits(sub, sub.n)) {
          // rim must use every hub neighbor in the wheel, any odd cycle works
          std::vector<int> rim;
          for (int idx : c) rim.push_back(nb[static_cast<size_t>(idx - 1)]);
          IntVec normal(g.n);
          for (int v : rim) normal[v - 1] = 1;
          Int half = Int(static_cast<long>(rim.size() + 1) - 2) / 2;
          normal[hub - 1] = half;
          std::vector<int> vs = rim;
          vs.push_back(hub);
          std::sort(vs.begin(), vs.end());
          out.push_back({normal, half, vs});
        }
      }
      break;
    }
    case InequalityClass::rank: {
      if (subset.empty())
        throw Error(ErrorCode::bad_input, "rank class needs a vertex subset");
      std::vector<int> vs = subset;
      std::sort(vs.begin(), vs.end());
      Graph sub = induced(g, vs);
      out.push_back({char_vec(g.n, vs), Int(stability_number(sub)), vs});
      break;
    }
  }
  return out;
}

WitnessBasis wheel_witness_basis(int k) {
  if (k < 2) throw Error(ErrorCode::bad_input, "k must be >= 2");
  int rim = 2 * k - 1;
  int n = 2 * k;  // hub is coordinate 0
  std::vector<IntVec> rows;
  for (int i = 1; i <= rim; ++i) {
    IntVec r(n);
    r[0] = 1;
    r[i] = 1;
    r[i % rim + 1] = 1;
    rows.push_back(r);
  }
  IntVec neg(n);
  neg[0] = -1;
  rows.push_back(neg);
  IntMat b(std::move(rows));
  IntVec sum(n);
  for (const auto& r : b.rows) sum = sum + r;
  IntVec normal(n);
  for (int i = 0; i < n; ++i) {
    if (sum[i] % 2 != 0)
      throw Error(ErrorCode::bad_input, "row sum not even");
    normal[i] = sum[i] / 2;
  }
  return {std::move(b), std::move(normal)};
}

WitnessBasis antihole_witness_basis(int n) {
  if (n < 6 || n % 2 != 0)
    throw Error(ErrorCode::bad_input, "even antihole basis needs even n >= 6");
  std::vector<IntVec> rows;
  for (int i = 0; i < n; ++i) {
    IntVec r(n);
    for (int j = 0; j < n; ++j) r[j] = (i == j) ? 0 : 1;
    rows.push_back(r);
  }
  IntVec normal(n);
  for (int i = 0; i < n; ++i) normal[i] = 1;
  return {IntMat(std::move(rows)), std::move(normal)};
}

Graph line_graph(const Graph& g) {
  int m = static_cast<int>(g.edges.size());
  if (m == 0) throw Error(ErrorCode::bad_input, "line graph of an edgeless graph");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& [a, b] = g.edges[static_cast<size_t>(i)];
      const auto& [c, d] = g.edges[static_cast<size_t>(j)];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i + 1, j + 1);
    }
  return Graph::make(m, std::move(e));
}

Graph product_graph(const Graph& g1, const Graph& g2) {
  int n = g1.n + g2.n;
  std::vector<std::pair<int, int>> e = g1.edges;
  for (const auto& [u, v] : g2.edges) e.emplace_back(g1.n + u, g1.n + v);
  for (int u = 1; u <= g1.n; ++u)
    for (int v = 1; v <= g2.n; ++v) e.emplace_back(u, g1.n + v);
  return Graph::make(n, std::move(e));
}

VerifyResult verify_certificate(const FacetCertificate& c) {
  int n = c.normal.dim();
  if (c.basis.nrows() != n || c.basis.ncols != n || c.lambda.dim() != n)
    return {false, "DIMENSIONS"};
  if (!c.rows.empty() && static_cast<int>(c.rows.size()) != n)
    return {false, "DIMENSIONS"};

  if (determinant(c.basis) == 0) return {false, "NONSINGULAR_BASIS"};

  RatVec prod = mul_row(c.lambda, c.basis);
  for (int j = 0; j < n; ++j) {
    if (prod[j] != Rat(c.normal[j])) return {false, "LAMBDA_PRODUCT"};
  }
  for (int i = 0; i < n; ++i) {
    if (c.lambda[i] < 0 || c.lambda[i] >= 1) return {false, "LAMBDA_RANGE"};
  }

  for (size_t i = 0; i < c.rows.size(); ++i) {
    const auto& info = c.rows[i];
    const IntVec& row = c.basis[static_cast<int>(i)];
    int ones = 0, negs = 0, other = 0;
    for (int j = 0; j < n; ++j) {
      if (row[j] == 1) ++ones;
      else if (row[j] == -1) ++negs;
      else if (row[j] != 0) ++other;
    }
    switch (info.kind) {
      case FacetCertificate::RowKind::edge:
        if (other != 0 || negs != 0 || ones != 2) return {false, "ROW_STRUCTURE"};
        break;
      case FacetCertificate::RowKind::neg_unit:
        if (other != 0 || ones != 0 || negs != 1) return {false, "ROW_STRUCTURE"};
        break;
      case FacetCertificate::RowKind::odd_circuit: {
        if (other != 0 || negs != 0 || ones < 3 || ones % 2 == 0)
          return {false, "ROW_STRUCTURE"};
        if (!info.circuit.empty()) {
          if (info.circuit.size() % 2 == 0) return {false, "ROW_STRUCTURE"};
          std::set<int> support(info.circuit.begin(), info.circuit.end());
          if (static_cast<int>(support.size()) != ones) return {false, "ROW_STRUCTURE"};
          for (int v : support) {
            if (v < 1 || v > n || row[v - 1] != 1) return {false, "ROW_STRUCTURE"};
          }
        }
        break;
      }
      case FacetCertificate::RowKind::generic:
        break;
    }
  }

  if (c.coordinate_permutation) {
    if (!c.original_normal ||
        static_cast<int>(c.coordinate_permutation->size()) != n)
      return {false, "PERMUTATION"};
    for (int i = 0; i < n; ++i) {
      int p = (*c.coordinate_permutation)[static_cast<size_t>(i)];
      if (p < 1 || p > n) return {false, "PERMUTATION"};
      if (c.normal[i] != (*c.original_normal)[p - 1]) return {false, "PERMUTATION"};
    }
  }

  HilbertBasisResult hb = minimal_hilbert_basis_simplicial(SimplicialCone{c.basis});
  if (!hb.contains(c.normal)) return {false, "HILBERT_MEMBERSHIP"};
  return {true, ""};
}

}  // namespace ibncut
