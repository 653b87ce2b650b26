#include "ibncut/hilbert.hpp"

#include <algorithm>
#include <map>

#include "ibncut/simplex.hpp"

namespace ibncut {

SimplicialCone SimplicialCone::make(IntMat b) {
  if (!b.square() || b.nrows() == 0)
    throw Error(ErrorCode::non_square, "basis cone requires a square matrix");
  if (determinant(b) == 0)
    throw Error(ErrorCode::singular, "basis cone requires det != 0");
  for (const auto& row : b.rows) {
    if (!is_primitive(row))
      throw Error(ErrorCode::non_primitive, "basis cone rows must be primitive");
  }
  return SimplicialCone{std::move(b)};
}

bool HilbertBasisResult::contains(const IntVec& v) const {
  return std::binary_search(elements.begin(), elements.end(), v,
                            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
}

namespace {

struct PpdPoint {
  IntVec z;
  RatVec lambda;
};

// Walk Smith coset representatives of Z^n / (Z^n * B): with U B V = D the row
// lattice is Z^n D V^{-1}, so x * V^{-1} for x in prod [0, d_i) hits every
// coset once. Each rep is folded into the fundamental parallelepiped by
// subtracting floor(lambda) * B.
std::vector<PpdPoint> ppd_points_with_lambda(const SimplicialCone& c) {
  const IntMat& b = c.basis;
  int n = b.nrows();
  SmithResult snf = smith_normal_form(b);
  ScaledInverse inv = scaled_inverse(b);

  std::vector<Int> diag(static_cast<size_t>(n));
  Int count = 1;
  for (int i = 0; i < n; ++i) {
    diag[static_cast<size_t>(i)] = snf.d[i][i];
    count *= snf.d[i][i];
  }

  std::vector<PpdPoint> out;
  std::vector<Int> x(static_cast<size_t>(n), Int(0));
  for (;;) {
    IntVec z(n);
    for (int j = 0; j < n; ++j) {
      Int s = 0;
      for (int i = 0; i < n; ++i) s += x[static_cast<size_t>(i)] * snf.v_inv[i][j];
      z[j] = s;
    }
    RatVec lam_raw = inv.solve_left(z);
    IntVec folded = z;
    for (int i = 0; i < n; ++i) {
      Int fl = floor_rat(lam_raw[i]);
      if (fl != 0) folded = folded - fl * b[i];
    }
    // verify independently through the generic solver
    RatVec lam = solve_rational(b, folded);
    for (int i = 0; i < n; ++i) {
      if (lam[i] < 0 || lam[i] >= 1)
        throw Error(ErrorCode::singular, "parallelepiped fold left [0,1) range");
    }
    out.push_back({folded, lam});

    int pos = n - 1;
    while (pos >= 0) {
      x[static_cast<size_t>(pos)] += 1;
      if (x[static_cast<size_t>(pos)] < diag[static_cast<size_t>(pos)]) break;
      x[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  if (Int(static_cast<long>(out.size())) != abs(inv.det))
    throw Error(ErrorCode::singular, "coset walk did not produce |det| points");
  return out;
}

}  // namespace

std::vector<IntVec> parallelepiped_points(const SimplicialCone& c) {
  auto pts = ppd_points_with_lambda(c);
  std::vector<IntVec> out;
  out.reserve(pts.size());
  for (auto& p : pts) out.push_back(std::move(p.z));
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return out;
}

HilbertBasisResult minimal_hilbert_basis_simplicial(const SimplicialCone& c) {
  const IntMat& b = c.basis;
  int n = b.nrows();
  auto pts = ppd_points_with_lambda(c);

  std::vector<const PpdPoint*> nonzero;
  for (const auto& p : pts)
    if (!is_zero(p.z)) nonzero.push_back(&p);

  // h is reducible iff some other nonzero parallelepiped point g has
  // lambda(g) <= lambda(h) coordinatewise; then h - g is again a nonzero
  // lattice point of the cone.
  HilbertBasisResult res;
  for (int i = 0; i < n; ++i) {
    RatVec unit(n);
    unit[i] = 1;
    res.elements.push_back(b[i]);
    res.witnesses.push_back({b[i], b, unit});
  }
  for (const PpdPoint* h : nonzero) {
    bool reducible = false;
    for (const PpdPoint* g : nonzero) {
      if (g == h) continue;
      bool dominated = true;
      for (int i = 0; i < n && dominated; ++i)
        if (g->lambda[i] > h->lambda[i]) dominated = false;
      if (dominated) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      res.elements.push_back(h->z);
      res.witnesses.push_back({h->z, b, h->lambda});
    }
  }

  std::vector<size_t> order(res.elements.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t bb) {
    return lex_less(res.elements[a], res.elements[bb]);
  });
  HilbertBasisResult sorted;
  for (size_t i : order) {
    sorted.elements.push_back(std::move(res.elements[i]));
    sorted.witnesses.push_back(std::move(res.witnesses[i]));
  }
  return sorted;
}

bool cone_contains(const std::vector<IntVec>& gens, const IntVec& v) {
  if (gens.empty()) return is_zero(v);
  int n = gens.front().dim();
  std::vector<std::vector<Rat>> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<Rat> col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = Rat(g[i]);
    cols.push_back(std::move(col));
  }
  std::vector<Rat> rhs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rhs[static_cast<size_t>(i)] = Rat(v[i]);
  return lp_feasible_eq(cols, rhs).feasible;
}

bool cone_is_pointed(const std::vector<IntVec>& gens) {
  if (gens.empty()) return true;
  int n = gens.front().dim();
  // pointed iff no convex combination of the generators vanishes
  std::vector<std::vector<Rat>> cols;
  for (const auto& g : gens) {
    std::vector<Rat> col(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = Rat(g[i]);
    col[static_cast<size_t>(n)] = 1;
    cols.push_back(std::move(col));
  }
  std::vector<Rat> rhs(static_cast<size_t>(n) + 1);
  rhs[static_cast<size_t>(n)] = 1;
  return !lp_feasible_eq(cols, rhs).feasible;
}

HilbertBasisResult minimal_hilbert_basis_pointed(const std::vector<IntVec>& gens_in) {
  if (gens_in.empty())
    throw Error(ErrorCode::not_full_rank, "empty generator set");
  int n = gens_in.front().dim();
  for (const auto& g : gens_in) {
    if (g.dim() != n) throw Error(ErrorCode::bad_input, "mixed dimensions");
    if (!is_primitive(g))
      throw Error(ErrorCode::non_primitive, "generators must be primitive");
  }

  std::vector<IntVec> gens = gens_in;
  std::sort(gens.begin(), gens.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  if (rank(IntMat(gens)) < n)
    throw Error(ErrorCode::not_full_rank, "generators do not span R^n");
  if (!cone_is_pointed(gens))
    throw Error(ErrorCode::not_pointed, "cone contains a line");

  int m = static_cast<int>(gens.size());
  std::map<IntVec, HilbertWitness, bool (*)(const IntVec&, const IntVec&)> pool(lex_less);
  for (const auto& g : gens) {
    RatVec unit(1);
    unit[0] = 1;
    IntMat self({g});
    pool.emplace(g, HilbertWitness{g, self, unit});
  }

  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  auto advance = [&]() {
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - n + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  do {
    IntMat sub(n, n);
    for (int i = 0; i < n; ++i) sub[i] = gens[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    if (determinant(sub) == 0) continue;
    auto hb = minimal_hilbert_basis_simplicial(SimplicialCone{sub});
    for (size_t i = 0; i < hb.elements.size(); ++i) {
      pool.emplace(hb.elements[i], hb.witnesses[i]);
    }
  } while (advance());

  // global reduction: drop h when another pool element g leaves h - g in the
  // cone; the survivors are exactly the irreducible lattice points
  std::vector<IntVec> candidates;
  for (const auto& [v, w] : pool) candidates.push_back(v);
  std::sort(candidates.begin(), candidates.end(), [](const IntVec& a, const IntVec& b) {
    Int sa = 0, sb = 0;
    for (const Int& x : a.e) sa += x;
    for (const Int& x : b.e) sb += x;
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
  });

  HilbertBasisResult res;
  for (const auto& h : candidates) {
    bool reducible = false;
    for (const auto& g : candidates) {
      if (g == h) continue;
      IntVec diff = h - g;
      if (is_zero(diff)) continue;
      if (cone_contains(gens, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      res.elements.push_back(h);
      res.witnesses.push_back(pool.at(h));
    }
  }

  std::vector<size_t> order(res.elements.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return lex_less(res.elements[a], res.elements[b]);
  });
  HilbertBasisResult sorted;
  for (size_t i : order) {
    sorted.elements.push_back(std::move(res.elements[i]));
    sorted.witnesses.push_back(std::move(res.witnesses[i]));
  }
  return sorted;
}

}  // namespace ibncut
