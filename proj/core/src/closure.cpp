#include "ibncut/closure.hpp"

#include <algorithm>
#include <map>

namespace ibncut {

IntegerPointCache IntegerPointCache::build(const InequalitySystem& s,
                                           const std::optional<LatticeBox>& box) {
  IntegerPointCache c;
  c.rays = extreme_rays(s);
  if (!c.rays.empty() && !box)
    throw Error(ErrorCode::unbounded_no_box,
                "unbounded polyhedron needs an explicit box");
  c.points = lattice_points(s, box);
  return c;
}

namespace {

// m_a over the cached integer points; matches ilp_optimum's statuses
IlpResult cached_max(const IntVec& a, const IntegerPointCache& cache) {
  IlpResult res;
  res.box_limited = cache.points.box_limited;
  if (cache.points.points.empty()) {
    res.status = LpStatus::infeasible;
    return res;
  }
  for (const auto& r : cache.rays) {
    if (dot(a, r) > 0) {
      res.status = LpStatus::unbounded;
      return res;
    }
  }
  bool first = true;
  for (const auto& p : cache.points.points) {
    Int val = dot(a, p);
    if (first || val > res.value) {
      res.value = val;
      res.argmax = p;
      first = false;
    }
  }
  res.status = LpStatus::optimal;
  return res;
}

}  // namespace

TightenResult tighten(const InequalitySystem& s,
                      const std::optional<LatticeBox>& box,
                      const IntegerPointCache* cache) {
  IntegerPointCache local;
  if (!cache) {
    local = IntegerPointCache::build(s, box);
    cache = &local;
  }
  TightenResult res;
  res.beta = IntVec(s.nrows());
  for (int i = 0; i < s.nrows(); ++i) {
    IlpResult r = cached_max(s.a[i], *cache);
    if (r.status == LpStatus::infeasible)
      throw Error(ErrorCode::empty_hull, "system has no integer point");
    if (r.status == LpStatus::unbounded)
      throw Error(ErrorCode::unbounded_no_box,
                  "row objective unbounded; cannot happen for rows of S");
    res.beta[i] = r.value;
    res.box_limited = res.box_limited || r.box_limited;
  }
  res.is_tight = (res.beta == s.b);
  return res;
}

ClosureReport small_closure(const InequalitySystem& s, int k, const RoundLog& log,
                            const std::optional<LatticeBox>& box,
                            const IntegerPointCache* cache) {
  if (k < 0 || k >= static_cast<int>(log.configs.size()))
    throw Error(ErrorCode::bad_input, "round log does not cover requested k");
  const Configuration& normals = log.configs[static_cast<size_t>(k)];

  IntegerPointCache local;
  if (!cache) {
    local = IntegerPointCache::build(s, box);
    cache = &local;
  }
  ClosureReport rep;
  rep.k = k;
  std::vector<IntVec> rows;
  std::vector<Int> rhs;
  for (const IntVec& a : normals.vectors) {
    IlpResult r = cached_max(a, *cache);
    if (r.status == LpStatus::infeasible)
      throw Error(ErrorCode::empty_hull, "system has no integer point");
    if (r.status == LpStatus::unbounded) {
      rep.dropped_normals.push_back(a);
      continue;
    }
    rep.box_limited = rep.box_limited || r.box_limited;
    rows.push_back(a);
    rhs.push_back(r.value);
  }
  if (rows.empty()) throw Error(ErrorCode::bad_input, "all normals dropped");
  IntMat m(std::move(rows));
  IntVec bv(m.nrows());
  for (int i = 0; i < m.nrows(); ++i) bv[i] = rhs[static_cast<size_t>(i)];
  rep.system = InequalitySystem::make(std::move(m), std::move(bv));
  return rep;
}

InequalitySystem chvatal_first_closure(const InequalitySystem& s) {
  VRepresentation rep = vertex_enumeration(s);  // throws EMPTY

  // strongest rhs per primitive normal
  std::map<IntVec, Int, bool (*)(const IntVec&, const IntVec&)> best(lex_less);
  auto offer = [&](const IntVec& normal, const Int& rhs) {
    auto it = best.find(normal);
    if (it == best.end()) {
      best.emplace(normal, rhs);
    } else if (rhs < it->second) {
      it->second = rhs;
    }
  };
  for (int i = 0; i < s.nrows(); ++i) offer(s.a[i], s.b[i]);

  for (const RatVec& v : rep.vertices) {
    std::vector<IntVec> active;
    for (int i = 0; i < s.nrows(); ++i) {
      if (dot(s.a[i], v) == Rat(s.b[i])) {
        auto pp = primitive_part(s.a[i]);
        if (pp.g > 0) active.push_back(pp.w);
      }
    }
    HilbertBasisResult hb = minimal_hilbert_basis_pointed(active);
    for (const IntVec& h : hb.elements) {
      offer(h, floor_rat(dot(h, v)));
    }
  }

  std::vector<IntVec> rows;
  IntVec rhs(static_cast<int>(best.size()));
  int i = 0;
  for (const auto& [normal, r] : best) {
    rows.push_back(normal);
    rhs[i++] = r;
  }
  return InequalitySystem::make(IntMat(std::move(rows)), std::move(rhs));
}

ScrResult scr_of_system(const InequalitySystem& s, const ScrCaps& caps) {
  ScrResult res;
  res.max_k = caps.max_k;
  res.hull = integer_hull(s, caps.box);  // throws EMPTY_HULL

  IntegerPointCache cache = IntegerPointCache::build(s, caps.box);
  TightenResult t = tighten(s, caps.box, &cache);
  res.tight_rhs = t.beta;
  res.input_tight = t.is_tight;

  std::vector<IntVec> raw_rows = s.a.rows;
  Configuration cfg = Configuration::make(raw_rows, &res.warnings);
  if (rank(IntMat(cfg.vectors)) < cfg.dim)
    throw Error(ErrorCode::rank_deficient, "normals must have rank n");

  IbnCaps icaps;
  icaps.max_rounds = caps.max_k;
  icaps.basis_cap = caps.basis_cap;
  res.log = ibn_run(cfg, icaps);
  res.complete = res.log.complete;

  int rounds_avail = static_cast<int>(res.log.configs.size()) - 1;
  for (int k = 0; k <= std::min(caps.max_k, rounds_avail); ++k) {
    ClosureReport rep = small_closure(s, k, res.log, caps.box, &cache);
    VRepresentation v = vertex_enumeration(rep.system);
    bool equal = same_polyhedron(v, res.hull);
    rep.hull_equal = equal;
    res.per_k.push_back(rep);
    if (equal) {
      res.scr = k;
      break;
    }
    // past the fixpoint the closures repeat; no further k can differ
    if (res.log.fixpoint_reached && k >= res.log.fixpoint_round) break;
  }
  if (!res.scr) {
    res.warnings.push_back("no k <= max_k reached the integer hull");
  }
  return res;
}

}  // namespace ibncut
