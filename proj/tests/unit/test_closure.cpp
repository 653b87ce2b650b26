#include <doctest.h>

#include "ibncut/closure.hpp"
#include "ibncut/stableset.hpp"
#include "support.hpp"

using namespace ibncut;
using testsupport::vec;

namespace {

InequalitySystem schrijver_triangle(long j) {
  IntMat a(3, 2);
  a[0][0] = -1;
  a[1][0] = 1;
  a[1][1] = 2 * j;
  a[2][0] = 1;
  a[2][1] = -2 * j;
  IntVec b(3);
  b[1] = 2 * j;
  return InequalitySystem::make(a, b);
}

RoundLog ibn_for(const InequalitySystem& s, int rounds) {
  IbnCaps caps;
  caps.max_rounds = rounds;
  return ibn_run(Configuration::make(s.a.rows), caps);
}

}  // namespace

TEST_CASE("tighten") {
  auto k3 = frac_system(Graph::complete(3)).system;
  auto t = tighten(k3);
  CHECK(t.is_tight);
  CHECK(t.beta == k3.b);

  auto tri = schrijver_triangle(2);
  auto tt = tighten(tri);
  CHECK(tt.is_tight);
  CHECK(tt.beta == vec({0, 4, 0}));

  // parity: max 2x1+2x2 over integer points is 0, below the rhs 1 (the
  // system is an unbounded cone, so enumeration works inside a box)
  IntMat a({vec({1, 0}), vec({0, 1}), vec({2, 2})});
  std::vector<std::string> warnings;
  auto odd = InequalitySystem::make(a, vec({0, 0, 1}), &warnings);
  CHECK(warnings.size() == 1);  // non-primitive row kept
  auto box = LatticeBox::cube(2, 6);
  auto to = tighten(odd, box);
  CHECK(!to.is_tight);
  CHECK(to.beta == vec({0, 0, 0}));
  CHECK(to.box_limited);

  // idempotence: tightening the tightened system changes nothing
  InequalitySystem tightened = InequalitySystem::make(odd.a, to.beta);
  CHECK(tighten(tightened, box).beta == to.beta);

  IntMat empty_a({vec({1}), vec({-1})});
  CHECK_THROWS_AS(tighten(InequalitySystem::make(empty_a, vec({-1, 0}))), Error);
}

TEST_CASE("small closure round zero returns the tightened system") {
  auto k3 = frac_system(Graph::complete(3)).system;
  RoundLog log = ibn_for(k3, 1);
  ClosureReport rep = small_closure(k3, 0, log);
  CHECK(rep.system.nrows() == k3.nrows());
  CHECK(rep.dropped_normals.empty());
  // tight input: same rows, same rhs, up to canonical row order
  auto t = tighten(k3);
  for (int i = 0; i < rep.system.nrows(); ++i) {
    bool found = false;
    for (int jj = 0; jj < k3.nrows(); ++jj) {
      if (rep.system.a[i] == k3.a[jj] && rep.system.b[i] == t.beta[jj]) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("small closure adds the clique and odd-hole rows") {
  auto k5 = frac_system(Graph::complete(5)).system;
  RoundLog log5 = ibn_for(k5, 1);
  ClosureReport rep5 = small_closure(k5, 1, log5);
  bool clique = false;
  for (int i = 0; i < rep5.system.nrows(); ++i) {
    if (rep5.system.a[i] == vec({1, 1, 1, 1, 1}) && rep5.system.b[i] == 1) clique = true;
  }
  CHECK(clique);

  auto c5 = frac_system(Graph::cycle(5)).system;
  RoundLog logc = ibn_for(c5, 1);
  ClosureReport repc = small_closure(c5, 1, logc);
  bool hole = false;
  for (int i = 0; i < repc.system.nrows(); ++i) {
    if (repc.system.a[i] == vec({1, 1, 1, 1, 1}) && repc.system.b[i] == 2) hole = true;
  }
  CHECK(hole);
}

TEST_CASE("first chvatal closure") {
  // bipartite: no cutting happens, the polyhedron is unchanged
  auto c4 = frac_system(Graph::cycle(4)).system;
  auto q1 = chvatal_first_closure(c4);
  CHECK(same_polyhedron(vertex_enumeration(q1), vertex_enumeration(c4)));

  auto k3 = frac_system(Graph::complete(3)).system;
  auto q = chvatal_first_closure(k3);
  bool has_triangle_cut = false;
  for (int i = 0; i < q.nrows(); ++i) {
    if (q.a[i] == vec({1, 1, 1}) && q.b[i] == 1) has_triangle_cut = true;
  }
  CHECK(has_triangle_cut);
  CHECK(same_polyhedron(vertex_enumeration(q), integer_hull(k3, std::nullopt)));
}

TEST_CASE("small closure is sandwiched between hull and chvatal closure") {
  auto k3 = frac_system(Graph::complete(3)).system;
  RoundLog log = ibn_for(k3, 1);
  ClosureReport rep = small_closure(k3, 1, log);
  auto sv = vertex_enumeration(rep.system);
  auto q1 = chvatal_first_closure(k3);
  // S^(1) subset of Q^(1): every vertex of S^(1) satisfies Q^(1)
  for (const auto& v : sv.vertices) CHECK(q1.satisfied(v));
  // S^(1) subset of S^(0)
  ClosureReport rep0 = small_closure(k3, 0, log);
  for (const auto& v : sv.vertices) CHECK(rep0.system.satisfied(v));
  // integer points survive in the closure
  auto before = lattice_points(k3, std::nullopt);
  auto after = lattice_points(rep.system, std::nullopt);
  CHECK(before.points == after.points);
}

TEST_CASE("scr of small systems") {
  auto k3 = frac_system(Graph::complete(3)).system;
  ScrCaps caps;
  caps.max_k = 3;
  auto r3 = scr_of_system(k3, caps);
  CHECK(r3.scr == 1);
  CHECK(r3.input_tight);

  auto p3 = frac_system(Graph::path(3)).system;  // bipartite
  auto rp = scr_of_system(p3, caps);
  CHECK(rp.scr == 0);

  auto tri = scr_of_system(schrijver_triangle(3), caps);
  CHECK(tri.scr == 1);
}

TEST_CASE("scr errors") {
  IntMat a({vec({1}), vec({-1})});
  auto empty = InequalitySystem::make(a, vec({-1, 0}));
  ScrCaps caps;
  CHECK_THROWS_AS(scr_of_system(empty, caps), Error);
}
