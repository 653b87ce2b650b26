#include <doctest.h>

#include "ibncut/polyhedra.hpp"
#include "ibncut/stableset.hpp"
#include "support.hpp"

using namespace ibncut;
using testsupport::vec;

namespace {

InequalitySystem unit_square() {
  IntMat a({vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})});
  IntVec b = vec({1, 1, 0, 0});
  return InequalitySystem::make(a, b);
}

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

RatVec rvec(std::initializer_list<Rat> xs) {
  RatVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("vertex enumeration on the unit square") {
  auto rep = vertex_enumeration(unit_square());
  CHECK(rep.vertices.size() == 4);
  CHECK(rep.rays.empty());
}

TEST_CASE("vertex enumeration on the Schrijver triangle") {
  auto rep = vertex_enumeration(schrijver_triangle(2));
  REQUIRE(rep.vertices.size() == 3);
  CHECK(rep.vertices[0] == rvec({0, 0}));
  CHECK(rep.vertices[1] == rvec({0, 1}));
  CHECK(rep.vertices[2] == rvec({2, make_rat(1, 2)}));
}

TEST_CASE("vertex enumeration on FRAC(K_3)") {
  auto s = frac_system(Graph::complete(3)).system;
  auto rep = vertex_enumeration(s);
  CHECK(rep.vertices.size() == 5);  // 0, three units, all-halves
  bool has_half = false;
  for (const auto& v : rep.vertices) {
    if (v == rvec({make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)})) has_half = true;
  }
  CHECK(has_half);
  // every vertex satisfies the system and rays are absent
  for (const auto& v : rep.vertices) CHECK(s.satisfied(v));
  CHECK(rep.rays.empty());
}

TEST_CASE("vertex enumeration errors") {
  IntMat a({vec({1, 0})});
  CHECK_THROWS_AS(vertex_enumeration(InequalitySystem::make(a, vec({1}))), Error);
  // empty: x <= -1, -x <= 0
  IntMat e({vec({1}), vec({-1})});
  CHECK_THROWS_AS(vertex_enumeration(InequalitySystem::make(e, vec({-1, 0}))), Error);
}

TEST_CASE("extreme rays are primitive and feasible") {
  // cone x1 <= 0, x2 <= 0, x1 + 2x2 + 3x3 <= 1
  IntMat a({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 3})});
  auto s = InequalitySystem::make(a, vec({0, 0, 1}));
  auto rep = vertex_enumeration(s);
  CHECK(rep.rays.size() == 3);
  for (const auto& r : rep.rays) {
    CHECK(is_primitive(r));
    for (int i = 0; i < 3; ++i) CHECK(dot(s.a[i], r) <= 0);
  }
}

TEST_CASE("lp optimum") {
  auto sq = lp_optimum(vec({1, 1}), unit_square());
  CHECK(sq.status == LpStatus::optimal);
  CHECK(sq.value == 2);

  // apex of the simplex cone x1 <= 0, x2 <= 0, x1+2x2+3x3 <= 1 is (0,0,1/3)
  IntMat a({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 3})});
  auto r = lp_optimum(vec({1, 2, 3}), InequalitySystem::make(a, vec({0, 0, 1})));
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == 1);
  CHECK(r.argmax[2] == make_rat(1, 3));

  IntMat low({vec({1, 0})});
  CHECK_THROWS_AS(lp_optimum(vec({-1, 0}), InequalitySystem::make(low, vec({0}))), Error);

  // x3 alone is unbounded: the recession ray (0,-3,2) improves it
  auto unb = lp_optimum(vec({0, 0, 1}), InequalitySystem::make(a, vec({0, 0, 1})));
  CHECK(unb.status == LpStatus::unbounded);
}

TEST_CASE("lattice points") {
  auto tri = lattice_points(schrijver_triangle(2), std::nullopt);
  REQUIRE(tri.points.size() == 2);
  CHECK(tri.points[0] == vec({0, 0}));
  CHECK(tri.points[1] == vec({0, 1}));

  auto k3 = lattice_points(frac_system(Graph::complete(3)).system, std::nullopt);
  CHECK(k3.points.size() == 4);

  auto sq = lattice_points(unit_square(), std::nullopt);
  CHECK(sq.points.size() == 4);

  IntMat a({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 3})});
  auto s = InequalitySystem::make(a, vec({0, 0, 1}));
  CHECK_THROWS_AS(lattice_points(s, std::nullopt), Error);
  auto boxed = lattice_points(s, LatticeBox::cube(3, 6));
  CHECK(boxed.box_limited);
  CHECK(!boxed.points.empty());
}

TEST_CASE("ilp optimum") {
  auto k3 = ilp_optimum(vec({1, 1, 1}), frac_system(Graph::complete(3)).system, std::nullopt);
  CHECK(k3.status == LpStatus::optimal);
  CHECK(k3.value == 1);

  auto k5 = ilp_optimum(vec({1, 1, 1, 1, 1}), frac_system(Graph::complete(5)).system,
                        std::nullopt);
  CHECK(k5.value == 1);

  IntMat a({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 3})});
  auto s = InequalitySystem::make(a, vec({0, 0, 1}));
  IntVec lo = vec({-3, -3, -3});
  IntVec hi = vec({0, 0, 1});
  auto j2 = ilp_optimum(vec({1, 2, 2}), s, LatticeBox::make(lo, hi));
  CHECK(j2.status == LpStatus::optimal);
  CHECK(j2.value == 0);

  // improving ray with an integer point present: unbounded
  IntMat half({vec({-1})});
  auto unb = ilp_optimum(vec({1}), InequalitySystem::make(half, vec({0})),
                         LatticeBox::cube(1, 5));
  CHECK(unb.status == LpStatus::unbounded);
}

TEST_CASE("integer hull") {
  auto k3 = integer_hull(frac_system(Graph::complete(3)).system, std::nullopt);
  CHECK(k3.vertices.size() == 4);
  CHECK(k3.rays.empty());

  auto tri = integer_hull(schrijver_triangle(2), std::nullopt);
  REQUIRE(tri.vertices.size() == 2);
  CHECK(tri.vertices[0] == rvec({0, 0}));
  CHECK(tri.vertices[1] == rvec({0, 1}));

  auto c5 = integer_hull(frac_system(Graph::cycle(5)).system, std::nullopt);
  CHECK(c5.vertices.size() == 11);  // empty set, 5 singletons, 5 non-adjacent pairs

  // hull membership: every lattice point inside conv(vertices)+cone(rays)
  auto pts = lattice_points(frac_system(Graph::cycle(5)).system, std::nullopt);
  std::vector<IntVec> vertices_int;
  for (const auto& v : c5.vertices) vertices_int.push_back(*to_int(v));
  for (const auto& p : pts.points) {
    CHECK(in_convex_hull(to_rat(p), vertices_int, c5.rays));
  }
}

TEST_CASE("integer hull of an unbounded system inside a box") {
  IntMat a({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 3})});
  auto s = InequalitySystem::make(a, vec({0, 0, 1}));
  auto hull = integer_hull(s, LatticeBox::cube(3, 6));
  CHECK(hull.box_limited);
  CHECK(hull.rays.size() == 3);
  REQUIRE(hull.vertices.size() == 3);
  CHECK(hull.vertices[0] == rvec({-2, 0, 1}));
  CHECK(hull.vertices[1] == rvec({0, -1, 1}));
  CHECK(hull.vertices[2] == rvec({0, 0, 0}));
}

TEST_CASE("same polyhedron") {
  auto sq = vertex_enumeration(unit_square());
  CHECK(same_polyhedron(sq, sq));
  IntMat a({vec({2, 0}), vec({0, 2}), vec({-1, 0}), vec({0, -1})});
  auto half = vertex_enumeration(InequalitySystem::make(a, vec({1, 1, 0, 0})));
  CHECK(!same_polyhedron(sq, half));
}

TEST_CASE("hypercube round trip") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<IntVec> rows;
    std::vector<Int> rhs;
    for (int i = 0; i < n; ++i) {
      rows.push_back(unit_vec(n, i));
      rhs.emplace_back(1);
      rows.push_back(-unit_vec(n, i));
      rhs.emplace_back(0);
    }
    IntMat a(std::move(rows));
    IntVec b(a.nrows());
    for (int i = 0; i < a.nrows(); ++i) b[i] = rhs[static_cast<size_t>(i)];
    auto rep = vertex_enumeration(InequalitySystem::make(a, b));
    CHECK(rep.vertices.size() == (1u << n));
  }
}
