#include <doctest.h>

#include "ibncut/closure.hpp"
#include "ibncut/stableset.hpp"
#include "ibncut/supernormal.hpp"
#include "support.hpp"

using namespace ibncut;
using testsupport::vec;

namespace {

std::vector<IntVec> units_and_negs(int n) {
  std::vector<IntVec> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(unit_vec(n, i));
    out.push_back(-unit_vec(n, i));
  }
  return out;
}

}  // namespace

TEST_CASE("unimodularity decider") {
  Decision d = is_unimodular(units_and_negs(3));
  CHECK(d.verdict);
  CHECK(d.complete);

  Decision odd = is_unimodular(odd_circuit_incidence(2).vectors);
  CHECK(!odd.verdict);
  REQUIRE(odd.bad_determinant.has_value());
  CHECK(abs(*odd.bad_determinant) == 2);

  // bipartite edges with negated units stay unimodular
  Decision bip = is_unimodular(stable_config(Graph::cycle(4)).vectors);
  CHECK(bip.verdict);
  Decision bip2 = is_unimodular(stable_config(Graph::path(4)).vectors);
  CHECK(bip2.verdict);
}

TEST_CASE("supernormality decider") {
  CHECK(is_supernormal(units_and_negs(3)).verdict);

  // odd circuit plus the all-ones vector is supernormal
  Configuration c3 = odd_circuit_incidence(1);
  Configuration after = ibn_round(c3);
  CHECK(is_supernormal(after.vectors).verdict);

  Decision k3 = is_supernormal(stable_config(Graph::complete(3)).vectors);
  CHECK(!k3.verdict);
  REQUIRE(k3.missing_element.has_value());
  CHECK(*k3.missing_element == vec({1, 1, 1}));
  // certificate re-verifies: the named basis really misses the element
  auto hb = minimal_hilbert_basis_simplicial(SimplicialCone::make(k3.violating_basis));
  CHECK(hb.contains(*k3.missing_element));

  CHECK_THROWS_AS(is_supernormal({vec({2, 0}), vec({0, 2})}), Error);
  CHECK_THROWS_AS(is_supernormal({vec({1, 0, 0}), vec({0, 1, 0})}), Error);
}

TEST_CASE("scr zero decider") {
  CHECK(scr_zero_decision(stable_config(Graph::cycle(4)).vectors).verdict);
  CHECK(scr_zero_decision(predict_Rk(2, 1).vectors).verdict);

  Decision d = scr_zero_decision(stable_config(Graph::complete(3)).vectors);
  CHECK(!d.verdict);
  REQUIRE(d.witness_system.has_value());
  REQUIRE(d.fractional_vertex.has_value());
  // the witness is tight and non-integral
  CHECK(!to_int(*d.fractional_vertex));
  CHECK(d.witness_system->satisfied(*d.fractional_vertex));
  auto t = tighten(*d.witness_system);
  CHECK(t.is_tight);
  bool fractional_vertex_found = false;
  for (const auto& v : vertex_enumeration(*d.witness_system).vertices) {
    if (!to_int(v)) fractional_vertex_found = true;
  }
  CHECK(fractional_vertex_found);
}

TEST_CASE("odd circuit incidence family") {
  Configuration c3 = odd_circuit_incidence(1);
  CHECK(c3.size() == 3);
  CHECK(c3.dim == 3);
  Configuration c5 = odd_circuit_incidence(2);
  CHECK(c5.size() == 5);
  for (int k = 1; k <= 5; ++k) {
    Configuration c = odd_circuit_incidence(k);
    // canonical row order may flip the sign of the circulant determinant
    CHECK(abs(determinant(IntMat(c.vectors))) == 2);
  }
  CHECK_THROWS_AS(odd_circuit_incidence(0), Error);
}

TEST_CASE("lower-bound family generator") {
  Configuration f2 = lowerbound_family(2);
  CHECK(f2.contains(vec({1, 2, 3})));
  Configuration f6 = lowerbound_family(6);
  CHECK(f6.contains(vec({1, 6, 11})));
  CHECK_THROWS_AS(lowerbound_family(1), Error);
}

TEST_CASE("predicted polygon points") {
  Configuration p21 = predict_Rk(2, 1);
  Configuration expect = Configuration::make(
      {vec({0, 1, 0}), vec({1, 0, 0}), vec({1, 1, 1}), vec({1, 2, 2}), vec({1, 2, 3})});
  CHECK(p21 == expect);

  Configuration p31 = predict_Rk(3, 1);
  Configuration p32 = predict_Rk(3, 2);
  CHECK(!p31.contains(vec({1, 3, 3})));
  CHECK(p32.contains(vec({1, 3, 3})));

  // k = 1 rows (1,i,2i-1) for i <= j and (1,i,2i-2) for 2 <= i <= j
  Configuration p41 = predict_Rk(4, 1);
  for (long i = 1; i <= 4; ++i) {
    IntVec v(3);
    v[0] = 1;
    v[1] = i;
    v[2] = 2 * i - 1;
    CHECK(p41.contains(v));
    if (i >= 2) {
      v[2] = 2 * i - 2;
      CHECK(p41.contains(v));
    }
  }
  CHECK_THROWS_AS(predict_Rk(3, 3), Error);
}

TEST_CASE("family rounds match the prediction at j=3") {
  Configuration fam = lowerbound_family(3);
  IbnCaps caps;
  caps.max_rounds = 4;
  RoundLog log = ibn_run(fam, caps);
  CHECK(log.configs[1] == predict_Rk(3, 1));
  CHECK(log.configs[2] == predict_Rk(3, 2));
  CHECK(log.fixpoint_round == 2);
}
