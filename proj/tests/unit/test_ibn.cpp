#include <doctest.h>

#include <random>

#include "ibncut/ibn.hpp"
#include "ibncut/parallel.hpp"
#include "ibncut/stableset.hpp"
#include "support.hpp"

using namespace ibncut;
using testsupport::vec;

TEST_CASE("configuration normalization") {
  std::vector<std::string> warnings;
  Configuration cfg = Configuration::make({vec({2, 4, 6}), vec({1, 2, 3}), vec({0, 1, 0})},
                                          &warnings);
  CHECK(cfg.size() == 2);  // (2,4,6) collapses onto (1,2,3)
  CHECK(warnings.size() == 1);
  CHECK_THROWS_AS(Configuration::make({vec({0, 0})}), Error);
}

TEST_CASE("enumerate bases") {
  Configuration cfg = Configuration::make({vec({1, 0}), vec({0, 1}), vec({1, 1})});
  int count = 0;
  auto stats = enumerate_bases(cfg, 1000, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 3);
  CHECK(stats.bases_found == 3);
  CHECK(!stats.truncated);

  Configuration deduped = Configuration::make({vec({1, 0}), vec({2, 1}), vec({1, 0})});
  CHECK(deduped.size() == 2);
  stats = enumerate_bases(deduped, 1000, [](const std::vector<int>&) {});
  CHECK(stats.bases_found == 1);

  Configuration k3 = stable_config(Graph::complete(3));
  stats = enumerate_bases(k3, 1000, [](const std::vector<int>&) {});
  CHECK(stats.subsets_examined == 20);
  CHECK(stats.bases_found == 17);

  stats = enumerate_bases(k3, 5, [](const std::vector<int>&) {});
  CHECK(stats.truncated);
  CHECK(stats.subsets_examined == 5);
}

TEST_CASE("ibn round on stable-set configurations") {
  // bipartite: nothing to add
  Configuration c4 = stable_config(Graph::cycle(4));
  RoundInfo info;
  Configuration r = ibn_round(c4, 100000, &info);
  CHECK(r == c4);
  CHECK(info.added.empty());

  Configuration k3 = stable_config(Graph::complete(3));
  r = ibn_round(k3, 100000, &info);
  REQUIRE(info.added.size() == 1);
  CHECK(info.added.front() == vec({1, 1, 1}));
}

TEST_CASE("ibn round on the lower-bound family") {
  Configuration fam = Configuration::make({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 3})});
  RoundInfo info;
  Configuration r = ibn_round(fam, 100000, &info);
  REQUIRE(info.added.size() == 2);
  CHECK(info.added[0] == vec({1, 1, 1}));
  CHECK(info.added[1] == vec({1, 2, 2}));
  // round two is a fixpoint
  Configuration r2 = ibn_round(r, 100000, nullptr);
  CHECK(r2 == r);
}

TEST_CASE("ibn run fixpoint bookkeeping") {
  Configuration fam = Configuration::make({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 3})});
  IbnCaps caps;
  caps.max_rounds = 5;
  RoundLog log = ibn_run(fam, caps);
  CHECK(log.fixpoint_reached);
  CHECK(log.fixpoint_round == 1);
  CHECK(log.rounds_completed == 2);
  CHECK(log.configs.size() == 3);
  CHECK(log.complete);

  CHECK_THROWS_AS(ibn_run(Configuration::make({vec({1, 0, 0}), vec({2, 1, 0})}), caps), Error);
}

TEST_CASE("cap truncation is flagged") {
  Configuration k3 = stable_config(Graph::complete(3));
  IbnCaps caps;
  caps.max_rounds = 3;
  caps.basis_cap = 4;
  RoundLog log = ibn_run(k3, caps);
  CHECK(!log.complete);
  CHECK(!log.fixpoint_reached);
  CHECK(log.rounds.back().truncated);
}

TEST_CASE("witnesses") {
  Configuration k3 = stable_config(Graph::complete(3));
  IbnCaps caps;
  caps.max_rounds = 2;
  RoundLog log = ibn_run(k3, caps);
  auto w = witness_for(log, vec({1, 1, 1}));
  REQUIRE(w.has_value());
  CHECK(w->round == 1);
  REQUIRE(w->basis.nrows() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(w->lambda[i] == make_rat(1, 2));
    Int row_ones = 0;
    for (int j = 0; j < 3; ++j) row_ones += w->basis[i][j];
    CHECK(row_ones == 2);  // each witness row is an edge vector
  }

  Configuration gens = Configuration::make({vec({1, 0}), vec({0, 1}), vec({1, 1})});
  RoundLog g = ibn_run(gens, caps);
  auto w2 = witness_for(g, vec({1, 0}));
  REQUIRE(w2.has_value());
  CHECK(w2->round == 0);

  CHECK(!witness_for(log, vec({9, 9, 9})).has_value());
}

TEST_CASE("round output is deterministic across thread counts") {
  Configuration k4 = stable_config(Graph::complete(4));
  int saved = thread_count();
  set_thread_count(1);
  RoundInfo a;
  Configuration ra = ibn_round(k4, 100000, &a);
  set_thread_count(4);
  RoundInfo b;
  Configuration rb = ibn_round(k4, 100000, &b);
  set_thread_count(saved);
  CHECK(ra == rb);
  REQUIRE(a.added.size() == b.added.size());
  for (size_t i = 0; i < a.added.size(); ++i) {
    CHECK(a.added[i] == b.added[i]);
    CHECK(a.witnesses[i].basis == b.witnesses[i].basis);
    CHECK(a.witnesses[i].lambda == b.witnesses[i].lambda);
  }
}

TEST_CASE("monotonicity and primitivity on random configurations") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> d(-4, 4);
  int done = 0;
  while (done < 20) {
    std::vector<IntVec> vs;
    for (int i = 0; i < 4; ++i) {
      IntVec v(3);
      for (int j = 0; j < 3; ++j) v[j] = d(rng);
      if (is_zero(v)) continue;
      vs.push_back(primitive_part(v).w);
    }
    if (vs.size() < 4 || rank(IntMat(vs)) < 3) continue;
    ++done;
    Configuration cfg = Configuration::make(vs);
    Configuration next = ibn_round(cfg);
    for (const auto& v : cfg.vectors) CHECK(next.contains(v));
    for (const auto& v : next.vectors) CHECK(is_primitive(v));
  }
}
