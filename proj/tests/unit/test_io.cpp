#include <doctest.h>

#include <cstdio>

#include "ibncut/io.hpp"
#include "support.hpp"

using namespace ibncut;
using testsupport::vec;

TEST_CASE("integers round trip as decimal strings") {
  Int big("123456789012345678901234567890");
  Json j = to_json(big);
  CHECK(j.is_string());
  CHECK(int_from_json(j) == big);
  CHECK(int_from_json(Json(-17)) == -17);
  CHECK_THROWS_AS(int_from_json(Json("x1")), Error);
}

TEST_CASE("rationals round trip") {
  Rat r = make_rat(Int(-7), Int(3));
  CHECK(rat_from_json(to_json(r)) == r);
  CHECK(rat_from_json(Json("4/6")) == make_rat(2, 3));
  CHECK(to_json(Rat(5)) == Json("5"));
}

TEST_CASE("vectors and matrices") {
  IntVec v = vec({3, -4, 5});
  CHECK(intvec_from_json(to_json(v)) == v);
  IntMat m({vec({1, 2}), vec({3, 4})});
  CHECK(intmat_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(intmat_from_json(Json::parse(R"({"rows": [[1,2],[3]]})")), Error);
}

TEST_CASE("configuration and system parsing") {
  Json cfg_json = Json::parse(R"({"vectors": [["1","0"],["0","1"],["2","4"]]})");
  Configuration cfg = config_from_json(cfg_json);
  CHECK(cfg.size() == 3);
  CHECK(cfg.contains(vec({1, 2})));  // (2,4) normalized

  Json sys_json = Json::parse(R"({"A": [["1","1"],["-1","0"],["0","-1"]], "b": ["1","0","0"]})");
  InequalitySystem s = system_from_json(sys_json);
  CHECK(s.nrows() == 3);
  CHECK(s.b == vec({1, 0, 0}));
}

TEST_CASE("reports embed hash and version and are stable") {
  Json payload{{"answer", 42}};
  Json a = make_report("test", "input-bytes", payload, true, 1.25);
  Json b = make_report("test", "input-bytes", payload, true, 99.0);
  CHECK(a.dump(2) == b.dump(2));  // stable output drops timings
  CHECK(a.at("version") == kVersion);
  CHECK(a.at("input_sha") == fnv1a_hex("input-bytes"));
  Json c = make_report("test", "input-bytes", payload, false, 1.25);
  CHECK(c.contains("seconds"));
}

TEST_CASE("atomic write and read") {
  std::string path = "io_test_tmp.json";
  atomic_write(path, "{\"k\": 1}\n");
  CHECK(read_file(path) == "{\"k\": 1}\n");
  std::remove(path.c_str());
}

TEST_CASE("round log serialization carries witnesses") {
  Configuration k3 = config_from_json(Json::parse(
      R"({"vectors": [["1","1","0"],["0","1","1"],["1","0","1"],
                       ["-1","0","0"],["0","-1","0"],["0","0","-1"]]})"));
  IbnCaps caps;
  caps.max_rounds = 2;
  RoundLog log = ibn_run(k3, caps);
  Json j = to_json(log);
  CHECK(j.at("fixpoint_reached") == true);
  CHECK(j.at("rounds").at(0).at("added").size() == 1);
  CHECK(j.at("rounds").at(0).at("witnesses").at(0).at("lambda").at(0) == "1/2");
}
