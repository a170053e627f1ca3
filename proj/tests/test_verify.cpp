#include <doctest.h>

#include <set>

#include "cohomcheck/verify.hpp"

using namespace cohomcheck;

TEST_CASE("cyclic filter yields five passing checks") {
  for (int p : {3, 5}) {
    auto rep = verify_all({p, {"cyclic"}, false});
    REQUIRE(rep.checks.size() == 5);
    CHECK(rep.count("pass") == 5);
    CHECK(rep.ok());
  }
}

TEST_CASE("rejected primes") {
  for (int p : {2, 1, 0, -3, 9, 15})
    CHECK_THROWS_WITH_AS(verify_all({p, {}, false}), doctest::Contains("odd prime"), VerifyError);
  CHECK_THROWS_AS(verify_all({7, {}, false}), VerifyError);
  CHECK_THROWS_AS(verify_all({17, {}, true}), VerifyError);
  CHECK_THROWS_AS(verify_all({3, {"no_such_group"}, false}), VerifyError);
}

TEST_CASE("p = 7 with --long skips the atlas layers") {
  auto rep = verify_all({7, {"structure", "cyclic", "q1"}, true});
  for (const auto& c : rep.checks) {
    if (c.id.rfind("structure.", 0) == 0) CHECK(c.status == "skipped");
    else CHECK(c.status == "pass");
    CHECK(!c.witness.empty());
  }
  CHECK(rep.count("pass") == 7);
}

TEST_CASE("report schema, unique ids and determinism") {
  VerifyOptions o{3, {"structure", "bg", "sweep", "q1", "cyclic"}, false};
  auto a = verify_all(o), b = verify_all(o);
  auto j = a.to_json();
  CHECK(j["p"] == 3);
  CHECK(j["version"].get<std::string>().rfind("cohomcheck 0.1.0", 0) == 0);
  std::set<std::string> ids;
  for (const auto& c : j["checks"]) {
    for (const char* k : {"id", "paper_ref", "status", "witness", "runtime_ms"}) CHECK(c.contains(k));
    CHECK(!c["witness"].empty());
    CHECK(!c["paper_ref"].get<std::string>().empty());
    ids.insert(c["id"].get<std::string>());
  }
  CHECK(ids.size() == j["checks"].size());
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(a.ok());
}

TEST_CASE("dependents of a skipped group are skipped") {
  // extension and bh are computed at p = 3 only; bockstein depends on bh
  auto rep = verify_all({5, {"extension", "bh", "bockstein", "chern"}, false});
  for (const auto& c : rep.checks) {
    if (c.id.rfind("chern.", 0) == 0) continue;
    CHECK(c.status == "skipped");
    CHECK(c.witness.contains("reason"));
  }
}

TEST_CASE("character checks at p = 5") {
  auto rep = verify_all({5, {"chern"}, false});
  for (const auto& c : rep.checks) {
    if (c.id == "chern.gamma2") {
      CHECK(c.status == "fail");
      CHECK(c.witness["difference"] == "-25 * trivial");
    } else {
      CHECK(c.status == "pass");
    }
  }
}
