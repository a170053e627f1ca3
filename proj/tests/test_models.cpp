#include <doctest.h>

#include "cohomcheck/models.hpp"

using namespace cohomcheck;

namespace {

const Atlas& atlas() {
  static Atlas at(3);
  return at;
}

const BHBase& bh() {
  static BHBase b(atlas());
  return b;
}

}  // namespace

TEST_CASE("piH2: named classes and the product facts") {
  const auto& m = *bh().pih2;
  CHECK(m.res->betti_numbers() == std::vector<int>{1, 2, 4, 6, 7, 8, 9});
  CHECK(m.table.validate().empty());
  auto f = m.facts(atlas());
  CHECK(f.restrictions_ok);
  CHECK(f.u2v1_nonzero);
  CHECK(f.u2_squared_nonzero);
  CHECK(f.u2w1_zero);
  CHECK(f.q0_w1u2_zero);
  CHECK(!m.iu2.is_zero());
  CHECK(!m.iu3.is_zero());
}

TEST_CASE("BH base: transgressions and the class of H -> pi(H)") {
  const auto& b = bh();
  CHECK(b.a2_match->verify().empty());
  CHECK(b.base.dim(1) == 4);
  // tau3 = Q0 tau2 in the base
  CHECK(b.base.q0(b.tau2) == b.tau3);
  auto ext = check_bh_extension(atlas(), b);
  CHECK(ext.kunneth_ok);
  REQUIRE(ext.scalar.has_value());
  CHECK(*ext.scalar == 1);
  CHECK(b.pih2->u2_scale == 2);
}

TEST_CASE("BH case: E_infinity in total degree <= 4") {
  const auto& b = bh();
  CentralSS ss(b.base, 4);
  ss.set_transgressions(b.tau2, b.tau3);
  CHECK(ss.check_multiplicativity().empty());
  auto facts = bh_spectral_facts(b, ss);
  for (const auto& [name, ok] : facts.items) {
    INFO(name);
    CHECK(ok);
  }
  // computed-only positions
  CHECK(ss.e_infinity(3, 1).certificate != Certificate::None);
  CHECK(ss.e_infinity(4, 0).certificate != Certificate::None);
}

TEST_CASE("x1y1z2 coefficient modulo M") {
  SymbolicRing S(3, {"x", "y", "z"});
  auto x1 = S.gen("x1"), y1 = S.gen("y1"), z1 = S.gen("z1"), z2 = S.gen("z2");
  CHECK(x1y1z2_coefficient(x1 * y1 * z2) == 1);
  CHECK(x1y1z2_coefficient(y1 * x1 * z2) == 2);
  CHECK(x1y1z2_coefficient(q0(x1 * y1 * z1)) == 1);
  CHECK(x1y1z2_coefficient(S.zero()) == 0);
  CHECK(x1y1z2_coefficient(x1 * y1 * z1 * z2) == 0);
}
