#include <doctest.h>

#include "cohomcheck/models.hpp"

using namespace cohomcheck;

namespace {

const Atlas& atlas() {
  static Atlas at(3);
  return at;
}

const HModel& hmodel() {
  static HModel h(atlas(), 4);
  return h;
}

}  // namespace

TEST_CASE("BH case converges to H*(H) in degrees 3 and 4") {
  BHBase b(atlas());
  CentralSS ss(b.base, 4);
  ss.set_transgressions(b.tau2, b.tau3);
  const auto& h = hmodel();
  CHECK(h.res->betti_numbers() == std::vector<int>{1, 4, 10, 21, 35});
  for (int n = 0; n <= 4; ++n) CHECK(ss.assemble_dim(n) == h.res->betti(n));
}

TEST_CASE("A3 and A3' identifications") {
  const auto& h = hmodel();
  CHECK(h.a3_match->verify().empty());
  CHECK(h.a3p_match->verify().empty());
}

TEST_CASE("g* and g'* on H^1 match the stated values") {
  // g*(x1) = x1, g*(y1) = y1 = g*(w1); g'*(y1) = 0, g'*(w1) = y1, via pi(H)
  const auto& at = atlas();
  const auto& h = hmodel();
  BHBase b(at);
  MinimalResolution rq(at.pi_h, 1);
  Restriction pr1(*at.pi_h_to_a2, rq, *b.a2_res, 1), pr2(*at.pi_h_to_pi_h2, rq, *b.pih2->res, 1);
  Restriction pi(*at.h_to_pi_h, *h.res, rq, 1);
  const auto& S = h.a3_match->model();
  auto via = [&](const SubgroupRestriction& r, const ElemabMatch& m, const CohomologyClass& u) {
    return m.from_ring(r(pi(u)));
  };
  auto x1 = pr1(b.a2_table.at("x1")), y1 = pr1(b.a2_table.at("y1")), w1 = pr2(b.pih2->w1);
  CHECK(via(*h.g, *h.a3_match, x1) == S.gen("x1"));
  CHECK(via(*h.g, *h.a3_match, y1) == S.gen("y1"));
  CHECK(via(*h.g, *h.a3_match, w1) == S.gen("y1"));
  CHECK(via(*h.gp, *h.a3p_match, x1) == S.gen("x1"));
  CHECK(via(*h.gp, *h.a3p_match, y1).is_zero());
  CHECK(via(*h.gp, *h.a3p_match, w1) == S.gen("y1"));
}

TEST_CASE("Bockstein image: equal x1y1z2 coefficients under g and g'") {
  auto r = bockstein_image_check(hmodel());
  CHECK(r.h3_dim == 21);
  CHECK(r.h4_dim == 35);
  CHECK(r.image_dim > 0);
  CHECK(r.all_equal);
  CHECK(r.surrogate == std::pair{1, 0});
  CHECK(r.surrogate_excluded);
  CHECK(r.zero_pair_equal);
  MESSAGE(r.to_json().dump());
}
