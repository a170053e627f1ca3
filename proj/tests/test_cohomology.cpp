#include <doctest.h>

#include <random>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/cohomology.hpp"
#include "cohomcheck/elemab.hpp"
#include "cohomcheck/ring_table.hpp"
#include "cohomcheck/symbolic.hpp"

using namespace cohomcheck;

namespace {

const Atlas& small_atlas() {
  static Atlas at(3, {.big_groups = false});
  return at;
}

// dim of degree-n part of Lambda(r generators) (x) F_p[r generators], counted
// directly by binomials.
int model_count(int r, int n) {
  auto binom = [](int a, int b) {
    if (b < 0 || b > a) return 0;
    long c = 1;
    for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
    return static_cast<int>(c);
  };
  int total = 0;
  for (int k = 0; k <= r && k <= n; ++k)
    if ((n - k) % 2 == 0) total += binom(r, k) * binom((n - k) / 2 + r - 1, r - 1);
  return total;
}

CohomologyClass random_class(const CohomologyRing& ring, int n, std::mt19937& rng) {
  auto u = ring.zero(n);
  for (auto& c : u.coords) c = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(ring.p()));
  return u;
}

}  // namespace

TEST_CASE("Betti numbers of elementary abelian 3-groups match the exterior-polynomial count") {
  const auto& at = small_atlas();
  auto z3 = generate(3, {at.su("beta")});
  // rank 3: alpha and xi in the first factor, beta in the second
  auto lift2 = [&](const MonomialElement& x) { return MonomialElement{x.f2, x.f1}; };
  FiniteGroup e3 = generate(3, {at.su("alpha"), at.su("xi"), lift2(at.su("beta"))});
  REQUIRE(e3.order() == 27);
  REQUIRE(is_elementary_abelian(e3));
  const FiniteGroup* groups[] = {&z3, &at.a2, &e3};
  for (int r = 1; r <= 3; ++r) {
    MinimalResolution res(*groups[r - 1], 6);
    for (int n = 0; n <= 6; ++n) CHECK(res.betti(n) == model_count(r, n));
  }
}

TEST_CASE("Z/9 has one generator in every degree") {
  auto z9 = generate(3, {small_atlas().su("sigma1")});
  REQUIRE(z9.order() == 9);
  MinimalResolution res(z9, 4);
  CHECK(res.betti_numbers() == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("resolution differentials compose to zero and are minimal") {
  const auto& at = small_atlas();
  MinimalResolution res(at.pi_h2, 4);
  const int N = res.order();
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j < res.betti(n); ++j) {
      const auto& d = res.boundary(n, j);
      for (int i = 0; i < res.betti(n - 1); ++i) {
        int s = 0;
        for (int h = 0; h < N; ++h) s += d[static_cast<std::size_t>(i * N + h)];
        CHECK(s % 3 == 0);
      }
      if (n >= 2) {
        auto dd = res.apply_boundary(n - 1, d);
        CHECK(std::all_of(dd.begin(), dd.end(), [](auto x) { return x == 0; }));
      } else {
        CHECK(res.augmentation(d) == 0);
      }
    }
}

TEST_CASE("bar-complex oracle agrees with the minimal resolution") {
  const auto& at = small_atlas();
  auto z3 = generate(3, {at.su("beta")});
  CHECK(bar_betti(z3, 3) == std::vector<int>{1, 1, 1, 1});
  CHECK(bar_betti(at.a2, 4) == std::vector<int>{1, 2, 3, 4, 5});
  auto h = bar_betti(at.pi_h2, 3);
  MinimalResolution res(at.pi_h2, 3);
  CHECK(h == res.betti_numbers());
}

TEST_CASE("cup products on A2 match the symbolic model, including Q0") {
  const auto& a2 = small_atlas().a2;
  MinimalResolution res(a2, 5);
  CohomologyRing ring(res);
  auto gi = a2.generator_indices();
  ElemabMatch match(ring, {gi[0], gi[1]}, {"x", "y"}, 5);
  CHECK(match.verify().empty());
  const auto& S = match.model();
  auto x1 = S.gen("x1"), y1 = S.gen("y1");
  CHECK(ring.bockstein(match.to_ring(x1, 1)) == match.to_ring(S.gen("x2"), 2));
  CHECK(ring.product(match.to_ring(x1, 1), match.to_ring(y1, 1)) == match.to_ring(x1 * y1, 2));
}

TEST_CASE("ring table of piH2 satisfies the ring axioms") {
  MinimalResolution res(small_atlas().pi_h2, 4);
  CohomologyRing ring(res);
  auto t = ring_table(ring, 4);
  CHECK(t.validate() == "");
  auto back = RingTable::from_json(t.to_json());
  CHECK(back.to_json() == t.to_json());
}

TEST_CASE("unit and Q0 on the cyclic group of order 3") {
  auto z3 = generate(3, {small_atlas().su("beta")});
  MinimalResolution res(z3, 3);
  CohomologyRing ring(res);
  auto x1 = ring.basis(1, 0);
  CHECK(ring.product(ring.unit(), x1) == x1);
  auto x2 = ring.bockstein(x1);
  CHECK(!x2.is_zero());
  CHECK(ring.product(x1, x1).is_zero());
  CHECK(!ring.product(x1, x2).is_zero());
}

TEST_CASE("Q0 on piH2 squares to zero in low degrees") {
  MinimalResolution res(small_atlas().pi_h2, 4);
  CohomologyRing ring(res);
  for (int n = 1; n <= 2; ++n)
    for (int i = 0; i < ring.dim(n); ++i) CHECK(ring.bockstein(ring.bockstein(ring.basis(n, i))).is_zero());
}

TEST_CASE("H^1 classes round-trip through homomorphisms") {
  MinimalResolution res(small_atlas().pi_h2, 2);
  CohomologyRing ring(res);
  for (int i = 0; i < ring.dim(1); ++i) {
    auto u = ring.basis(1, i);
    CHECK(ring.class_of_hom(ring.hom_of_class(u)) == u);
  }
}

TEST_CASE("tensor of two Z/3 tables is the A2 table") {
  auto z3 = generate(3, {small_atlas().su("beta")});
  MinimalResolution rz(z3, 4), ra(small_atlas().a2, 4);
  CohomologyRing cz(rz), ca(ra);
  auto tz = ring_table(cz, 4);
  auto t = tensor(tz, tz, 4);
  CHECK(t.validate() == "");
  CHECK(t.dims() == ra.betti_numbers());
  // x1 (x) 1 and 1 (x) x1 anticommute
  auto a = tensor_left(tz, tz, 4, tz.basis(1, 0)), b = tensor_right(tz, tz, 4, tz.basis(1, 0));
  CHECK(t.mul(a, b) == t.scale(t.mul(b, a), -1));
  CHECK(!t.mul(a, b).is_zero());
}

TEST_CASE("the two restriction methods agree and are ring maps commuting with Q0") {
  const auto& at = small_atlas();
  MinimalResolution rg(at.pi_h2, 4), rs(at.cyc_sigma1, 4), rb(at.cyc_beta, 4);
  CohomologyRing ring(rg), rings(rs);
  std::mt19937 rng(7);
  for (auto [phi, rk] : {std::pair{at.cyc_sigma1_to_pi_h2.get(), &rs}, std::pair{at.cyc_beta_to_pi_h2.get(), &rb}}) {
    Restriction a(*phi, *rk, rg, 4);
    SubgroupRestriction b(*phi, *rk, rg, 4);
    CohomologyRing rk_ring(*rk);
    for (int n = 0; n <= 4; ++n)
      for (int i = 0; i < ring.dim(n); ++i) CHECK(a(ring.basis(n, i)) == b(ring.basis(n, i)));
    for (int trial = 0; trial < 10; ++trial) {
      auto u = random_class(ring, 1 + trial % 2, rng), v = random_class(ring, 2, rng);
      CHECK(a(ring.product(u, v)) == rk_ring.product(a(u), a(v)));
      CHECK(a(ring.bockstein(u)) == rk_ring.bockstein(a(u)));
    }
  }
}

TEST_CASE("restriction along the identity is the identity and composes functorially") {
  const auto& at = small_atlas();
  MinimalResolution re(at.extraspecial, 3), rh(at.h2, 3), rq(at.pi_h2, 3);
  CohomologyRing ring(rq);
  auto id = hom(at.pi_h2, at.pi_h2, at.pi_h2.generators());
  Restriction rid(id, rq, rq, 3);
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i < ring.dim(n); ++i) CHECK(rid(ring.basis(n, i)) == ring.basis(n, i));
  Restriction r1(*at.extraspecial_to_h2, re, rh, 3), r2(*at.h2_to_pi_h2, rh, rq, 3);
  auto comp = compose(*at.h2_to_pi_h2, *at.extraspecial_to_h2);
  Restriction r12(comp, re, rq, 3);
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i < ring.dim(n); ++i) CHECK(r12(ring.basis(n, i)) == r1(r2(ring.basis(n, i))));
}

TEST_CASE("extension classes: section independence, split case, naturality") {
  const auto& at = small_atlas();
  const auto xi = at.su("xi");
  MinimalResolution rq(at.pi_h2, 3);
  auto u0 = extension_class(*at.h2_to_pi_h2, xi, rq, 0);
  CHECK(!u0.is_zero());
  for (int s = 1; s <= 3; ++s) CHECK(extension_class(*at.h2_to_pi_h2, xi, rq, s) == u0);

  // <beta, xi> -> <beta mod xi> splits
  MinimalResolution rb(at.cyc_beta, 3);
  auto split = hom(at.beta_xi, at.cyc_beta, {at.su("beta"), MonomialElement{}});
  CHECK(extension_class(split, xi, rb, 0).is_zero());

  // Z/9 = <sigma1> -> <sigma1 mod xi>: restriction of u0 equals the class of the pulled-back extension
  auto z9 = generate(3, {at.su("sigma1")});
  auto proj = hom(z9, at.cyc_sigma1, {at.su("sigma1")});
  MinimalResolution rs(at.cyc_sigma1, 3);
  SubgroupRestriction res(*at.cyc_sigma1_to_pi_h2, rs, rq, 3);
  auto pulled = extension_class(proj, xi, rs, 0);
  CHECK(res(u0) == pulled);
  CHECK(!pulled.is_zero());
}
