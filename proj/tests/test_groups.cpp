#include <doctest.h>

#include <random>
#include <set>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/groups.hpp"

using namespace cohomcheck;

TEST_CASE("standard generators satisfy the defining relations") {
  for (int p : {3, 5, 7}) {
    MonomialModel m(p);
    auto g = standard_generators(p);
    CHECK(m.order_of(g["xi"]) == p);
    CHECK(m.order_of(g["alpha"]) == p);
    CHECK(m.order_of(g["beta"]) == p);
    for (int k = 1; k <= p; ++k) CHECK(m.power(g["sigma" + std::to_string(k)], p) == g["xi"]);
    // beta alpha beta^-1 alpha^-1 is a power of xi
    auto c = m.multiply(m.multiply(g["beta"], g["alpha"]),
                        m.multiply(m.inverse(g["beta"]), m.inverse(g["alpha"])));
    bool central_power = false;
    for (int k = 1; k < p; ++k) central_power |= (c == m.power(g["xi"], k));
    CHECK(central_power);
  }
}

TEST_CASE("sigma2 sigma3^2 equals xi alpha^-1 at p = 3") {
  MonomialModel m(3);
  auto g = standard_generators(3);
  auto lhs = m.multiply(g["sigma2"], m.power(g["sigma3"], 2));
  auto rhs = m.multiply(g["xi"], m.inverse(g["alpha"]));
  CHECK(lhs == rhs);
}

TEST_CASE("group orders at p = 3") {
  Atlas at(3, {.big_groups = true, .with_hhat = true});
  CHECK(at.extraspecial.order() == 27);
  CHECK(at.h2.order() == 81);
  CHECK(at.a2.order() == 9);
  CHECK(at.pi_h2.order() == 27);
  CHECK(at.hhat.order() == 2187);
  CHECK(at.h.order() == 729);
  CHECK(at.a3.order() == 27);
  CHECK(at.a3p.order() == 27);
  CHECK(at.pi_h.order() == 243);
  CHECK(is_elementary_abelian(at.a3));
  CHECK(is_elementary_abelian(at.a3p));
  CHECK(is_elementary_abelian(at.a2));
  CHECK(at.h_to_pi_h->is_surjective());
  CHECK(at.a3_to_h->is_injective());
  CHECK(at.a3p_to_h->is_injective());
}

TEST_CASE("pi(H) is the direct product of A2 and pi~(H2)") {
  Atlas at(3);
  const auto& ph = at.pi_h;
  CHECK(ph.order() == at.a2.order() * at.pi_h2.order());
  // The two factor projections together are injective.
  std::set<std::pair<int, int>> seen;
  for (int x = 0; x < ph.order(); ++x) seen.insert({(*at.pi_h_to_a2)(x), (*at.pi_h_to_pi_h2)(x)});
  CHECK(static_cast<int>(seen.size()) == ph.order());
  // The factor inclusions commute elementwise.
  for (int a = 0; a < at.a2.order(); ++a)
    for (int b = 0; b < at.pi_h2.order(); ++b) {
      int x = (*at.a2_to_pi_h)(a), y = (*at.pi_h2_to_pi_h)(b);
      CHECK(ph.mul(x, y) == ph.mul(y, x));
    }
}

TEST_CASE("extraspecial invariants") {
  for (int p : {3, 5}) {
    Atlas at(p, {.big_groups = false});
    auto inv = group_invariants(at.extraspecial);
    CHECK(inv.order == p * p * p);
    CHECK(inv.exponent == p);
    CHECK(inv.center.size() == static_cast<std::size_t>(p));
    CHECK(inv.commutator_subgroup.size() == static_cast<std::size_t>(p));
    CHECK(inv.abelianization == std::vector<int>{p, p});
    CHECK(conjugacy_classes(at.extraspecial).size() == static_cast<std::size_t>(p * p + p - 1));
  }
}

TEST_CASE("abelianization of a cyclic group of order p^2") {
  auto g = standard_generators(3);
  auto c = generate(3, {g["sigma1"]});
  CHECK(c.order() == 9);
  CHECK(group_invariants(c).abelianization == std::vector<int>{9});
}

TEST_CASE("quotient by a non-central element is rejected") {
  Atlas at(3, {.big_groups = false});
  CHECK_THROWS_AS(central_quotient(at.extraspecial, at.su("alpha")), GroupError);
  auto q = central_quotient(at.extraspecial, at.su("xi"));
  CHECK(q.quotient.order() == 9);
}

TEST_CASE("non-homomorphisms are rejected") {
  Atlas at(3, {.big_groups = false});
  // The commutator of alpha and beta is a nontrivial power of xi, so xi -> 1 fails.
  auto id = at.model().identity();
  CHECK_THROWS_AS(hom(at.extraspecial, at.extraspecial, {at.su("alpha"), at.su("beta"), id}),
                  GroupError);
}

TEST_CASE("even and non-prime p rejected") {
  CHECK_THROWS_AS(Atlas(2), GroupError);
  CHECK_THROWS_AS(Atlas(9), GroupError);
}

TEST_CASE("json round trip") {
  Atlas at(3);
  for (const FiniteGroup* g : {&at.h2, &at.a3p, &at.pi_h}) {
    auto back = group_from_json(g->to_json());
    CHECK(back.order() == g->order());
    CHECK(back.elements() == g->elements());
  }
}

TEST_CASE("property: random products are associative and inverses cancel") {
  std::mt19937 rng(7);
  for (int p : {3, 5, 7}) {
    MonomialModel m(p);
    auto rand_elem = [&] {
      MonomialElement e;
      e.f1.shift = static_cast<std::uint8_t>(rng() % p);
      e.f2.shift = static_cast<std::uint8_t>(rng() % p);
      for (int i = 0; i < p; ++i) {
        e.f1.weights[i] = static_cast<std::uint8_t>(rng() % (p * p));
        e.f2.weights[i] = static_cast<std::uint8_t>(rng() % (p * p));
      }
      return e;
    };
    for (int t = 0; t < 300; ++t) {
      auto a = rand_elem(), b = rand_elem(), c = rand_elem();
      CHECK(m.multiply(m.multiply(a, b), c) == m.multiply(a, m.multiply(b, c)));
      CHECK(m.multiply(a, m.inverse(a)) == m.identity());
      CHECK(m.multiply(m.inverse(a), a) == m.identity());
    }
  }
}
