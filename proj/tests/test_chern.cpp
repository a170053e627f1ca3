#include <doctest.h>

#include <random>

#include "cohomcheck/chern.hpp"

using namespace cohomcheck;

namespace {

const Atlas& atlas() {
  static Atlas at(3);
  return at;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  for (int p : {3, 5}) {
    auto w = Cyclotomic::root(p, 1);
    // omega has order p^2 and 1 + xi + ... + xi^{p-1} = 0
    auto acc = Cyclotomic::integer(p, 1);
    for (int i = 0; i < p * p; ++i) acc = acc * w;
    CHECK(acc == Cyclotomic::integer(p, 1));
    Cyclotomic s(p);
    for (int i = 0; i < p; ++i) s += Cyclotomic::root(p, i * p);
    CHECK(s.is_zero());
    CHECK(Cyclotomic::root(p, 5) * Cyclotomic::root(p, 5).conj() == Cyclotomic::integer(p, 1));
    CHECK(Cyclotomic::root(p, -1) == Cyclotomic::root(p, p * p - 1));
    CHECK(!Cyclotomic::root(p, 1).as_integer());
  }
}

TEST_CASE("property: cyclotomic ring axioms on random elements") {
  std::mt19937 rng(11);
  auto rnd = [&](int p) {
    Cyclotomic c(p);
    for (int k = 0; k < 4; ++k) c += static_cast<long long>(static_cast<int>(rng() % 7) - 3) * Cyclotomic::root(p, rng());
    return c;
  };
  for (int trial = 0; trial < 30; ++trial) {
    int p = trial % 2 ? 3 : 5;
    auto a = rnd(p), b = rnd(p), c = rnd(p);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("lambda'' identities on p^{1+2} and A3") {
  auto r = character_report(atlas());
  CHECK(r.class_functions);
  CHECK(r.delta_vanishes);
  // Gamma2^*(lambda'') = p lambda1 - p^2 * 1: equal up to the trivial summand only
  CHECK(!r.gamma2_equals_p_lambda1);
  CHECK(r.gamma2_reduced_equal);
  CHECK(r.gamma2_trivial_defect == -9);
  CHECK(r.a3_plus == 9);
  CHECK(r.a3_minus == 9);
  CHECK(r.a3_other == 0);
  CHECK(r.a3_decomposition_ok);
  CHECK(r.a3_restriction_compatible);
  CHECK(r.c1_zero);
  CHECK(r.c2_zero);
}

TEST_CASE("lambda'' at p = 5") {
  Atlas at(5, {.big_groups = false});
  auto r = character_report(at);
  CHECK(r.delta_vanishes);
  CHECK(r.gamma2_trivial_defect == -25);
  CHECK(r.a3_plus == 25);
  CHECK(r.a3_minus == 25);
  CHECK(r.a3_decomposition_ok);
  CHECK(r.c2_zero);
}

TEST_CASE("orthonormality of linear characters of A3") {
  const auto& at = atlas();
  const auto& m = at.model();
  LinearCharacters lc(at.a3, {at.a3.index_of(m.delta(at.su("alpha"))), at.a3.index_of(m.delta(at.su("beta"))),
                              at.a3.index_of(m.gamma2(at.su("xi")))});
  auto ws = lc.all_weights();
  CHECK(ws.size() == 27);
  for (std::size_t i = 0; i < ws.size(); i += 5)
    for (std::size_t j = 0; j < ws.size(); j += 4)
      CHECK(inner_product(lc.character(ws[i]), lc.character(ws[j])) == (i == j ? 1 : 0));
}

TEST_CASE("lambda1 on <xi> is p copies of the weight-1 character") {
  const auto& at = atlas();
  auto z = generate(3, {at.su("xi")});
  auto chi = character_of(Rep::Lambda1, z);
  LinearCharacters lc(z, {z.index_of(at.su("xi"))});
  auto dec = decompose_abelian(chi, lc);
  CHECK(dec.size() == 1);
  CHECK(dec.at({1}) == 3);
}

TEST_CASE("Whitney formula on small sums") {
  SymbolicRing S(3, {"x", "y", "z"});
  std::map<std::vector<int>, long long> one{{{1, 0, 0}, 1}}, two{{{1, 0, 0}, 2}}, triv{{{0, 0, 0}, 4}};
  CHECK(chern_component(total_chern_class(one, S, 10), 1) == S.gen("x2"));
  CHECK(chern_component(total_chern_class(two, S, 10), 2) == S.gen("x2") * S.gen("x2"));
  CHECK(total_chern_class(triv, S, 10) == S.one());
  // a character minus itself has total class 1
  std::map<std::vector<int>, long long> cancel{{{1, 2, 0}, 1}};
  auto c = total_chern_class(cancel, S, 10);
  std::map<std::vector<int>, long long> inv{{{1, 2, 0}, -1}};
  CHECK(truncate(c * total_chern_class(inv, S, 10), 10) == S.one());
}

TEST_CASE("property: Q1 vanishes on Chern classes of genuine characters of A3") {
  SymbolicRing S(3, {"x", "y", "z"});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::vector<int>, long long> dec;
    for (int k = 0; k < 4; ++k)
      dec[{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)}] += 1 + rng() % 3;
    auto total = total_chern_class(dec, S, 10);
    CHECK(q1(chern_component(total, 1)).is_zero());
    CHECK(q1(chern_component(total, 2)).is_zero());
  }
}

TEST_CASE("unknown representation names are rejected") {
  CHECK_THROWS_AS(rep_from_string("mu"), ChernError);
  CHECK(rep_from_string("lambda_dd") == Rep::LambdaDD);
}
