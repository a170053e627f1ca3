#include <doctest.h>

#include <random>

#include "cohomcheck/symbolic.hpp"

using namespace cohomcheck;

namespace {

SymbolicClass random_class(const SymbolicRing& R, int degree, std::mt19937& rng) {
  auto mons = R.basis(degree);
  SymbolicClass u = R.zero();
  if (mons.empty()) return u;
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k) u.add_term(mons[rng() % mons.size()], static_cast<int>(rng() % static_cast<unsigned>(R.p())));
  return u;
}

}  // namespace

TEST_CASE("exterior relations and signs") {
  SymbolicRing R(3, {"x", "y", "z"});
  auto x1 = R.gen("x1"), y1 = R.gen("y1"), z2 = R.gen("z2");
  CHECK((x1 * x1).is_zero());
  CHECK(x1 * y1 == (-1) * (y1 * x1));
  CHECK(R.to_string((x1 * y1) * z2) == "x1y1z2");
  CHECK(R.to_string(y1 * x1) == "-x1y1");
}

TEST_CASE("Q0 examples") {
  SymbolicRing R(3, {"x", "y", "z"});
  auto x1 = R.gen("x1"), y1 = R.gen("y1"), z1 = R.gen("z1");
  auto x2 = R.gen("x2"), y2 = R.gen("y2"), z2 = R.gen("z2");
  auto c = x1 * y1 * z1;
  CHECK(q0(c) == x2 * y1 * z1 - x1 * y2 * z1 + x1 * y1 * z2);
  CHECK(q0(x2).is_zero());
  CHECK(q0(q0(c)).is_zero());
}

TEST_CASE("Q1 examples") {
  for (int p : {3, 5, 7}) {
    SymbolicRing R(p, {"x", "y", "z"});
    auto x1 = R.gen("x1"), y1 = R.gen("y1"), z1 = R.gen("z1");
    auto x2 = R.gen("x2"), y2 = R.gen("y2"), z2 = R.gen("z2");
    CHECK(q1(z1) == pow(z2, p));
    auto lhs = q1(x1 * y1 * z2);
    CHECK(lhs == pow(x2, p) * y1 * z2 - x1 * pow(y2, p) * z2);
    CHECK(!reduce_mod_M(lhs, 2).is_zero());
    CHECK(q1(x2).is_zero());
  }
}

TEST_CASE("induced maps") {
  SymbolicRing R4(3, {"x", "y", "w", "z"});
  SymbolicRing R3(3, {"x", "y", "z"});
  // g: x -> x, y -> y, w -> y, z -> z ; g': y -> 0, w -> y
  InducedMap g(3, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  InducedMap gp(3, {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  auto w1x1z2 = R4.gen("w1") * R4.gen("x1") * R4.gen("z2");
  CHECK(g(w1x1z2) == (-1) * (R3.gen("x1") * R3.gen("y1") * R3.gen("z2")));
  CHECK(gp(R4.gen("x1") * R4.gen("y1") * R4.gen("z2")).is_zero());
  auto id = InducedMap::identity(3, 3);
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto u = random_class(R3, static_cast<int>(rng() % 8), rng);
    CHECK(id(u) == u);
  }
}

TEST_CASE("induced maps commute with Q0 and Q1") {
  SymbolicRing R(5, {"a", "b", "c"});
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::vector<int>> m(3, std::vector<int>(2));
    for (auto& row : m)
      for (auto& e : row) e = static_cast<int>(rng() % 5);
    InducedMap f(5, m, 2);
    auto u = random_class(R, static_cast<int>(rng() % 9), rng);
    CHECK(f(q0(u)) == q0(f(u)));
    CHECK(f(q1(u)) == q1(f(u)));
  }
}

TEST_CASE("reductions modulo M") {
  SymbolicRing R(3, {"x", "y", "z"});
  auto x1 = R.gen("x1"), y1 = R.gen("y1"), z1 = R.gen("z1");
  auto c = x1 * y1 * z1;
  auto r = reduce_mod_M(q0(c), 2);
  CHECK(r == x1 * y1 * R.gen("z2"));
  CHECK(reduce_mod_M(z1 * R.gen("x2"), 2).is_zero());
}

TEST_CASE("Q0, Q1 property sweep on random classes") {
  for (int p : {3, 5}) {
    SymbolicRing R(p, {"x", "y", "z"});
    std::mt19937 rng(static_cast<unsigned>(p));
    for (int t = 0; t < 1000; ++t) {
      int d = static_cast<int>(rng() % static_cast<unsigned>(2 * p + 5));
      auto u = random_class(R, d, rng);
      CHECK(q0(q0(u)).is_zero());
      CHECK(q1(q1(u)).is_zero());
      CHECK((q0(q1(u)) + q1(q0(u))).is_zero());
      if (t % 10 == 0) {
        int e = static_cast<int>(rng() % 6);
        auto v = random_class(R, e, rng);
        int s = d % 2 ? -1 : 1;
        CHECK(q0(u * v) == q0(u) * v + s * (u * q0(v)));
        CHECK(q1(u * v) == q1(u) * v + s * (u * q1(v)));
        CHECK(u * v == (d * e % 2 ? -1 : 1) * (v * u));
      }
    }
  }
}

TEST_CASE("M is Q1-stable") {
  for (int p : {3, 5, 7}) {
    SymbolicRing R(p, {"x", "y", "z"});
    for (const auto& gen : m_generators(R, 2, 4)) CHECK(reduce_mod_M(q1(gen), 2).is_zero());
  }
}

TEST_CASE("coefficient sweep over (alpha, alpha1, alpha2)") {
  SymbolicRing R4(3, {"x", "y", "w", "z"});
  SymbolicRing R3(3, {"x", "y", "z"});
  InducedMap g(3, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  InducedMap gp(3, {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  auto x1 = R4.gen("x1"), y1 = R4.gen("y1"), w1 = R4.gen("w1"), z2 = R4.gen("z2");
  Monomial target{0b011, {0, 0, 1}};
  for (int a = 0; a < 3; ++a)
    for (int a1 = 0; a1 < 3; ++a1)
      for (int a2 = 0; a2 < 3; ++a2) {
        auto c = a * (x1 * y1 * z2) + a1 * (w1 * x1 * z2) + a2 * (w1 * y1 * z2);
        auto rg = reduce_mod_M(g(c), 2), rgp = reduce_mod_M(gp(c), 2);
        CHECK(rg.coefficient(target) == ((a - a1) % 3 + 3) % 3);
        CHECK(rgp.coefficient(target) == (3 - a1) % 3);
        bool both_vanish = q1(rg).is_zero() && q1(rgp).is_zero();
        if (both_vanish) CHECK(a == 0);
      }
}

TEST_CASE("JSON round trip") {
  SymbolicRing R(3, {"x", "y", "z"});
  auto u = q0(R.gen("x1") * R.gen("y1") * R.gen("z1"));
  CHECK(R.from_json(R.to_json(u)) == u);
}
