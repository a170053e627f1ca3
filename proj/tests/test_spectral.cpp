#include <doctest.h>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/spectral.hpp"

using namespace cohomcheck;

namespace {

const Atlas& small_atlas() {
  static Atlas at(3, {.big_groups = false});
  return at;
}

struct BG {
  RingTable base;
  CohomologyClass b2, a2, b3, a3;
  BG() : base(tensor(bpu_table(3), bpu_table(3), 6)) {
    b2 = base.at("(u2,1)");
    a2 = base.sub(b2, base.at("(1,u2)"));
    b3 = base.at("(u3,1)");
    a3 = base.sub(b3, base.at("(1,u3)"));
  }
};

}  // namespace

TEST_CASE("BPU reference ring") {
  auto t = bpu_table(3);
  CHECK(t.validate().empty());
  CHECK(t.q0(t.at("u2")) == t.at("u3"));
  CHECK(t.mul(t.at("u2"), t.at("u3")).is_zero());
  CHECK(!t.mul(t.at("u2"), t.mul(t.at("u2"), t.at("u2"))).is_zero());
}

TEST_CASE("BG case: transgressions a2, a3") {
  BG g;
  CHECK(g.base.validate().empty());
  CHECK(g.base.q0(g.a2) == g.a3);
  CentralSS ss(g.base, 4);
  ss.set_transgressions(g.a2, g.a3);
  CHECK(ss.check_multiplicativity().empty());
  CHECK(ss.check_square_zero().empty());

  for (auto [s, t] : std::vector<std::pair<int, int>>{{0, 4}, {1, 3}, {3, 1}}) {
    auto e = ss.e_infinity(s, t);
    CHECK(e.dim == 0);
    CHECK(e.certificate != Certificate::None);
  }
  auto e22 = ss.e_infinity(2, 2), e40 = ss.e_infinity(4, 0);
  CHECK(e22.dim == 1);
  CHECK(e40.dim == 1);
  CHECK(e22.certificate == Certificate::StableRange);
  CHECK(e40.certificate == Certificate::StableRange);
  CHECK(ss.is_basis_of(4, 2, 2, {g.b2.coords}));
  CHECK(ss.is_basis_of(4, 4, 0, {g.base.mul(g.b2, g.b2).coords}));
  CHECK(ss.assemble_dim(4) == 2);
  // a2 itself dies: it is hit by d2(z1z2) on row 2 and by d2(z1) on row 0
  CHECK(ss.is_zero_in(3, 2, 2, g.a2.coords));
  CHECK(ss.is_zero_in(3, 2, 0, g.a2.coords));
  CHECK(CentralSS::fibre_label(0) == "1");
  CHECK(CentralSS::fibre_label(3) == "z1z2");
  CHECK(CentralSS::fibre_label(4) == "z2^2");
}

TEST_CASE("BG case: E2 in degree 6 and the d3 on z2^2") {
  BG g;
  CentralSS ss(g.base, 6);
  ss.set_transgressions(g.a2, g.a3);
  CHECK(ss.dim(2, 6, 0) == 5);
  CHECK(ss.dim(2, 0, 6) == 1);
  // base is free over F_p[a2] on 1, b2, a3, b3, b2^2, a3b3, b2^3 through degree 6
  const auto& R = g.base;
  auto b22 = R.mul(g.b2, g.b2);
  std::vector<CohomologyClass> gens{R.unit(), g.b2, g.a3, g.b3, b22, R.mul(g.a3, g.b3), R.mul(b22, g.b2)};
  for (int n = 0; n <= 6; ++n) {
    Echelon e(3, static_cast<std::size_t>(R.dim(n)));
    int count = 0;
    for (const auto& m : gens) {
      if (m.degree > n || (n - m.degree) % 2) continue;
      auto v = m;
      for (int k = 0; k < (n - m.degree) / 2; ++k) v = R.mul(v, g.a2);
      ++count;
      CHECK(e.insert(v.coords).has_value());
    }
    CHECK(count == R.dim(n));
  }
  // d3(z2^2) = 2 a3 z2, nonzero on E3^{3,2}
  auto d = ss.differential(3, 0, 4, g.base.unit().coords);
  CHECK(d == g.base.scale(g.a3, 2).coords);
  CHECK(!ss.is_zero_in(3, 3, 2, d));
}

TEST_CASE("split extension: E2 is E_infinity") {
  BG g;
  CentralSS ss(g.base, 4);
  ss.set_transgressions(g.base.zero(2), g.base.zero(3));
  for (int n = 0; n <= 4; ++n) {
    int expect = 0;
    for (int s = 0; s <= n; ++s) expect += g.base.dim(s);
    CHECK(ss.assemble_dim(n) == expect);
  }
  CHECK(ss.e_infinity(2, 1).certificate == Certificate::Split);
}

TEST_CASE("E2 dimensions over A2") {
  const auto& at = small_atlas();
  MinimalResolution res(at.a2, 5);
  CohomologyRing ring(res);
  auto base = ring_table(ring, 5);
  CentralSS ss(base, 4);
  CHECK(ss.dim(2, 2, 1) == 3);
  CHECK(ss.dim(2, 1, 2) == 2);
  CHECK(ss.dim(2, 0, 4) == 1);
}

TEST_CASE("convergence: the extraspecial group over A2") {
  const auto& at = small_atlas();
  MinimalResolution res(at.a2, 6);
  CohomologyRing ring(res);
  auto base = ring_table(ring, 6);
  auto tau2 = extension_class(*at.extraspecial_to_a2, at.su("xi"), res);
  auto tau3 = ring.bockstein(tau2);
  CentralSS ss(base, 4);
  ss.set_transgressions(tau2, tau3);
  CHECK(ss.check_multiplicativity().empty());
  MinimalResolution direct(at.extraspecial, 4);
  for (int n = 0; n <= 4; ++n) CHECK(ss.assemble_dim(n) == direct.betti(n));
}

TEST_CASE("convergence: <beta, xi> over <beta>") {
  const auto& at = small_atlas();
  MinimalResolution rb(at.cyc_beta, 6);
  CohomologyRing ring(rb);
  auto base = ring_table(ring, 6);
  auto split = hom(at.beta_xi, at.cyc_beta, {at.su("beta"), MonomialElement{}});
  auto tau2 = extension_class(split, at.su("xi"), rb);
  CHECK(tau2.is_zero());
  CentralSS ss(base, 4);
  ss.set_transgressions(tau2, ring.bockstein(tau2));
  MinimalResolution direct(at.beta_xi, 4);
  for (int n = 0; n <= 4; ++n) CHECK(ss.assemble_dim(n) == direct.betti(n));
}

TEST_CASE("JSON summary and errors") {
  BG g;
  CentralSS ss(g.base, 4);
  CHECK_THROWS_AS(ss.differential(2, 0, 1, g.base.unit().coords), SpectralError);
  CHECK_THROWS_AS(ss.set_transgressions(g.b3, g.a3), SpectralError);
  ss.set_transgressions(g.a2, g.a3);
  auto j = ss.to_json();
  CHECK(j["E_infinity"].size() == 15);
  CHECK(j["page_degree"] == 4);
}
