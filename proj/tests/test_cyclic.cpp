#include <doctest.h>

#include "cohomcheck/cyclic.hpp"

using namespace cohomcheck;

namespace {

// All vectors of F_p^n, for brute-force kernels at tiny p.
std::vector<FpVec> all_vectors(int p, int n) {
  std::vector<FpVec> out{FpVec{}};
  for (int i = 0; i < n; ++i) {
    std::vector<FpVec> next;
    for (const auto& v : out)
      for (int c = 0; c < p; ++c) {
        auto w = v;
        w.push_back(static_cast<std::uint8_t>(c));
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("the derived action agrees with the closed formula") {
  for (int p : {3, 5, 7, 11, 13}) {
    CpModule m(p);
    CHECK(m.g().data == m.g_formula().data);
  }
}

TEST_CASE("kernel and image of 1 - g") {
  for (int p : {3, 5, 7, 11, 13}) {
    auto a = kernel_image_analysis(p);
    CHECK(a.ker_one_minus_g.size() == 1);
    CHECK(a.u_tilde_spans_kernel);
    CHECK(a.u_tilde_in_image);
    CHECK(a.im_one_minus_g.size() == static_cast<std::size_t>(p - 2));
    CHECK(a.power_is_zero);
    CHECK(a.g_order_p);
    CHECK(a.power_equals_norm);
    CHECK(a.ker_power.size() == static_cast<std::size_t>(p - 1));
  }
}

TEST_CASE("p = 3 kernel by brute force") {
  CpModule m(3);
  auto omg = m.one_minus_g();
  int zeros = 0;
  for (const auto& v : all_vectors(3, 2)) {
    auto w = omg.apply(v);
    if (w[0] == 0 && w[1] == 0) ++zeros;
  }
  CHECK(zeros == 3);  // a line
  CHECK(rank(omg) == 1);
  CHECK(m.u_tilde() == FpVec{1, 2});
}

TEST_CASE("E2 terms") {
  for (int p : {3, 5, 7, 11, 13}) {
    auto e = e2_terms(p);
    CHECK(e.dim_e2_02 == 1);
    CHECK(e.dim_e2_12 == 1);
    CHECK(e.rep_02_valid);
    CHECK(e.rep_12_valid);
  }
}

TEST_CASE("rejects unsupported primes") {
  CHECK_THROWS(CpModule(2));
  CHECK_THROWS(CpModule(17));
}
