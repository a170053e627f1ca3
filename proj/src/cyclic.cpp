#include "cohomcheck/cyclic.hpp"

#include <algorithm>

#include "cohomcheck/groups.hpp"

namespace cohomcheck {

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols != b.rows || a.p != b.p) throw LinalgError("matmul: shape mismatch");
  FpMatrix c(a.p, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      int x = a.at(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) = static_cast<std::uint8_t>((c.at(i, j) + x * b.at(k, j)) % a.p);
    }
  return c;
}

FpMatrix identity_matrix(int p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix matrix_power(const FpMatrix& a, int e) {
  FpMatrix r = identity_matrix(a.p, a.rows);
  for (int i = 0; i < e; ++i) r = matmul(r, a);
  return r;
}

FpMatrix matrix_axpy(const FpMatrix& a, const FpMatrix& b, int c) {
  FpMatrix r = a;
  c = ((c % a.p) + a.p) % a.p;
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = static_cast<std::uint8_t>((r.data[i] + c * b.data[i]) % a.p);
  return r;
}

CpModule::CpModule(int p) : p_(p) {
  require_odd_prime(p);
  if (p > 13) throw LinalgError("CpModule: p must be at most 13");
  const std::size_t P = static_cast<std::size_t>(p), n = P - 1;
  g_ambient_ = FpMatrix(p, P, P);
  for (std::size_t i = 0; i < P; ++i) g_ambient_.at((i + 1) % P, i) = 1;
  embed_ = FpMatrix(p, P, n);
  for (std::size_t i = 0; i < n; ++i) {
    embed_.at(i, i) = 1;
    embed_.at(i + 1, i) = static_cast<std::uint8_t>(p - 1);
  }
  // g u^(i) lies in the image of the embedding; solve for its u-coordinates.
  FpMatrix moved = matmul(g_ambient_, embed_);
  g_ = FpMatrix(p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    FpVec col(P);
    for (std::size_t r = 0; r < P; ++r) col[r] = moved.at(r, i);
    auto x = solve(embed_, col);
    if (!x) throw LinalgError("CpModule: submodule not g-stable");
    for (std::size_t r = 0; r < n; ++r) g_.at(r, i) = (*x)[r];
  }
}

FpMatrix CpModule::g_formula() const {
  const std::size_t n = static_cast<std::size_t>(dim());
  FpMatrix m(p_, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
  for (std::size_t r = 0; r < n; ++r) m.at(r, n - 1) = static_cast<std::uint8_t>(p_ - 1);
  return m;
}

FpMatrix CpModule::one_minus_g() const {
  return matrix_axpy(identity_matrix(p_, static_cast<std::size_t>(dim())), g_, -1);
}

FpMatrix CpModule::norm() const {
  FpMatrix s(p_, static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
  FpMatrix gk = identity_matrix(p_, static_cast<std::size_t>(dim()));
  for (int k = 0; k < p_; ++k) {
    s = matrix_axpy(s, gk, 1);
    gk = matmul(gk, g_);
  }
  return s;
}

FpVec CpModule::u_tilde() const {
  FpVec v(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % p_);
  return v;
}

namespace {

bool in_span(int p, std::size_t width, const std::vector<FpVec>& basis, const FpVec& v) {
  Echelon e(p, width);
  for (const auto& b : basis) e.insert(b);
  return e.in_span(v);
}

bool is_zero_matrix(const FpMatrix& m) {
  return std::all_of(m.data.begin(), m.data.end(), [](auto x) { return x == 0; });
}

}  // namespace

KernelImageAnalysis kernel_image_analysis(int p) {
  CpModule m(p);
  KernelImageAnalysis out;
  out.p = p;
  const std::size_t n = static_cast<std::size_t>(m.dim());
  auto omg = m.one_minus_g();
  auto a = rank_kernel_image(omg);
  out.ker_one_minus_g = a.kernel;
  out.im_one_minus_g = a.image;
  auto pw = matrix_power(omg, p - 1);
  out.ker_power = rank_kernel_image(pw).kernel;
  out.u_tilde = m.u_tilde();
  const FpVec image_of_tilde = omg.apply(out.u_tilde);
  out.u_tilde_spans_kernel = out.ker_one_minus_g.size() == 1 &&
                             std::all_of(image_of_tilde.begin(), image_of_tilde.end(), [](auto x) { return x == 0; });
  out.u_tilde_in_image = in_span(p, n, out.im_one_minus_g, out.u_tilde);
  out.power_is_zero = is_zero_matrix(pw);
  out.g_order_p = matrix_power(m.g(), p).data == identity_matrix(p, n).data;
  out.power_equals_norm = pw.data == m.norm().data;
  out.action_matches_formula = m.g().data == m.g_formula().data;
  return out;
}

E2Terms e2_terms(int p) {
  CpModule m(p);
  auto a = kernel_image_analysis(p);
  const std::size_t n = static_cast<std::size_t>(m.dim());
  E2Terms out;
  out.p = p;
  out.dim_e2_02 = static_cast<int>(a.ker_one_minus_g.size());
  out.dim_e2_12 = static_cast<int>(a.ker_power.size() - a.im_one_minus_g.size());
  out.rep_02 = a.u_tilde;
  out.rep_02_valid = a.u_tilde_spans_kernel;
  out.rep_12 = FpVec(n, 0);
  out.rep_12[0] = 1;
  out.rep_12_valid = in_span(p, n, a.ker_power, out.rep_12) && !in_span(p, n, a.im_one_minus_g, out.rep_12);
  return out;
}

nlohmann::ordered_json KernelImageAnalysis::to_json() const {
  return {{"p", p},
          {"ker_one_minus_g", ker_one_minus_g},
          {"im_one_minus_g", im_one_minus_g},
          {"dim_ker_power", ker_power.size()},
          {"u_tilde", u_tilde},
          {"u_tilde_spans_kernel", u_tilde_spans_kernel},
          {"u_tilde_in_image", u_tilde_in_image},
          {"power_is_zero", power_is_zero},
          {"g_order_p", g_order_p},
          {"power_equals_norm", power_equals_norm},
          {"action_matches_formula", action_matches_formula}};
}

nlohmann::ordered_json E2Terms::to_json() const {
  return {{"p", p},
          {"E2_02", {{"dim", dim_e2_02}, {"representative", "u~"}, {"coords", rep_02}, {"valid", rep_02_valid}}},
          {"E2_12", {{"dim", dim_e2_12}, {"representative", "u^(1) w1"}, {"coords", rep_12}, {"valid", rep_12_valid}}}};
}

}  // namespace cohomcheck
