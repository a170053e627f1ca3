// The F_p[C_p]-module H^2(BT^{p-1}): the augmentation-zero submodule of the
// rank-p permutation module, with u^(i) = t^(i) - t^(i+1) and g permuting the
// t^(i) cyclically. Kernel/image computations of (1 - g) and (1 - g)^{p-1}.
#pragma once

#include <json.hpp>

#include "cohomcheck/linalg.hpp"

namespace cohomcheck {

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);
FpMatrix identity_matrix(int p, std::size_t n);
FpMatrix matrix_power(const FpMatrix& a, int e);
/// a + c b
FpMatrix matrix_axpy(const FpMatrix& a, const FpMatrix& b, int c);

class CpModule {
 public:
  explicit CpModule(int p);

  int p() const { return p_; }
  int dim() const { return p_ - 1; }
  /// Action of g on the u-basis (column i = g u^(i+1)), derived through the
  /// permutation module.
  const FpMatrix& g() const { return g_; }
  /// The same action written down from the closed formula
  /// g u^(i) = u^(i+1), g u^(p-1) = -(u^(1) + ... + u^(p-1)).
  FpMatrix g_formula() const;
  /// Permutation action on the ambient t-basis and the embedding u -> t.
  const FpMatrix& g_ambient() const { return g_ambient_; }
  const FpMatrix& embedding() const { return embed_; }

  FpMatrix one_minus_g() const;
  /// Norm element 1 + g + ... + g^{p-1} acting on the module.
  FpMatrix norm() const;
  /// u~ = sum i u^(i).
  FpVec u_tilde() const;

 private:
  int p_;
  FpMatrix g_, g_ambient_, embed_;
};

struct KernelImageAnalysis {
  int p = 0;
  std::vector<FpVec> ker_one_minus_g;
  std::vector<FpVec> im_one_minus_g;
  std::vector<FpVec> ker_power;  // kernel of (1 - g)^{p-1}
  FpVec u_tilde;
  bool u_tilde_spans_kernel = false;
  bool u_tilde_in_image = false;
  bool power_is_zero = false;
  bool g_order_p = false;
  bool power_equals_norm = false;
  bool action_matches_formula = false;
  nlohmann::ordered_json to_json() const;
};

KernelImageAnalysis kernel_image_analysis(int p);

struct E2Terms {
  int p = 0;
  int dim_e2_02 = 0;  // ker(1 - g)
  int dim_e2_12 = 0;  // ker(1 - g)^{p-1} / im(1 - g)
  FpVec rep_02;       // u~
  FpVec rep_12;       // u^(1), tensored with w1
  bool rep_02_valid = false;
  bool rep_12_valid = false;  // u^(1) lies in ker(1-g)^{p-1} and not in im(1-g)
  nlohmann::ordered_json to_json() const;
};

E2Terms e2_terms(int p);

}  // namespace cohomcheck
