// The concrete subgroups of SU(p) x SU(p) and the maps between them used by
// the verification suite, built for one prime.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cohomcheck/groups.hpp"

namespace cohomcheck {

class Atlas {
 public:
  struct Options {
    bool big_groups = true;   // H, A3, A3', pi(H) and maps involving them
    bool with_hhat = false;   // the order p^{p+4} group before dividing by Delta(xi)
  };

  explicit Atlas(int p) : Atlas(p, Options{}) {}
  Atlas(int p, Options opts);
  Atlas(const Atlas&) = delete;
  Atlas& operator=(const Atlas&) = delete;

  int p() const { return p_; }
  const MonomialModel& model() const { return model_; }
  /// Single-factor SU(p) elements: xi, alpha, beta, sigma1..sigmap.
  const MonomialElement& su(const std::string& name) const { return su_.at(name); }

  // SU(p) level.
  FiniteGroup extraspecial;  // <alpha, beta, xi>, order p^3
  FiniteGroup h2;            // <beta, sigma_k>, order p^{p+1}
  FiniteGroup a2;            // extraspecial / <xi>
  FiniteGroup pi_h2;         // h2 / <xi>
  FiniteGroup beta_xi;       // <beta, xi> inside h2
  FiniteGroup cyc_sigma1;    // <sigma1 mod xi> inside pi_h2
  FiniteGroup cyc_beta;      // <beta mod xi> inside pi_h2

  // PU(p) x PU(p) level (present when big_groups).
  FiniteGroup hhat;  // only with_hhat
  FiniteGroup h;     // generated by Delta(alpha), Delta(beta), Gamma2(beta), Gamma2(sigma_k) mod Delta(xi)
  FiniteGroup a3;    // <Delta alpha, Delta beta, Delta xi, Gamma2 xi> / <Delta xi>
  FiniteGroup a3p;   // <Gamma1 alpha, Gamma2 beta, Delta xi, Gamma2 xi> / <Delta xi>
  FiniteGroup pi_h;  // h / <Gamma2 xi> = a2 x pi_h2, factorwise

  std::unique_ptr<Homomorphism> extraspecial_to_h2;  // inclusion
  std::unique_ptr<Homomorphism> extraspecial_to_a2;  // projection
  std::unique_ptr<Homomorphism> h2_to_pi_h2;         // projection
  std::unique_ptr<Homomorphism> beta_xi_to_h2;
  std::unique_ptr<Homomorphism> cyc_sigma1_to_pi_h2;
  std::unique_ptr<Homomorphism> cyc_beta_to_pi_h2;

  std::unique_ptr<Homomorphism> a3_to_h;    // g
  std::unique_ptr<Homomorphism> a3p_to_h;   // g'
  std::unique_ptr<Homomorphism> a3_to_a2;   // phi
  std::unique_ptr<Homomorphism> a3p_to_a2;  // phi'
  std::unique_ptr<Homomorphism> h_to_pi_h;  // pi
  std::unique_ptr<Homomorphism> a2_diag_to_pi_h;  // alpha -> (alpha, alpha), beta -> (beta, beta)
  std::unique_ptr<Homomorphism> a2_mixed_to_pi_h; // alpha -> (alpha, 1), beta -> (1, beta)
  std::unique_ptr<Homomorphism> pi_h_to_a2;       // first factor
  std::unique_ptr<Homomorphism> pi_h_to_pi_h2;    // second factor
  std::unique_ptr<Homomorphism> a2_to_pi_h;       // first-factor inclusion
  std::unique_ptr<Homomorphism> pi_h2_to_pi_h;    // second-factor inclusion
  std::unique_ptr<Homomorphism> delta_extraspecial_to_h;   // Delta restricted
  std::unique_ptr<Homomorphism> gamma2_extraspecial_to_h;  // Gamma2 restricted

  /// Named group lookup used by the CLI ("H", "A3", "A3'", "piH2", ...).
  const FiniteGroup* group(const std::string& name) const;
  std::map<std::string, const FiniteGroup*> groups() const;

 private:
  int p_;
  MonomialModel model_;
  std::map<std::string, MonomialElement> su_;
};

}  // namespace cohomcheck
