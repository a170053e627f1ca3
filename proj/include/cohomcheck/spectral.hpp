// Multiplicative spectral sequence of a central Z/p-extension:
// E2 = base (x) Lambda(z1) (x) F_p[z2] with d2(z1) = tau2, d3(z2) = tau3 and
// base classes permanent. E_r^{s,t} is stored as a subquotient Z_r / B_r of
// base^s, since each row t carries exactly one fibre monomial z1^{t mod 2} z2^{t/2}.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomcheck/linalg.hpp"
#include "cohomcheck/ring_table.hpp"

namespace cohomcheck {

struct SpectralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A subquotient Z / B of F_p^n, both given by bases (B inside Z).
struct Subquotient {
  std::size_t ambient = 0;
  std::vector<FpVec> z, b;
  int dim() const { return static_cast<int>(z.size()) - static_cast<int>(b.size()); }
};

enum class Certificate { None, Split, ZeroAtE4, StableRange };
std::string to_string(Certificate c);

struct EInfinityEntry {
  int s = 0, t = 0, dim = 0;
  Certificate certificate = Certificate::None;
  std::string reason;
};

class CentralSS {
 public:
  /// E2 is available for s <= base.max_degree(); E3 and E4 need the base two
  /// degrees past the position, so page_degree() = min(total_degree, max - 2).
  CentralSS(const RingTable& base, int total_degree);

  /// Configures d2(z1) = tau2 (degree 2) and d3(z2) = tau3 (degree 3).
  /// Throws when d3 is not well defined on E3 or does not square to zero.
  void set_transgressions(const CohomologyClass& tau2, const CohomologyClass& tau3);

  const RingTable& base() const { return *base_; }
  int total_degree() const { return D_; }
  int page_degree() const { return Dpages_; }
  int p() const { return base_->p(); }

  /// Label of the fibre monomial on row t.
  static std::string fibre_label(int t);

  const Subquotient& page(int r, int s, int t) const;
  int dim(int r, int s, int t) const { return page(r, s, t).dim(); }
  /// d_r on E2 representatives: base^s -> base^{s+r}, r in {2, 3}.
  FpVec differential(int r, int s, int t, const FpVec& b) const;

  /// True when v (a vector of base^s) lies in Z_r and is zero modulo B_r.
  bool is_zero_in(int r, int s, int t, const FpVec& v) const;
  /// True when the classes of vs span E_r^{s,t} (and are independent there).
  bool is_basis_of(int r, int s, int t, const std::vector<FpVec>& vs) const;
  /// Kernel of d_r restricted to Z_r(s,t), as vectors of base^s.
  std::vector<FpVec> kernel(int r, int s, int t) const;

  EInfinityEntry e_infinity(int s, int t) const;
  /// Sum of certified E_infinity dims in total degree n; throws if any
  /// position is uncertified.
  int assemble_dim(int n) const;

  /// Leibniz checks: d2 on all pairs of E2 basis elements and d3 against base
  /// classes on E3. Empty string on success.
  std::string check_multiplicativity() const;
  /// d_r o d_r = 0 on every stored position.
  std::string check_square_zero() const;

  nlohmann::ordered_json to_json() const;

 private:
  FpMatrix mul_matrix(int s, const CohomologyClass& c) const;

  const RingTable* base_;
  int D_, Dpages_;
  CohomologyClass tau2_, tau3_;
  bool configured_ = false;
  std::map<std::pair<int, int>, FpMatrix> m2_, m3_;  // (s) -> multiplication by tau
  mutable std::map<std::tuple<int, int, int>, Subquotient> pages_;
};

/// Reference ring H*(BPU(p); F_p) through degree 6: 1, 0, u2, u3 = Q0 u2,
/// u2^2, 0, u2^3, with u2 u3 = 0.
RingTable bpu_table(int p);

}  // namespace cohomcheck
