// Cohomology operations on top of a minimal resolution: cup products via
// chain-map lifting, the Bockstein Q0, restriction along homomorphisms,
// extension classes of central extensions, and an independent bar-complex
// Betti number oracle.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cohomcheck/groups.hpp"
#include "cohomcheck/resolution.hpp"

namespace cohomcheck {

/// A cohomology class: degree and coordinates in the basis of H^n dual to the
/// free generators of P_n.
struct CohomologyClass {
  int degree = 0;
  FpVec coords;
  bool is_zero() const;
  bool operator==(const CohomologyClass&) const = default;
};

class CohomologyRing {
 public:
  explicit CohomologyRing(const MinimalResolution& res);

  const MinimalResolution& resolution() const { return *res_; }
  int p() const { return res_->p(); }
  int dim(int n) const { return res_->betti(n); }
  int max_degree() const { return res_->max_degree(); }

  CohomologyClass zero(int n) const;
  CohomologyClass unit() const;
  CohomologyClass basis(int n, int i) const;

  /// u v, with degree(u) + degree(v) <= max_degree.
  CohomologyClass product(const CohomologyClass& u, const CohomologyClass& v) const;
  /// Bockstein H^n -> H^{n+1}; needs n + 1 <= max_degree.
  CohomologyClass bockstein(const CohomologyClass& u) const;
  /// Matrix of Q0 on H^n: rows indexed by the H^{n+1} basis.
  FpMatrix bockstein_matrix(int n) const;

  /// H^1 = Hom(G, F_p): class of a homomorphism given by its values on all elements.
  CohomologyClass class_of_hom(const std::vector<int>& values) const;
  /// Values on all group elements of the homomorphism represented by u in H^1.
  std::vector<int> hom_of_class(const CohomologyClass& u) const;

  /// Chain map P_{m+k} -> P_k lifting the basis class (m, i), for k <= len.
  const std::vector<FpVec>& chain_map(int m, int i, int k) const;

 private:
  const MinimalResolution* res_;
  // chain_[(m, i)][k][j] = image of e^{m+k}_j in P_k
  mutable std::map<std::pair<int, int>, std::vector<std::vector<FpVec>>> chain_;
};

/// Restriction along a homomorphism phi: K -> G between the groups of two
/// resolutions. Computed by a K-equivariant chain map P^K -> P^G, solving in
/// the resolution of G.
class Restriction {
 public:
  Restriction(const Homomorphism& phi, const MinimalResolution& source_res,
              const MinimalResolution& target_res, int max_degree);
  /// phi^*: H^n(G) -> H^n(K).
  CohomologyClass operator()(const CohomologyClass& u) const;
  const FpMatrix& matrix(int n) const { return mats_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<FpMatrix> mats_;
  int p_;
};

/// Restriction to a subgroup K <= G that only solves in the (small) resolution
/// of K: builds a K-chain map Res P^G -> P^K and inverts it on cohomology.
class SubgroupRestriction {
 public:
  SubgroupRestriction(const Homomorphism& inclusion, const MinimalResolution& sub_res,
                      const MinimalResolution& group_res, int max_degree);
  CohomologyClass operator()(const CohomologyClass& u) const;
  const FpMatrix& matrix(int n) const { return mats_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<FpMatrix> mats_;
  int p_;
};

/// Class in H^2(Q) of a central extension 1 -> <z> -> E -> Q -> 1 of order p,
/// where pi: E -> Q is surjective and z generates its kernel. The cocycle is
/// c(g, h) = k with s(g)s(h)s(gh)^{-1} = z^k for a normalized section s chosen
/// by `section_choice` (0: least preimage; other values perturb the section).
CohomologyClass extension_class(const Homomorphism& pi, const MonomialElement& z,
                                const MinimalResolution& res_q, int section_choice = 0);

/// Normalized bar complex oracle. Degrees below the top are exact ranks of
/// the coboundaries (sparse column reduction with clearing). In the top
/// degree D the rank of the coboundary is bounded below by reducing boundary
/// columns of C_{D+1} -> C_D, and h^D is bounded below by explicit cocycles
/// (cup products and Bocksteins of lower cocycles) independent modulo
/// coboundaries; the scan stops as soon as the two bounds meet, otherwise it
/// runs over every column.
struct BarOracleReport {
  std::vector<int> betti;
  std::vector<long> ranks;  // ranks[n] = rank of delta_n : C^n -> C^{n+1}, n < D
  int top_cocycles = 0;
  long top_rank = 0;
  long top_columns_scanned = 0, top_columns_total = 0;
  bool top_bounds_met = false;
  double seconds = 0;
};

BarOracleReport bar_oracle(const FiniteGroup& g, int max_degree);
/// Betti numbers h^0..h^max_degree from bar_oracle.
std::vector<int> bar_betti(const FiniteGroup& g, int max_degree);

}  // namespace cohomcheck
