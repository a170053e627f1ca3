// Identification of a computed cohomology ring of an elementary abelian group
// with the symbolic model, given an ordered basis of the group.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohomcheck/cohomology.hpp"
#include "cohomcheck/symbolic.hpp"

namespace cohomcheck {

class ElemabMatch {
 public:
  /// `basis` lists group element indices g_1..g_n forming an F_p-basis; the
  /// degree-1 class of letter i is the dual functional of g_i and its capital
  /// is Q0 of it. Needs ring.max_degree() >= max(D, 2).
  ElemabMatch(const CohomologyRing& ring, std::vector<int> basis, std::vector<std::string> letters, int D);

  const SymbolicRing& model() const { return model_; }
  int max_degree() const { return D_; }

  /// Homogeneous symbolic class to its cohomology class.
  CohomologyClass to_ring(const SymbolicClass& u, int degree) const;
  SymbolicClass from_ring(const CohomologyClass& u) const;
  /// Matrix whose columns are the images of model().basis(n).
  const FpMatrix& matrix(int n) const { return to_.at(static_cast<std::size_t>(n)); }

  /// Checks bijectivity in every degree, compatibility with products of basis
  /// monomials and with Q0. Empty on success.
  std::string verify() const;

 private:
  const CohomologyRing* ring_;
  SymbolicRing model_;
  int D_;
  std::vector<FpMatrix> to_, from_;
};

/// Element coordinates of an elementary abelian group in the given basis:
/// coords[x] is the exponent vector of element x.
std::vector<std::vector<int>> elemab_coordinates(const FiniteGroup& g, const std::vector<int>& basis);

}  // namespace cohomcheck
