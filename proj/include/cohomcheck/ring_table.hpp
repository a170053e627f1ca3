// Truncated graded-commutative F_p-algebras given by structure constants,
// with a Q0 matrix per degree and a registry of named classes.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomcheck/cohomology.hpp"
#include "cohomcheck/linalg.hpp"

namespace cohomcheck {

class RingTable {
 public:
  RingTable() = default;
  RingTable(int p, int max_degree, std::vector<int> dims);

  int p() const { return p_; }
  int max_degree() const { return D_; }
  int dim(int n) const { return n < 0 || n > D_ ? 0 : dims_[static_cast<std::size_t>(n)]; }
  const std::vector<int>& dims() const { return dims_; }

  std::vector<std::vector<std::string>> labels;
  std::map<std::string, CohomologyClass> named;

  CohomologyClass zero(int n) const;
  CohomologyClass unit() const;
  CohomologyClass basis(int n, int i) const;
  const CohomologyClass& at(const std::string& name) const;

  /// Structure constant vector of basis(m, i) * basis(n, j).
  const FpVec& basis_product(int m, int i, int n, int j) const;
  void set_basis_product(int m, int i, int n, int j, FpVec v);
  void set_q0(int n, FpMatrix m);
  bool has_q0(int n) const;
  const FpMatrix& q0_matrix(int n) const { return q0_.at(static_cast<std::size_t>(n)); }

  CohomologyClass mul(const CohomologyClass& u, const CohomologyClass& v) const;
  CohomologyClass q0(const CohomologyClass& u) const;
  CohomologyClass add(const CohomologyClass& u, const CohomologyClass& v) const;
  CohomologyClass sub(const CohomologyClass& u, const CohomologyClass& v) const;
  CohomologyClass scale(const CohomologyClass& u, int c) const;

  /// Checks associativity, graded commutativity, Q0^2 = 0 and the derivation
  /// rule on all basis pairs/triples. Returns a description of the first
  /// failure, or an empty string.
  std::string validate() const;

  nlohmann::ordered_json to_json() const;
  static RingTable from_json(const nlohmann::json& j);

 private:
  std::size_t key(int m, int n) const { return static_cast<std::size_t>(m * (D_ + 1) + n); }
  int p_ = 3, D_ = 0;
  std::vector<int> dims_;
  std::vector<FpVec> prod_;  // prod_[key(m,n)] flattened (i, j, k)
  std::vector<FpMatrix> q0_;
  std::vector<char> has_q0_;
};

/// Ring table of a computed cohomology ring up to degree D (<= resolution
/// degree), with Q0 wherever the resolution allows.
RingTable ring_table(const CohomologyRing& ring, int D);

/// Graded tensor product A (x) B truncated at total degree D, with the Koszul
/// sign (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'. Named classes of the
/// factors are carried over as a (x) 1 and 1 (x) b; a name used by both
/// factors becomes "(name,1)" and "(1,name)".
RingTable tensor(const RingTable& a, const RingTable& b, int D);

/// Embeds a class of a factor into a tensor product built by tensor().
CohomologyClass tensor_left(const RingTable& a, const RingTable& b, int D, const CohomologyClass& u);
CohomologyClass tensor_right(const RingTable& a, const RingTable& b, int D, const CohomologyClass& v);

}  // namespace cohomcheck
