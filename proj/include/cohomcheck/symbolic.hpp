// Symbolic model of H*(B(Z/p)^n; F_p) = Lambda(a_1..a_n) (x) F_p[A_1..A_n],
// A_i = Q0 a_i, with Q0, Q1, induced maps and the mod-M reductions.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomcheck/linalg.hpp"

namespace cohomcheck {

struct SymbolicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exterior subset as a bitmask and polynomial exponents. Ordered by mask,
/// then exponents lexicographically.
struct Monomial {
  std::uint32_t ext = 0;
  std::vector<int> exps;
  int degree() const;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

class SymbolicClass {
 public:
  SymbolicClass() = default;
  SymbolicClass(int p, int rank) : p_(p), rank_(rank) {}

  int p() const { return p_; }
  int rank() const { return rank_; }
  const std::map<Monomial, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int coefficient(const Monomial& m) const;
  /// Adds c * m.
  void add_term(const Monomial& m, int c);

  bool operator==(const SymbolicClass& o) const = default;

 private:
  int p_ = 3, rank_ = 0;
  std::map<Monomial, int> terms_;  // coefficients in 1..p-1
};

SymbolicClass operator+(const SymbolicClass& u, const SymbolicClass& v);
SymbolicClass operator-(const SymbolicClass& u, const SymbolicClass& v);
SymbolicClass operator*(const SymbolicClass& u, const SymbolicClass& v);
SymbolicClass operator*(int c, const SymbolicClass& u);
SymbolicClass pow(const SymbolicClass& u, int e);

SymbolicClass q0(const SymbolicClass& u);
SymbolicClass q1(const SymbolicClass& u);

/// Names and generators of a rank-n model. Letter "x" gives classes x1 (degree 1)
/// and x2 (degree 2).
class SymbolicRing {
 public:
  SymbolicRing(int p, std::vector<std::string> letters);

  int p() const { return p_; }
  int rank() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::string>& letters() const { return letters_; }
  int index_of(const std::string& letter) const;

  SymbolicClass zero() const { return {p_, rank()}; }
  SymbolicClass one() const;
  SymbolicClass constant(int c) const;
  /// Degree-1 generator a_i.
  SymbolicClass ext(int i) const;
  /// Degree-2 generator A_i.
  SymbolicClass poly(int i) const;
  /// "x1" or "x2" by name.
  SymbolicClass gen(const std::string& name) const;
  /// Monomials of degree n in canonical order.
  std::vector<Monomial> basis(int n) const;
  int dim(int n) const { return static_cast<int>(basis(n).size()); }

  std::string to_string(const SymbolicClass& u) const;
  nlohmann::ordered_json to_json(const SymbolicClass& u) const;
  SymbolicClass from_json(const nlohmann::json& j) const;

 private:
  int p_;
  std::vector<std::string> letters_;
};

/// Ring map sending a_i to sum_j m[i][j] b_j and A_i to sum_j m[i][j] B_j,
/// from a rank-m.size() model to a rank-target_rank model.
class InducedMap {
 public:
  InducedMap(int p, std::vector<std::vector<int>> m, int target_rank);
  static InducedMap identity(int p, int rank);
  SymbolicClass operator()(const SymbolicClass& u) const;
  int source_rank() const { return static_cast<int>(m_.size()); }
  int target_rank() const { return target_rank_; }

 private:
  int p_, target_rank_;
  std::vector<std::vector<int>> m_;
};

/// Residue modulo the submodule M generated by 1, z1, z1 z2, z2^i, z1 z2^i
/// (i >= 2) over the polynomials in the other variables: keeps exactly the
/// terms with no z1 and z2-exponent 1.
SymbolicClass reduce_mod_M(const SymbolicClass& u, int z_index);

/// The generators of M listed above, up to z2-exponent max_exp.
std::vector<SymbolicClass> m_generators(const SymbolicRing& ring, int z_index, int max_exp);

}  // namespace cohomcheck
