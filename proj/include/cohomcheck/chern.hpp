// Exact characters of the monomial groups over Z[omega], omega a primitive
// p^2-th root of unity, and mod-p Chern classes of characters of elementary
// abelian groups via the Whitney formula.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/groups.hpp"
#include "cohomcheck/symbolic.hpp"

namespace cohomcheck {

struct ChernError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of Z[x]/Phi_{p^2}(x) in the basis 1, x, ..., x^{p(p-1)-1}.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(int p);
  static Cyclotomic integer(int p, long long n);
  /// omega^e for any integer e.
  static Cyclotomic root(int p, long long e);

  int p() const { return p_; }
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const;
  /// The value as an integer when it lies in Z.
  std::optional<long long> as_integer() const;
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(long long k, Cyclotomic a);
  bool operator==(const Cyclotomic& o) const { return p_ == o.p_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  // reduces a polynomial of length p^2 (exponents mod p^2)
  static Cyclotomic reduce(int p, std::vector<long long> full);
  int p_ = 0;
  std::vector<long long> c_;
};

/// Class function on a finite group, stored per element index.
struct VirtualCharacter {
  const FiniteGroup* group = nullptr;
  std::vector<Cyclotomic> values;
  long long dimension() const;
  /// Values agree on conjugate elements.
  bool is_class_function() const;
};

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter operator*(long long k, const VirtualCharacter& a);
bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);

enum class Rep { Lambda1, Lambda, LambdaPrime, LambdaDD };
Rep rep_from_string(const std::string& s);
std::string to_string(Rep r);

/// Value of a representation on a monomial element of SU(p) x SU(p):
/// lambda1 uses the first factor, lambda = conj(tr g1) tr g2,
/// lambda' = |tr g1|^2 and lambda'' = lambda - lambda'.
Cyclotomic character_value(const MonomialModel& m, Rep r, const MonomialElement& e);

/// Character of r o phi on the group K, where phi maps (representatives of)
/// elements of K into SU(p) x SU(p). Throws when the value is not constant
/// on the cosets of K's central subgroup.
VirtualCharacter character_of(Rep r, const FiniteGroup& k,
                              const std::function<MonomialElement(const MonomialElement&)>& phi);
VirtualCharacter character_of(Rep r, const FiniteGroup& k);

/// (1/|K|) sum chi(g) conj(psi(g)); throws when not an integer.
long long inner_product(const VirtualCharacter& a, const VirtualCharacter& b);

/// Linear characters of an elementary abelian group in a basis: weights
/// (k_1..k_n) give g -> xi^{sum k_i c_i(g)}.
struct LinearCharacters {
  LinearCharacters(const FiniteGroup& a, std::vector<int> basis);
  const FiniteGroup& group() const { return *group_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  std::vector<std::vector<int>> all_weights() const;
  VirtualCharacter character(const std::vector<int>& weights) const;

 private:
  const FiniteGroup* group_;
  std::vector<int> basis_;
  std::vector<std::vector<int>> coords_;
};

/// Multiplicity of every linear character, keyed by weight vector.
std::map<std::vector<int>, long long> decompose_abelian(const VirtualCharacter& chi, const LinearCharacters& lc);

/// Total mod-p Chern class prod (1 + c1(chi))^{m_chi} with c1 of weights k the
/// degree-2 form sum k_i A_i, truncated above degree max_degree. Negative
/// multiplicities use the truncated inverse series.
SymbolicClass total_chern_class(const std::map<std::vector<int>, long long>& decomposition,
                                const SymbolicRing& ring, int max_degree);
/// Homogeneous degree-2i part.
SymbolicClass chern_component(const SymbolicClass& total, int i);
SymbolicClass truncate(const SymbolicClass& u, int max_degree);

/// The identities for lambda'' checked as class functions.
struct CharacterReport {
  int p = 0;
  bool delta_vanishes = false;            // Delta^*(lambda'') = 0 on p^{1+2}
  bool gamma2_equals_p_lambda1 = false;   // literally, as class functions
  bool gamma2_reduced_equal = false;      // equal modulo trivial characters
  long long gamma2_trivial_defect = 0;    // Gamma2^*(lambda'') - p lambda1 = defect * 1
  bool a3_decomposition_ok = false;       // +1 on weight-1, -1 on weight-0 characters
  int a3_plus = 0, a3_minus = 0, a3_other = 0;
  bool a3_restriction_compatible = false; // via H and directly
  bool c2_zero = false;
  bool c1_zero = false;
  bool class_functions = false;
  nlohmann::ordered_json to_json() const;
};

/// Uses the atlas groups p^{1+2} and A3; the compatibility check through H
/// needs an atlas with the big groups and is reported false otherwise.
CharacterReport character_report(const Atlas& at);

}  // namespace cohomcheck
