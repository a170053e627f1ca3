// Exact monomial groups inside U(p) x U(p): elements D(w)B^s in each factor,
// with D(w) = diag(omega^{w_1}, ..., omega^{w_p}), omega = exp(2 pi i / p^2),
// and B the cyclic shift permutation matrix.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace cohomcheck {

inline constexpr int kMaxMonomialPrime = 7;
inline constexpr std::size_t kDefaultElementCap = 1'000'000;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws unless p is an odd prime.
void require_odd_prime(int p);
bool is_prime(int n);

/// One factor D(w) B^s. Weights are residues mod p^2, shift a residue mod p.
struct MonomialFactor {
  std::uint8_t shift = 0;
  std::array<std::uint8_t, kMaxMonomialPrime> weights{};
  auto operator<=>(const MonomialFactor&) const = default;
};

struct MonomialElement {
  MonomialFactor f1;
  MonomialFactor f2;
  auto operator<=>(const MonomialElement&) const = default;
};

struct MonomialElementHash {
  std::size_t operator()(const MonomialElement& e) const noexcept;
};

/// Arithmetic in the ambient two-factor monomial model for a fixed p.
///
/// Convention: D(w)B^s * D(w')B^{s'} = D(w + rot_s(w')) B^{s+s'} where
/// rot_s(w')_i = w'_{i+s}, which is B^s D(w') B^{-s} for B e_{i+1} = e_i.
class MonomialModel {
 public:
  explicit MonomialModel(int p);
  int p() const { return p_; }
  int p2() const { return p_ * p_; }

  MonomialElement identity() const { return {}; }
  MonomialElement multiply(const MonomialElement& a, const MonomialElement& b) const;
  MonomialElement inverse(const MonomialElement& a) const;
  MonomialElement power(const MonomialElement& a, long long k) const;
  int order_of(const MonomialElement& a) const;
  /// Entry exponents of the trace: returns nullopt when the factor has a
  /// nonzero shift (trace zero), otherwise the list of omega-exponents.
  std::optional<std::vector<int>> trace_exponents(const MonomialFactor& f) const;

  // Embeddings of a single SU(p) element (stored in f1) into the product.
  MonomialElement delta(const MonomialElement& m) const { return {m.f1, m.f1}; }
  MonomialElement gamma1(const MonomialElement& m) const { return {m.f1, MonomialFactor{}}; }
  MonomialElement gamma2(const MonomialElement& m) const { return {MonomialFactor{}, m.f1}; }

  std::string to_string(const MonomialElement& e) const;
  nlohmann::ordered_json to_json(const MonomialElement& e) const;
  MonomialElement from_json(const nlohmann::json& j) const;

 private:
  MonomialFactor mul_factor(const MonomialFactor& a, const MonomialFactor& b) const;
  int p_;
};

/// The named SU(p) matrices xi, alpha, beta, sigma_1..sigma_p, each stored as
/// a single-factor element (second factor identity).
std::map<std::string, MonomialElement> standard_generators(int p);

/// A finite group realized by enumeration, possibly as a quotient of a
/// monomial group by a central subgroup. Elements are canonical coset
/// representatives (the least element of each coset), sorted ascending.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  int p() const { return model_.p(); }
  const MonomialModel& model() const { return model_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<MonomialElement>& elements() const { return elements_; }
  const MonomialElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  /// Canonical generators as stored (may include the identity).
  const std::vector<MonomialElement>& generators() const { return generators_; }
  std::vector<int> generator_indices() const;
  /// Ambient elements of the central subgroup that is factored out.
  const std::vector<MonomialElement>& central_subgroup() const { return central_; }
  const std::vector<MonomialElement>& central_generators() const { return central_gens_; }
  bool is_quotient() const { return central_.size() > 1; }

  MonomialElement canonical(const MonomialElement& x) const;
  /// Index of (the coset of) x; throws if x is not in the group.
  int index_of(const MonomialElement& x) const;
  std::optional<int> find(const MonomialElement& x) const;
  bool contains(const MonomialElement& x) const { return find(x).has_value(); }

  int identity_index() const { return identity_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int pow(int a, long long k) const;
  int order_of(int a) const;
  bool has_table() const { return !table_.empty(); }

  nlohmann::ordered_json to_json() const;

  friend FiniteGroup generate(int p, const std::vector<MonomialElement>& gens,
                              const std::vector<MonomialElement>& central_gens,
                              std::size_t cap);

 private:
  MonomialModel model_{3};
  std::string name_;
  std::vector<MonomialElement> generators_;
  std::vector<MonomialElement> central_gens_;
  std::vector<MonomialElement> central_;
  std::vector<MonomialElement> elements_;
  std::unordered_map<MonomialElement, int, MonomialElementHash> index_;
  std::vector<int> table_;  // |G|^2 multiplication table, when small
  std::vector<int> inv_;
  int identity_ = 0;
};

/// Multiplication-table threshold: groups up to this order get a full table.
inline constexpr int kTableOrderCap = 2500;

/// Closure of gens modulo the central subgroup generated by central_gens.
/// Throws GroupError naming the cap if the enumeration exceeds it.
FiniteGroup generate(int p, const std::vector<MonomialElement>& gens,
                     const std::vector<MonomialElement>& central_gens = {},
                     std::size_t cap = kDefaultElementCap);

FiniteGroup group_from_json(const nlohmann::json& j, std::size_t cap = kDefaultElementCap);

/// A homomorphism given by images of the source's stored generators, with the
/// full element map computed and verified on every (generator, element) pair.
class Homomorphism {
 public:
  Homomorphism(const FiniteGroup& source, const FiniteGroup& target,
               std::vector<MonomialElement> images);

  const FiniteGroup& source() const { return *source_; }
  const FiniteGroup& target() const { return *target_; }
  int operator()(int source_index) const { return map_[static_cast<std::size_t>(source_index)]; }
  const std::vector<int>& table() const { return map_; }
  const std::vector<MonomialElement>& images() const { return images_; }
  bool is_injective() const;
  bool is_surjective() const;
  bool operator==(const Homomorphism& other) const;

  nlohmann::ordered_json to_json() const;

 private:
  const FiniteGroup* source_;
  const FiniteGroup* target_;
  std::vector<MonomialElement> images_;
  std::vector<int> map_;
};

/// Verified homomorphism; throws GroupError with a witness on failure.
Homomorphism hom(const FiniteGroup& source, const FiniteGroup& target,
                 std::vector<MonomialElement> images);
/// Inclusion of a subgroup whose elements live in the same ambient model.
Homomorphism inclusion(const FiniteGroup& sub, const FiniteGroup& super);
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

struct QuotientResult {
  FiniteGroup quotient;
  std::vector<MonomialElement> projection_images;  // images of G's generators
};

/// G / <z> for z central in G. Throws GroupError naming a non-commuting
/// generator when z is not central.
QuotientResult central_quotient(const FiniteGroup& g, const MonomialElement& z,
                                std::size_t cap = kDefaultElementCap);

struct GroupInvariants {
  int order = 0;
  int exponent = 0;
  std::vector<int> center;              // element indices
  std::vector<int> commutator_subgroup;  // element indices
  std::vector<int> abelianization;      // cyclic orders, descending
};

GroupInvariants group_invariants(const FiniteGroup& g);
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
/// Stored generators with redundant ones (lying in the span of earlier ones) dropped.
std::vector<int> irredundant_generators(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
bool is_elementary_abelian(const FiniteGroup& g);

struct ConjugacyClass {
  int representative;
  std::vector<int> members;
};
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

}  // namespace cohomcheck
