// Minimal free resolutions of F_p over F_p[G] for finite p-groups, and the
// cohomology operations computed from them.
//
// P_n is free on b_n generators e^n_j. A vector in P_n is stored densely with
// coordinate j * |G| + h holding the coefficient of h e^n_j (h an element
// index). G acts on the left: g (h e_j) = (g h) e_j.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cohomcheck/groups.hpp"
#include "cohomcheck/linalg.hpp"

namespace cohomcheck {

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group-algebra helper: left action of group elements on free modules.
class GroupAlgebra {
 public:
  explicit GroupAlgebra(const FiniteGroup& g);
  const FiniteGroup& group() const { return *g_; }
  int p() const { return p_; }
  int n() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int identity() const { return id_; }

  /// g * v for v in a free module of the given rank.
  FpVec act(int g, const FpVec& v, int rank) const;
  /// out += c * (g * v) over the free module (blockwise).
  void add_translate(FpVec& out, const std::uint8_t* v, int rank, int g, int c) const;

 private:
  const FiniteGroup* g_;
  int p_, n_, id_;
  std::vector<int> table_;
};

class MinimalResolution {
 public:
  struct Options {
    bool keep_top_solver = false;  // also build the preimage solver in the top degree
  };

  MinimalResolution(const FiniteGroup& g, int max_degree) : MinimalResolution(g, max_degree, Options{}) {}
  MinimalResolution(const FiniteGroup& g, int max_degree, Options opts);

  const FiniteGroup& group() const { return alg_.group(); }
  const GroupAlgebra& algebra() const { return alg_; }
  int p() const { return alg_.p(); }
  int order() const { return alg_.n(); }
  int max_degree() const { return max_degree_; }
  int betti(int n) const { return betti_.at(static_cast<std::size_t>(n)); }
  const std::vector<int>& betti_numbers() const { return betti_; }
  std::size_t dim(int n) const { return static_cast<std::size_t>(betti(n)) * static_cast<std::size_t>(order()); }

  /// d_n(e^n_j) in P_{n-1}, for 1 <= n <= max_degree.
  const FpVec& boundary(int n, int j) const { return d_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]; }
  /// d_n applied to an arbitrary element of P_n (n >= 1).
  FpVec apply_boundary(int n, const FpVec& v) const;
  /// Augmentation of an element of P_0.
  int augmentation(const FpVec& v) const;
  /// Some x in P_n with d_n x = y, or nullopt when y is not a boundary.
  std::optional<FpVec> preimage(int n, const FpVec& y) const;

  /// Lift of d_n to Z/p^2[G] with d~_{n-1} d~_n = 0 and augmentation(d~_1) = 0.
  const std::vector<std::uint16_t>& lifted_boundary(int n, int j) const;

  /// Evaluates a cochain u in Hom_G(P_n, F_p) = F_p^{b_n} on an element of P_n.
  int evaluate(const FpVec& u, const FpVec& v) const;

  /// Elapsed seconds building each degree.
  const std::vector<double>& timings() const { return timings_; }

 private:
  void build_solver(int n) const;
  void build_lift(int n) const;

  GroupAlgebra alg_;
  int max_degree_;
  std::vector<int> betti_;
  std::vector<std::vector<FpVec>> d_;
  mutable std::vector<std::unique_ptr<Echelon>> solver_;  // solver_[n] spans columns of d_n
  mutable std::vector<FpVec> pending_kernel_;
  mutable std::vector<std::vector<std::vector<std::uint16_t>>> lift_;
  std::vector<double> timings_;
};

}  // namespace cohomcheck
