#include "cohomcheck/elemab.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace cohomcheck {

std::vector<std::vector<int>> elemab_coordinates(const FiniteGroup& g, const std::vector<int>& basis) {
  const int P = g.p(), n = static_cast<int>(basis.size());
  if (!is_elementary_abelian(g)) throw SymbolicError(g.name() + " is not elementary abelian");
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(g.order()));
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= P;
  if (total != g.order()) throw SymbolicError("basis size does not match the group order");
  for (long k = 0; k < total; ++k) {
    long r = k;
    int x = g.identity_index();
    for (int i = 0; i < n; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(r % P);
      r /= P;
      x = g.mul(x, g.pow(basis[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]));
    }
    auto& slot = coords[static_cast<std::size_t>(x)];
    if (!slot.empty()) throw SymbolicError("elements do not form a basis");
    slot = c;
  }
  return coords;
}

ElemabMatch::ElemabMatch(const CohomologyRing& ring, std::vector<int> basis, std::vector<std::string> letters,
                         int D)
    : ring_(&ring), model_(ring.p(), std::move(letters)), D_(D) {
  const int n = model_.rank();
  if (static_cast<int>(basis.size()) != n) throw SymbolicError("one letter per basis element required");
  if (ring.max_degree() < std::max(D, 2)) throw SymbolicError("resolution too short for the matching");
  auto coords = elemab_coordinates(ring.resolution().group(), basis);

  std::vector<CohomologyClass> a, A;
  for (int i = 0; i < n; ++i) {
    std::vector<int> values;
    for (const auto& c : coords) values.push_back(c[static_cast<std::size_t>(i)]);
    a.push_back(ring.class_of_hom(values));
    A.push_back(ring.bockstein(a.back()));
  }

  // Classes of monomials, each built from a smaller one times one generator,
  // in the order exterior letters ascending, then capitals.
  std::map<Monomial, CohomologyClass> cache;
  cache[Monomial{0, std::vector<int>(static_cast<std::size_t>(n), 0)}] = ring.unit();
  std::function<CohomologyClass(const Monomial&)> cls = [&](const Monomial& m) -> CohomologyClass {
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    Monomial rest = m;
    CohomologyClass last;
    int i = n - 1;
    while (i >= 0 && rest.exps[static_cast<std::size_t>(i)] == 0) --i;
    if (i >= 0) {
      --rest.exps[static_cast<std::size_t>(i)];
      last = A[static_cast<std::size_t>(i)];
    } else {
      int top = 31 - std::countl_zero(rest.ext);
      rest.ext &= ~(1u << top);
      last = a[static_cast<std::size_t>(top)];
    }
    auto out = ring.product(cls(rest), last);
    cache[m] = out;
    return out;
  };

  for (int d = 0; d <= D; ++d) {
    auto mons = model_.basis(d);
    FpMatrix m(ring.p(), static_cast<std::size_t>(ring.dim(d)), mons.size());
    for (std::size_t k = 0; k < mons.size(); ++k) {
      auto c = cls(mons[k]);
      for (std::size_t r = 0; r < m.rows; ++r) m.at(r, k) = c.coords[r];
    }
    to_.push_back(std::move(m));
  }
}

CohomologyClass ElemabMatch::to_ring(const SymbolicClass& u, int degree) const {
  auto mons = model_.basis(degree);
  FpVec x(mons.size(), 0);
  for (const auto& [m, c] : u.terms()) {
    if (m.degree() != degree) throw SymbolicError("to_ring: class is not homogeneous of the given degree");
    auto it = std::lower_bound(mons.begin(), mons.end(), m);
    x[static_cast<std::size_t>(it - mons.begin())] = static_cast<std::uint8_t>(c);
  }
  return {degree, matrix(degree).apply(x)};
}

SymbolicClass ElemabMatch::from_ring(const CohomologyClass& u) const {
  auto x = solve(matrix(u.degree), u.coords);
  if (!x) throw SymbolicError("from_ring: class outside the image");
  auto mons = model_.basis(u.degree);
  SymbolicClass out = model_.zero();
  for (std::size_t k = 0; k < mons.size(); ++k) out.add_term(mons[k], (*x)[k]);
  return out;
}

std::string ElemabMatch::verify() const {
  for (int d = 0; d <= D_; ++d) {
    const auto& m = matrix(d);
    if (m.rows != m.cols || rank(m) != m.rows) return "matching is not bijective in degree " + std::to_string(d);
  }
  for (int d = 0; d <= D_; ++d)
    for (const auto& x : model_.basis(d)) {
      SymbolicClass u = model_.zero();
      u.add_term(x, 1);
      auto ru = to_ring(u, d);
      if (d + 1 <= D_ && ring_->bockstein(ru) != to_ring(q0(u), d + 1)) {
        return "Q0 mismatch on " + model_.to_string(u);
      }
      for (int e = 0; d + e <= D_; ++e)
        for (const auto& y : model_.basis(e)) {
          SymbolicClass v = model_.zero();
          v.add_term(y, 1);
          if (ring_->product(ru, to_ring(v, e)) != to_ring(u * v, d + e))
            return "product mismatch on " + model_.to_string(u) + " * " + model_.to_string(v);
        }
    }
  return {};
}

}  // namespace cohomcheck
