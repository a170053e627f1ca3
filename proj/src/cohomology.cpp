#include "cohomcheck/cohomology.hpp"

#include <algorithm>

namespace cohomcheck {

bool CohomologyClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::uint8_t c) { return c == 0; });
}

namespace {

// Sum of the coefficients in block j of an element of P_n.
int block_sum(const FpVec& v, std::size_t j, std::size_t N, int p) {
  int s = 0;
  for (std::size_t h = 0; h < N; ++h) s += v[j * N + h];
  return s % p;
}

}  // namespace

CohomologyRing::CohomologyRing(const MinimalResolution& res) : res_(&res) {}

CohomologyClass CohomologyRing::zero(int n) const {
  return {n, FpVec(static_cast<std::size_t>(dim(n)), 0)};
}

CohomologyClass CohomologyRing::unit() const { return {0, FpVec{1}}; }

CohomologyClass CohomologyRing::basis(int n, int i) const {
  auto c = zero(n);
  c.coords.at(static_cast<std::size_t>(i)) = 1;
  return c;
}

const std::vector<FpVec>& CohomologyRing::chain_map(int m, int i, int k) const {
  if (m + k > max_degree())
    throw ResolutionError("chain_map: degree exceeds the resolution");
  auto& levels = chain_[{m, i}];
  const auto& R = *res_;
  const std::size_t N = static_cast<std::size_t>(R.order());
  const auto& alg = R.algebra();
  if (levels.empty()) {
    std::vector<FpVec> l0;
    for (int j = 0; j < R.betti(m); ++j) {
      FpVec v(N, 0);
      if (j == i) v[static_cast<std::size_t>(alg.identity())] = 1;
      l0.push_back(std::move(v));
    }
    levels.push_back(std::move(l0));
  }
  while (static_cast<int>(levels.size()) <= k) {
    const int kk = static_cast<int>(levels.size());
    const auto& prev = levels.back();
    std::vector<FpVec> cur;
    for (int j = 0; j < R.betti(m + kk); ++j) {
      const FpVec& d = R.boundary(m + kk, j);
      FpVec y(R.dim(kk - 1), 0);
      for (int l = 0; l < R.betti(m + kk - 1); ++l)
        for (std::size_t h = 0; h < N; ++h) {
          int c = d[static_cast<std::size_t>(l) * N + h];
          if (c) alg.add_translate(y, prev[static_cast<std::size_t>(l)].data(), R.betti(kk - 1), static_cast<int>(h), c);
        }
      auto x = R.preimage(kk, y);
      if (!x) throw ResolutionError("chain_map: lifting failed");
      cur.push_back(std::move(*x));
    }
    levels.push_back(std::move(cur));
  }
  return levels[static_cast<std::size_t>(k)];
}

CohomologyClass CohomologyRing::product(const CohomologyClass& u, const CohomologyClass& v) const {
  const int m = u.degree, n = v.degree, P = p();
  if (m + n > max_degree()) throw ResolutionError("product: degree exceeds the resolution");
  if (m == 0 || n == 0) {
    const auto& s = m == 0 ? u : v;
    auto out = m == 0 ? v : u;
    for (auto& c : out.coords) c = static_cast<std::uint8_t>((c * s.coords[0]) % P);
    out.degree = m + n;
    return out;
  }
  const std::size_t N = static_cast<std::size_t>(res_->order());
  CohomologyClass out = zero(m + n);
  for (int i = 0; i < dim(m); ++i) {
    int ui = u.coords[static_cast<std::size_t>(i)];
    if (!ui) continue;
    const auto& U = chain_map(m, i, n);
    for (int j = 0; j < dim(m + n); ++j) {
      int s = 0;
      for (int l = 0; l < dim(n); ++l) {
        int vl = v.coords[static_cast<std::size_t>(l)];
        if (vl) s += vl * block_sum(U[static_cast<std::size_t>(j)], static_cast<std::size_t>(l), N, P);
      }
      if ((m * n) % 2) s = P - s % P;
      auto& o = out.coords[static_cast<std::size_t>(j)];
      o = static_cast<std::uint8_t>((o + ui * s) % P);
    }
  }
  return out;
}

CohomologyClass CohomologyRing::bockstein(const CohomologyClass& u) const {
  const int n = u.degree, P = p(), Q = P * P;
  if (n + 1 > max_degree()) throw ResolutionError("bockstein: degree exceeds the resolution");
  const std::size_t N = static_cast<std::size_t>(res_->order());
  CohomologyClass out = zero(n + 1);
  for (int k = 0; k < dim(n + 1); ++k) {
    const auto& d = res_->lifted_boundary(n + 1, k);
    long s = 0;
    for (int i = 0; i < dim(n); ++i) {
      int ui = u.coords[static_cast<std::size_t>(i)];
      if (!ui) continue;
      long blk = 0;
      for (std::size_t h = 0; h < N; ++h) blk += d[static_cast<std::size_t>(i) * N + h];
      s += ui * (blk % Q);
    }
    s %= Q;
    if (s % P) throw ResolutionError("bockstein: value not divisible by p");
    out.coords[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(s / P);
  }
  return out;
}

FpMatrix CohomologyRing::bockstein_matrix(int n) const {
  FpMatrix m(p(), static_cast<std::size_t>(dim(n + 1)), static_cast<std::size_t>(dim(n)));
  for (int i = 0; i < dim(n); ++i) {
    auto b = bockstein(basis(n, i));
    for (int k = 0; k < dim(n + 1); ++k) m.at(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = b.coords[static_cast<std::size_t>(k)];
  }
  return m;
}

CohomologyClass CohomologyRing::class_of_hom(const std::vector<int>& values) const {
  const std::size_t N = static_cast<std::size_t>(res_->order());
  CohomologyClass out = zero(1);
  for (int i = 0; i < dim(1); ++i) {
    const FpVec& d = res_->boundary(1, i);
    long s = 0;
    for (std::size_t h = 0; h < N; ++h) s += static_cast<long>(d[h]) * values[h];
    out.coords[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(((s % p()) + p()) % p());
  }
  return out;
}

std::vector<int> CohomologyRing::hom_of_class(const CohomologyClass& u) const {
  const FiniteGroup& G = res_->group();
  const int N = G.order(), P = p();
  auto gens = irredundant_generators(G);
  // Homomorphisms G -> F_p as the solutions of f(s x) = f(s) + f(x), f(e) = 0.
  FpMatrix eqs(P, static_cast<std::size_t>(N) * gens.size() + 1, static_cast<std::size_t>(N));
  std::size_t r = 0;
  for (int s : gens)
    for (int x = 0; x < N; ++x, ++r) {
      auto add = [&](int col, int c) {
        auto& e = eqs.at(r, static_cast<std::size_t>(col));
        e = static_cast<std::uint8_t>(((e + c) % P + P) % P);
      };
      add(G.mul(s, x), 1);
      add(s, -1);
      add(x, -1);
    }
  eqs.at(r, static_cast<std::size_t>(G.identity_index())) = 1;
  auto homs = rank_kernel_image(eqs).kernel;
  // Express u in the classes of the basis homomorphisms.
  FpMatrix cls(P, static_cast<std::size_t>(dim(1)), homs.size());
  for (std::size_t k = 0; k < homs.size(); ++k) {
    std::vector<int> vals(homs[k].begin(), homs[k].end());
    auto c = class_of_hom(vals);
    for (int i = 0; i < dim(1); ++i) cls.at(static_cast<std::size_t>(i), k) = c.coords[static_cast<std::size_t>(i)];
  }
  auto coef = solve(cls, u.coords);
  if (!coef) throw ResolutionError("hom_of_class: class not in the span of homomorphisms");
  std::vector<int> out(static_cast<std::size_t>(N), 0);
  for (std::size_t k = 0; k < homs.size(); ++k)
    for (int x = 0; x < N; ++x)
      out[static_cast<std::size_t>(x)] = (out[static_cast<std::size_t>(x)] + (*coef)[k] * homs[k][static_cast<std::size_t>(x)]) % P;
  return out;
}

// ---------------------------------------------------------------------------

Restriction::Restriction(const Homomorphism& phi, const MinimalResolution& src,
                         const MinimalResolution& tgt, int max_degree)
    : p_(src.p()) {
  if (&phi.source() != &src.group() || &phi.target() != &tgt.group())
    throw ResolutionError("Restriction: resolutions do not match the homomorphism");
  if (max_degree > src.max_degree() || max_degree > tgt.max_degree())
    throw ResolutionError("Restriction: degree exceeds a resolution");
  const std::size_t NK = static_cast<std::size_t>(src.order()), NG = static_cast<std::size_t>(tgt.order());
  const auto& algG = tgt.algebra();
  std::vector<FpVec> prev;
  {
    FpVec e0(NG, 0);
    e0[static_cast<std::size_t>(algG.identity())] = 1;
    prev.push_back(std::move(e0));
  }
  auto push_matrix = [&](int n, const std::vector<FpVec>& F) {
    FpMatrix m(p_, static_cast<std::size_t>(src.betti(n)), static_cast<std::size_t>(tgt.betti(n)));
    for (int j = 0; j < src.betti(n); ++j)
      for (int i = 0; i < tgt.betti(n); ++i)
        m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) =
            static_cast<std::uint8_t>(block_sum(F[static_cast<std::size_t>(j)], static_cast<std::size_t>(i), NG, p_));
    mats_.push_back(std::move(m));
  };
  push_matrix(0, prev);
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<FpVec> cur;
    for (int j = 0; j < src.betti(n); ++j) {
      const FpVec& d = src.boundary(n, j);
      FpVec y(tgt.dim(n - 1), 0);
      for (int l = 0; l < src.betti(n - 1); ++l)
        for (std::size_t k = 0; k < NK; ++k) {
          int c = d[static_cast<std::size_t>(l) * NK + k];
          if (c) algG.add_translate(y, prev[static_cast<std::size_t>(l)].data(), tgt.betti(n - 1), phi(static_cast<int>(k)), c);
        }
      auto x = tgt.preimage(n, y);
      if (!x) throw ResolutionError("Restriction: chain map lifting failed");
      cur.push_back(std::move(*x));
    }
    push_matrix(n, cur);
    prev = std::move(cur);
  }
}

CohomologyClass Restriction::operator()(const CohomologyClass& u) const {
  const FpMatrix& m = mats_.at(static_cast<std::size_t>(u.degree));
  return {u.degree, m.apply(u.coords)};
}

// ---------------------------------------------------------------------------

SubgroupRestriction::SubgroupRestriction(const Homomorphism& inc, const MinimalResolution& sub,
                                         const MinimalResolution& grp, int max_degree)
    : p_(sub.p()) {
  if (&inc.source() != &sub.group() || &inc.target() != &grp.group())
    throw ResolutionError("SubgroupRestriction: resolutions do not match the inclusion");
  if (!inc.is_injective()) throw ResolutionError("SubgroupRestriction: map is not injective");
  if (max_degree > sub.max_degree() || max_degree > grp.max_degree())
    throw ResolutionError("SubgroupRestriction: degree exceeds a resolution");
  const FiniteGroup& G = grp.group();
  const int NG = G.order(), NK = sub.order();
  const auto& algK = sub.algebra();

  // Right cosets K g: representative t(g) and k(g) in K with g = k(g) t(g).
  std::vector<int> k_of(static_cast<std::size_t>(NG), -1), coset_of(static_cast<std::size_t>(NG), -1);
  std::vector<int> k_index(static_cast<std::size_t>(NG), -1);
  for (int k = 0; k < NK; ++k) k_index[static_cast<std::size_t>(inc(k))] = k;
  std::vector<int> reps;
  for (int g = 0; g < NG; ++g) {
    if (coset_of[static_cast<std::size_t>(g)] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int k = 0; k < NK; ++k) {
      int x = G.mul(inc(k), g);
      coset_of[static_cast<std::size_t>(x)] = c;
      k_of[static_cast<std::size_t>(x)] = k;
    }
  }
  const int T = static_cast<int>(reps.size());

  // phi_n(t e_j) in P^K_n, indexed [t * b_n + j].
  std::vector<FpVec> prev;
  for (int t = 0; t < T; ++t) {
    FpVec e0(static_cast<std::size_t>(NK), 0);
    e0[static_cast<std::size_t>(algK.identity())] = 1;
    prev.push_back(std::move(e0));
  }

  auto apply_prev = [&](int n, int t, const FpVec& d) {
    // Phi_{n-1}(t * d) for d in P^G_{n-1}.
    FpVec y(sub.dim(n - 1), 0);
    const int bprev = grp.betti(n - 1);
    for (int i = 0; i < bprev; ++i)
      for (int g = 0; g < NG; ++g) {
        int c = d[static_cast<std::size_t>(i) * static_cast<std::size_t>(NG) + static_cast<std::size_t>(g)];
        if (!c) continue;
        int tg = G.mul(reps[static_cast<std::size_t>(t)], g);
        int tp = coset_of[static_cast<std::size_t>(tg)];
        algK.add_translate(y, prev[static_cast<std::size_t>(tp) * static_cast<std::size_t>(bprev) + static_cast<std::size_t>(i)].data(),
                           sub.betti(n - 1), k_of[static_cast<std::size_t>(tg)], c);
      }
    return y;
  };

  {
    FpMatrix m0(p_, 1, 1);
    m0.at(0, 0) = 1;
    mats_.push_back(std::move(m0));
  }
  for (int n = 1; n <= max_degree; ++n) {
    const int bn = grp.betti(n), bprev = grp.betti(n - 1), bk = sub.betti(n);
    std::vector<FpVec> cur;
    cur.reserve(static_cast<std::size_t>(T * bn));
    for (int t = 0; t < T; ++t)
      for (int j = 0; j < bn; ++j) {
        auto y = apply_prev(n, t, grp.boundary(n, j));
        auto x = sub.preimage(n, y);
        if (!x) throw ResolutionError("SubgroupRestriction: chain map lifting failed");
        cur.push_back(std::move(*x));
      }

    // Columns: Phi^*(w_l) for l < bk, then coboundaries of the C^{n-1} basis.
    const std::size_t rows = static_cast<std::size_t>(T * bn);
    const std::size_t cols = static_cast<std::size_t>(bk + T * bprev);
    Echelon ech(p_, rows, cols);
    for (int l = 0; l < bk; ++l) {
      FpVec v(rows + cols, 0);
      for (std::size_t r = 0; r < rows; ++r)
        v[r] = static_cast<std::uint8_t>(block_sum(cur[r], static_cast<std::size_t>(l), static_cast<std::size_t>(NK), p_));
      v[rows + static_cast<std::size_t>(l)] = 1;
      ech.insert(std::move(v));
    }
    // delta(c)(t e_j) = sum over (i, g) of coefficient * c(t(tg) e_i).
    std::vector<FpVec> delta_cols(static_cast<std::size_t>(T * bprev), FpVec(rows, 0));
    for (int t = 0; t < T; ++t)
      for (int j = 0; j < bn; ++j) {
        const FpVec& d = grp.boundary(n, j);
        for (int i = 0; i < bprev; ++i)
          for (int g = 0; g < NG; ++g) {
            int c = d[static_cast<std::size_t>(i) * static_cast<std::size_t>(NG) + static_cast<std::size_t>(g)];
            if (!c) continue;
            int tp = coset_of[static_cast<std::size_t>(G.mul(reps[static_cast<std::size_t>(t)], g))];
            auto& e = delta_cols[static_cast<std::size_t>(tp * bprev + i)][static_cast<std::size_t>(t * bn + j)];
            e = static_cast<std::uint8_t>((e + c) % p_);
          }
      }
    for (std::size_t c = 0; c < delta_cols.size(); ++c) {
      FpVec v(rows + cols, 0);
      std::copy(delta_cols[c].begin(), delta_cols[c].end(), v.begin());
      v[rows + static_cast<std::size_t>(bk) + c] = 1;
      ech.insert(std::move(v));
    }
    FpMatrix m(p_, static_cast<std::size_t>(bk), static_cast<std::size_t>(bn));
    for (int i = 0; i < bn; ++i) {
      FpVec v(rows + cols, 0);
      for (int t = 0; t < T; ++t) v[static_cast<std::size_t>(t * bn + i)] = 1;
      if (!ech.reduce(v)) throw ResolutionError("SubgroupRestriction: class not in span");
      for (int l = 0; l < bk; ++l)
        m.at(static_cast<std::size_t>(l), static_cast<std::size_t>(i)) =
            static_cast<std::uint8_t>((p_ - v[rows + static_cast<std::size_t>(l)]) % p_);
    }
    mats_.push_back(std::move(m));
    prev = std::move(cur);
  }
}

CohomologyClass SubgroupRestriction::operator()(const CohomologyClass& u) const {
  const FpMatrix& m = mats_.at(static_cast<std::size_t>(u.degree));
  return {u.degree, m.apply(u.coords)};
}

// ---------------------------------------------------------------------------

CohomologyClass extension_class(const Homomorphism& pi, const MonomialElement& z,
                                const MinimalResolution& res_q, int section_choice) {
  const FiniteGroup& E = pi.source();
  const FiniteGroup& Q = pi.target();
  if (&Q != &res_q.group()) throw ResolutionError("extension_class: resolution is not of the quotient");
  if (!pi.is_surjective()) throw ResolutionError("extension_class: map is not surjective");
  const int P = Q.p(), NQ = Q.order();
  if (E.order() != NQ * P) throw ResolutionError("extension_class: kernel does not have order p");
  const int zi = E.index_of(z);
  std::vector<int> zpow_log(static_cast<std::size_t>(E.order()), -1);
  for (int k = 0; k < P; ++k) zpow_log[static_cast<std::size_t>(E.pow(zi, k))] = k;
  for (int x = 0; x < E.order(); ++x)
    if (pi(x) == Q.identity_index() && zpow_log[static_cast<std::size_t>(x)] < 0)
      throw ResolutionError("extension_class: kernel is not generated by z");

  std::vector<int> sec(static_cast<std::size_t>(NQ), -1);
  for (int x = 0; x < E.order(); ++x)
    if (sec[static_cast<std::size_t>(pi(x))] < 0) sec[static_cast<std::size_t>(pi(x))] = x;
  sec[static_cast<std::size_t>(Q.identity_index())] = E.identity_index();
  if (section_choice != 0)
    for (int q = 0; q < NQ; ++q) {
      if (q == Q.identity_index()) continue;
      int k = static_cast<int>((static_cast<long>(q) * 7 + section_choice * 13 + q * q) % P);
      sec[static_cast<std::size_t>(q)] = E.mul(sec[static_cast<std::size_t>(q)], E.pow(zi, k));
    }
  auto cocycle = [&](int g, int h) {
    int gh = Q.mul(g, h);
    int x = E.mul(E.mul(sec[static_cast<std::size_t>(g)], sec[static_cast<std::size_t>(h)]),
                  E.inv(sec[static_cast<std::size_t>(gh)]));
    int k = zpow_log[static_cast<std::size_t>(x)];
    if (k < 0) throw ResolutionError("extension_class: cocycle value outside <z>");
    return k;
  };

  const std::size_t N = static_cast<std::size_t>(NQ);
  const int id = Q.identity_index();
  CohomologyClass out{2, FpVec(static_cast<std::size_t>(res_q.betti(2)), 0)};
  for (int j = 0; j < res_q.betti(2); ++j) {
    const FpVec& d2 = res_q.boundary(2, j);
    long s = 0;
    for (int i = 0; i < res_q.betti(1); ++i) {
      const FpVec& d1 = res_q.boundary(1, i);
      for (std::size_t hp = 0; hp < N; ++hp) {
        int a = d2[static_cast<std::size_t>(i) * N + hp];
        if (!a || static_cast<int>(hp) == id) continue;
        for (std::size_t h = 0; h < N; ++h) {
          int b = d1[h];
          if (!b || static_cast<int>(h) == id) continue;
          s += static_cast<long>(a) * b * cocycle(static_cast<int>(hp), static_cast<int>(h));
        }
      }
    }
    out.coords[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(s % P);
  }
  return out;
}

}  // namespace cohomcheck
