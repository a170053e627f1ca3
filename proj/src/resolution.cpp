#include "cohomcheck/resolution.hpp"

#include <chrono>

namespace cohomcheck {

GroupAlgebra::GroupAlgebra(const FiniteGroup& g)
    : g_(&g), p_(g.p()), n_(g.order()), id_(g.identity_index()) {
  table_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)] = g.mul(a, b);
}

FpVec GroupAlgebra::act(int g, const FpVec& v, int rank) const {
  FpVec out(v.size(), 0);
  const std::size_t N = static_cast<std::size_t>(n_);
  const int* row = table_.data() + static_cast<std::size_t>(g) * N;
  for (int i = 0; i < rank; ++i) {
    const std::size_t off = static_cast<std::size_t>(i) * N;
    for (std::size_t h = 0; h < N; ++h) out[off + static_cast<std::size_t>(row[h])] = v[off + h];
  }
  return out;
}

void GroupAlgebra::add_translate(FpVec& out, const std::uint8_t* v, int rank, int g, int c) const {
  const std::size_t N = static_cast<std::size_t>(n_);
  const int* row = table_.data() + static_cast<std::size_t>(g) * N;
  for (int i = 0; i < rank; ++i) {
    const std::size_t off = static_cast<std::size_t>(i) * N;
    for (std::size_t h = 0; h < N; ++h) {
      if (!v[off + h]) continue;
      auto& o = out[off + static_cast<std::size_t>(row[h])];
      o = static_cast<std::uint8_t>((o + c * v[off + h]) % p_);
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

// Minimal generators of the submodule spanned (as a vector space) by `kernel`:
// a subset independent modulo I * K.
std::vector<FpVec> minimal_generators(const GroupAlgebra& alg, const std::vector<FpVec>& kernel,
                                      int rank) {
  const std::size_t width = static_cast<std::size_t>(rank) * static_cast<std::size_t>(alg.n());
  Echelon rad(alg.p(), width);
  rad.reserve(kernel.size());
  std::vector<int> gens = irredundant_generators(alg.group());
  for (const auto& k : kernel)
    for (int s : gens) {
      FpVec w = alg.act(s, k, rank);
      for (std::size_t i = 0; i < width; ++i)
        w[i] = static_cast<std::uint8_t>((w[i] + alg.p() - k[i]) % alg.p());
      rad.insert(std::move(w));
    }
  std::vector<FpVec> out;
  for (const auto& k : kernel)
    if (rad.insert(k)) out.push_back(k);
  return out;
}

}  // namespace

MinimalResolution::MinimalResolution(const FiniteGroup& g, int max_degree, Options opts)
    : alg_(g), max_degree_(max_degree) {
  if (max_degree < 0) throw ResolutionError("negative degree");
  if (g.order() % g.p() != 0 && g.order() != 1)
    throw ResolutionError("group order is not a power of p");
  const int N = order();
  betti_ = {1};
  d_.resize(static_cast<std::size_t>(max_degree) + 1);
  solver_.resize(static_cast<std::size_t>(max_degree) + 1);
  lift_.resize(static_cast<std::size_t>(max_degree) + 1);
  timings_.push_back(0.0);

  std::vector<FpVec> kernel;
  for (int h = 0; h < N; ++h) {
    if (h == alg_.identity()) continue;
    FpVec v(static_cast<std::size_t>(N), 0);
    v[static_cast<std::size_t>(h)] = 1;
    v[static_cast<std::size_t>(alg_.identity())] = static_cast<std::uint8_t>(p() - 1);
    kernel.push_back(std::move(v));
  }

  for (int n = 0; n < max_degree; ++n) {
    auto t0 = Clock::now();
    auto gens = minimal_generators(alg_, kernel, betti_.back());
    kernel.clear();
    betti_.push_back(static_cast<int>(gens.size()));
    d_[static_cast<std::size_t>(n) + 1] = std::move(gens);
    if (n + 1 < max_degree || opts.keep_top_solver) {
      build_solver(n + 1);
      // Kernel of d_{n+1}: tags of the columns that reduced to zero were
      // recorded while building the solver.
      kernel = std::move(pending_kernel_);
    }
    timings_.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
  }
}

void MinimalResolution::build_solver(int n) const {
  if (solver_[static_cast<std::size_t>(n)]) return;
  const std::size_t N = static_cast<std::size_t>(order());
  const std::size_t w = dim(n - 1), t = dim(n);
  auto ech = std::make_unique<Echelon>(p(), w, t);
  ech->reserve(t);
  pending_kernel_.clear();
  for (int j = 0; j < betti(n); ++j) {
    const FpVec& dj = boundary(n, j);
    for (std::size_t g = 0; g < N; ++g) {
      FpVec v(w + t, 0);
      FpVec moved = alg_.act(static_cast<int>(g), dj, betti(n - 1));
      std::copy(moved.begin(), moved.end(), v.begin());
      v[w + static_cast<std::size_t>(j) * N + g] = 1;
      FpVec r = v;
      if (ech->reduce(r)) {
        pending_kernel_.emplace_back(r.begin() + static_cast<long>(w), r.end());
      } else {
        ech->insert(std::move(v));
      }
    }
  }
  solver_[static_cast<std::size_t>(n)] = std::move(ech);
}

FpVec MinimalResolution::apply_boundary(int n, const FpVec& v) const {
  const std::size_t N = static_cast<std::size_t>(order());
  FpVec out(dim(n - 1), 0);
  for (int j = 0; j < betti(n); ++j)
    for (std::size_t h = 0; h < N; ++h) {
      int c = v[static_cast<std::size_t>(j) * N + h];
      if (c) alg_.add_translate(out, boundary(n, j).data(), betti(n - 1), static_cast<int>(h), c);
    }
  return out;
}

int MinimalResolution::augmentation(const FpVec& v) const {
  int s = 0;
  for (auto x : v) s += x;
  return s % p();
}

std::optional<FpVec> MinimalResolution::preimage(int n, const FpVec& y) const {
  if (n < 1 || n > max_degree_) throw ResolutionError("preimage: degree out of range");
  build_solver(n);
  const Echelon& ech = *solver_[static_cast<std::size_t>(n)];
  FpVec v(ech.stride(), 0);
  std::copy(y.begin(), y.end(), v.begin());
  if (!ech.reduce(v)) return std::nullopt;
  FpVec x(v.begin() + static_cast<long>(ech.width()), v.end());
  for (auto& e : x) e = static_cast<std::uint8_t>((p() - e) % p());
  return x;
}

int MinimalResolution::evaluate(const FpVec& u, const FpVec& v) const {
  const std::size_t N = static_cast<std::size_t>(order());
  long s = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!u[j]) continue;
    long blk = 0;
    for (std::size_t h = 0; h < N; ++h) blk += v[j * N + h];
    s += blk * u[j];
  }
  return static_cast<int>(s % p());
}

const std::vector<std::uint16_t>& MinimalResolution::lifted_boundary(int n, int j) const {
  if (n < 1 || n > max_degree_) throw ResolutionError("lifted_boundary: degree out of range");
  build_lift(n);
  return lift_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

void MinimalResolution::build_lift(int n) const {
  auto& L = lift_[static_cast<std::size_t>(n)];
  if (!L.empty() || betti(n) == 0) return;
  const int P = p(), Q = P * P;
  const std::size_t N = static_cast<std::size_t>(order());
  if (n >= 2) build_lift(n - 1);
  for (int j = 0; j < betti(n); ++j) {
    const FpVec& d = boundary(n, j);
    std::vector<std::uint16_t> lifted(d.begin(), d.end());
    if (n == 1) {
      long s = 0;
      for (auto x : lifted) s += x;
      int c = static_cast<int>(((-(s % Q) / P) % P + P) % P);
      auto& e = lifted[static_cast<std::size_t>(alg_.identity())];
      e = static_cast<std::uint16_t>((e + P * c) % Q);
    } else {
      // r = d~_{n-1}(lift) over Z/p^2; it vanishes mod p.
      std::vector<long> r(dim(n - 2), 0);
      const auto& prev = lift_[static_cast<std::size_t>(n - 1)];
      for (int i = 0; i < betti(n - 1); ++i)
        for (std::size_t h = 0; h < N; ++h) {
          int c = lifted[static_cast<std::size_t>(i) * N + h];
          if (!c) continue;
          const auto& src = prev[static_cast<std::size_t>(i)];
          for (int k = 0; k < betti(n - 2); ++k) {
            const std::size_t off = static_cast<std::size_t>(k) * N;
            for (std::size_t g = 0; g < N; ++g) {
              int a = src[off + g];
              if (a) r[off + static_cast<std::size_t>(alg_.mul(static_cast<int>(h), static_cast<int>(g)))] += c * a;
            }
          }
        }
      FpVec rho(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        int v = static_cast<int>(r[i] % Q);
        if (v % P) throw ResolutionError("lift: residue not divisible by p");
        rho[i] = static_cast<std::uint8_t>((P - v / P) % P);
      }
      auto e = preimage(n - 1, rho);
      if (!e) throw ResolutionError("lift: correction not solvable");
      for (std::size_t i = 0; i < lifted.size(); ++i)
        lifted[i] = static_cast<std::uint16_t>((lifted[i] + P * (*e)[i]) % Q);
    }
    L.push_back(std::move(lifted));
  }
}

}  // namespace cohomcheck
