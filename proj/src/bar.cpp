// Normalized bar complex of a finite group with trivial F_p coefficients.
// A cochain of degree n is a function on (G \ 1)^n; tuples are indexed by
// base-M digits (M = |G| - 1), first entry most significant.
#include <algorithm>
#include <chrono>
#include <limits>
#include <memory>
#include <stdexcept>

#include "cohomcheck/cohomology.hpp"

namespace cohomcheck {

namespace {

using Column = SparseColumnReducer::Column;

class Bar {
  const FiniteGroup& g_;

 public:
  const int P, N, M;

 private:
  int id_;

 public:
  Bar(const FiniteGroup& g, int top) : g_(g), P(g.p()), N(g.order()), M(N - 1), id_(g.identity_index()) {
    pos_.assign(static_cast<std::size_t>(N), -1);
    for (int x = 0; x < N; ++x)
      if (x != id_) {
        pos_[static_cast<std::size_t>(x)] = static_cast<int>(el_.size());
        el_.push_back(x);
      }
    // merged digit of (a, b), or -1 when the product is the identity
    merge_.resize(static_cast<std::size_t>(M) * static_cast<std::size_t>(M));
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b) {
        int m = g.mul(el_[static_cast<std::size_t>(a)], el_[static_cast<std::size_t>(b)]);
        merge_[static_cast<std::size_t>(a * M + b)] = m == id_ ? -1 : pos_[static_cast<std::size_t>(m)];
      }
    pw_.assign(static_cast<std::size_t>(top) + 3, 1);
    for (std::size_t k = 1; k < pw_.size(); ++k) pw_[k] = pw_[k - 1] * M;
  }

  long size(int n) const { return pw_[static_cast<std::size_t>(n)]; }
  int merge(int a, int b) const { return merge_[static_cast<std::size_t>(a * M + b)]; }

  void digits(long idx, int n, std::vector<int>& d) const {
    d.resize(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = static_cast<int>(idx % M);
      idx /= M;
    }
  }

  // Column of delta_n applied to the basis cochain at tuple c.
  void coboundary_column(long c, int n, Column& out, std::vector<std::pair<std::uint32_t, int>>& raw) const {
    std::vector<int> t;
    digits(c, n, t);
    raw.clear();
    const long shift = size(n);
    const int last = (n + 1) % 2 == 0 ? 1 : P - 1;
    for (int x = 0; x < M; ++x) {
      raw.push_back({static_cast<std::uint32_t>(x * shift + c), 1});
      raw.push_back({static_cast<std::uint32_t>(c * M + x), last});
    }
    for (int i = 0; i < n; ++i) {
      const int sgn = (i + 1) % 2 == 0 ? 1 : P - 1;
      const int ti = t[static_cast<std::size_t>(i)];
      const long hi = c / size(n - i), lo = c % size(n - i - 1);
      for (int a = 0; a < M; ++a) {
        // a * b = t_i
        int b = pos_[static_cast<std::size_t>(g_.mul(g_.inv(el_[static_cast<std::size_t>(a)]), el_[static_cast<std::size_t>(ti)]))];
        if (b < 0) continue;
        long r = ((hi * M + a) * M + b) * size(n - i - 1) + lo;
        raw.push_back({static_cast<std::uint32_t>(r), sgn});
      }
    }
    collect(raw, out);
  }

  // Boundary of the (n+1)-cell c as a column over n-cells.
  void boundary_column(long c, int n, Column& out, std::vector<std::pair<std::uint32_t, int>>& raw) const {
    std::vector<int> t;
    digits(c, n + 1, t);
    raw.clear();
    raw.push_back({static_cast<std::uint32_t>(c % size(n)), 1});
    raw.push_back({static_cast<std::uint32_t>(c / M), (n + 1) % 2 ? P - 1 : 1});
    for (int i = 1; i <= n; ++i) {
      int m = merge(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
      if (m < 0) continue;
      long hi = c / size(n + 2 - i), lo = c % size(n - i);
      raw.push_back({static_cast<std::uint32_t>((hi * M + m) * size(n - i) + lo), i % 2 ? P - 1 : 1});
    }
    collect(raw, out);
  }

  // delta f over the integers, for f with entries in [0, p).
  std::vector<int> coboundary_int(const FpVec& f, int n) const {
    const long total = size(n + 1);
    std::vector<int> out(static_cast<std::size_t>(total), 0);
    std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long> pre(static_cast<std::size_t>(n) + 2, 0), suf(static_cast<std::size_t>(n) + 2, 0);
    for (long idx = 0; idx < total; ++idx) {
      for (int i = 0; i <= n; ++i) pre[static_cast<std::size_t>(i) + 1] = pre[static_cast<std::size_t>(i)] * M + d[static_cast<std::size_t>(i)];
      suf[static_cast<std::size_t>(n) + 1] = 0;
      for (int i = n; i >= 0; --i) suf[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)] * size(n - i) + suf[static_cast<std::size_t>(i) + 1];
      long s = f[static_cast<std::size_t>(suf[1])];
      for (int i = 1; i <= n; ++i) {
        int m = merge(d[static_cast<std::size_t>(i - 1)], d[static_cast<std::size_t>(i)]);
        if (m < 0) continue;
        long j = (pre[static_cast<std::size_t>(i) - 1] * M + m) * size(n - i) + suf[static_cast<std::size_t>(i) + 1];
        s += (i % 2 ? -1 : 1) * f[static_cast<std::size_t>(j)];
      }
      s += ((n + 1) % 2 ? -1 : 1) * f[static_cast<std::size_t>(pre[static_cast<std::size_t>(n)])];
      out[static_cast<std::size_t>(idx)] = static_cast<int>(s);
      for (int i = n; i >= 0; --i) {
        if (++d[static_cast<std::size_t>(i)] < M) break;
        d[static_cast<std::size_t>(i)] = 0;
      }
    }
    return out;
  }

  bool is_cocycle(const FpVec& f, int n) const {
    for (int v : coboundary_int(f, n))
      if (v % P) return false;
    return true;
  }

  FpVec bockstein(const FpVec& f, int n) const {
    auto d = coboundary_int(f, n);
    FpVec out(d.size());
    const int P2 = P * P;
    for (std::size_t i = 0; i < d.size(); ++i) {
      int v = ((d[i] % P2) + P2) % P2;
      if (v % P) throw std::logic_error("bar oracle: Bockstein of a non-cocycle");
      out[i] = static_cast<std::uint8_t>(v / P);
    }
    return out;
  }

  FpVec cup(const FpVec& f, const FpVec& h) const {
    FpVec out(f.size() * h.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f[i]) continue;
      for (std::size_t j = 0; j < h.size(); ++j) out[i * h.size() + j] = static_cast<std::uint8_t>((f[i] * h[j]) % P);
    }
    return out;
  }

 private:
  void collect(std::vector<std::pair<std::uint32_t, int>>& raw, Column& out) const {
    std::sort(raw.begin(), raw.end());
    out.clear();
    for (std::size_t k = 0; k < raw.size();) {
      std::uint32_t r = raw[k].first;
      int v = 0;
      while (k < raw.size() && raw[k].first == r) v += raw[k++].second;
      v %= P;
      if (v) out.push_back({r, static_cast<std::uint8_t>(v)});
    }
  }

  std::vector<int> el_, pos_, merge_;
  std::vector<long> pw_;
};

// Column reduction (pivot = largest row) that can track how each column was
// formed, so zero columns yield kernel vectors, and accepts dense vectors.
class Reducer {
 public:
  Reducer(int p, std::size_t rows) : p_(p), owner_(rows, -1) {}
  std::size_t rank() const { return val_.size(); }

  std::optional<std::uint32_t> add(Column c, Column tag, Column* kernel) {
    Column tmp;
    while (!c.empty()) {
      const std::uint32_t low = c.back().row;
      const std::int32_t o = owner_[low];
      if (o < 0) {
        const int inv = mod_inverse(c.back().val, p_);
        for (auto& e : c) e.val = static_cast<std::uint8_t>((e.val * inv) % p_);
        for (auto& e : tag) e.val = static_cast<std::uint8_t>((e.val * inv) % p_);
        owner_[low] = static_cast<std::int32_t>(val_.size());
        val_.push_back(std::move(c));
        tag_.push_back(std::move(tag));
        return low;
      }
      const int f = p_ - c.back().val;
      merge(c, val_[static_cast<std::size_t>(o)], f, tmp);
      if (!tag_[static_cast<std::size_t>(o)].empty()) merge(tag, tag_[static_cast<std::size_t>(o)], f, tmp);
    }
    if (kernel) *kernel = std::move(tag);
    return std::nullopt;
  }

  // Reduces a dense vector and stores it when independent.
  bool add_dense(FpVec v) {
    for (long r = static_cast<long>(v.size()) - 1; r >= 0; --r) {
      if (!v[static_cast<std::size_t>(r)]) continue;
      const std::int32_t o = owner_[static_cast<std::size_t>(r)];
      if (o < 0) {
        const int inv = mod_inverse(v[static_cast<std::size_t>(r)], p_);
        Column c;
        for (long i = 0; i <= r; ++i)
          if (v[static_cast<std::size_t>(i)])
            c.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint8_t>((v[static_cast<std::size_t>(i)] * inv) % p_)});
        owner_[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(val_.size());
        val_.push_back(std::move(c));
        tag_.emplace_back();
        return true;
      }
      const int f = p_ - v[static_cast<std::size_t>(r)];
      for (const auto& e : val_[static_cast<std::size_t>(o)])
        v[e.row] = static_cast<std::uint8_t>((v[e.row] + f * e.val) % p_);
    }
    return false;
  }

 private:
  void merge(Column& c, const Column& o, int f, Column& tmp) const {
    tmp.clear();
    tmp.reserve(c.size() + o.size());
    std::size_t i = 0, j = 0;
    while (i < c.size() || j < o.size()) {
      if (j == o.size() || (i < c.size() && c[i].row < o[j].row)) {
        tmp.push_back(c[i++]);
      } else if (i == c.size() || o[j].row < c[i].row) {
        tmp.push_back({o[j].row, static_cast<std::uint8_t>((f * o[j].val) % p_)});
        ++j;
      } else {
        int v = (c[i].val + f * o[j].val) % p_;
        if (v) tmp.push_back({c[i].row, static_cast<std::uint8_t>(v)});
        ++i;
        ++j;
      }
    }
    c.swap(tmp);
  }

  int p_;
  std::vector<std::int32_t> owner_;
  std::vector<Column> val_, tag_;
};

FpVec dense(const Column& c, std::size_t n) {
  FpVec v(n, 0);
  for (const auto& e : c) v[e.row] = e.val;
  return v;
}

constexpr long kTagLimit = 4096;  // track kernel vectors while C^n is this small

}  // namespace

BarOracleReport bar_oracle(const FiniteGroup& g, int D) {
  const auto start = std::chrono::steady_clock::now();
  BarOracleReport rep;
  if (D < 0) return rep;
  rep.betti.push_back(1);
  if (D == 0) return rep;
  Bar bar(g, D);
  const int P = bar.P, M = bar.M;
  if (M == 0) {
    rep.betti.assign(static_cast<std::size_t>(D) + 1, 0);
    rep.betti[0] = 1;
    return rep;
  }
  if (bar.size(D + 1) > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("bar oracle: complex too large");

  rep.ranks.assign(static_cast<std::size_t>(D), 0);
  std::vector<std::vector<FpVec>> reps(static_cast<std::size_t>(D) + 1);
  auto prev = std::make_unique<Reducer>(P, static_cast<std::size_t>(M));  // B^1 = 0
  std::vector<char> cleared;
  std::vector<std::pair<std::uint32_t, int>> raw;

  // Cocycles of degree n independent modulo B^n (held by `b`), up to `limit`.
  auto collect_reps = [&](int n, std::vector<FpVec> kernels, Reducer& b, long limit) {
    auto& out = reps[static_cast<std::size_t>(n)];
    auto offer = [&](FpVec v) {
      if (static_cast<long>(out.size()) >= limit) return;
      FpVec keep = v;
      if (!b.add_dense(std::move(v))) return;
      if (!bar.is_cocycle(keep, n)) throw std::logic_error("bar oracle: candidate is not a cocycle");
      out.push_back(std::move(keep));
    };
    for (auto& k : kernels) offer(std::move(k));
    for (int i = 1; 2 * i <= n; ++i) {
      const auto& lo = reps[static_cast<std::size_t>(i)];
      const auto& hi = reps[static_cast<std::size_t>(n - i)];
      for (std::size_t a = 0; a < lo.size(); ++a)
        for (std::size_t c = (i == n - i ? a : 0); c < hi.size(); ++c) offer(bar.cup(lo[a], hi[c]));
    }
    for (const auto& f : reps[static_cast<std::size_t>(n) - 1]) offer(bar.bockstein(f, n - 1));
  };

  for (int n = 1; n < D; ++n) {
    const long cols = bar.size(n), rows = bar.size(n + 1);
    const bool track = cols <= kTagLimit;
    auto red = std::make_unique<Reducer>(P, static_cast<std::size_t>(rows));
    std::vector<char> next(static_cast<std::size_t>(rows), 0);
    std::vector<FpVec> kernels;
    Column col, ker;
    for (long c = 0; c < cols; ++c) {
      if (!cleared.empty() && cleared[static_cast<std::size_t>(c)]) continue;
      bar.coboundary_column(c, n, col, raw);
      Column tag;
      if (track) tag.push_back({static_cast<std::uint32_t>(c), 1});
      auto piv = red->add(std::move(col), std::move(tag), track ? &ker : nullptr);
      if (piv) next[*piv] = 1;
      else if (track) kernels.push_back(dense(ker, static_cast<std::size_t>(cols)));
      col = {};
    }
    rep.ranks[static_cast<std::size_t>(n)] = static_cast<long>(red->rank());
    const long h = cols - rep.ranks[static_cast<std::size_t>(n) - 1] - rep.ranks[static_cast<std::size_t>(n)];
    rep.betti.push_back(static_cast<int>(h));
    collect_reps(n, std::move(kernels), *prev, h);
    if (static_cast<long>(reps[static_cast<std::size_t>(n)].size()) != h && track)
      throw std::logic_error("bar oracle: kernel vectors do not span cohomology");
    prev = std::move(red);
    cleared = std::move(next);
  }

  // Top degree.
  const long cn = bar.size(D);
  const long below = cn - rep.ranks[static_cast<std::size_t>(D) - 1];  // h^D + rank delta_D
  collect_reps(D, {}, *prev, below);
  rep.top_cocycles = static_cast<int>(reps[static_cast<std::size_t>(D)].size());
  prev.reset();
  const long upper = below - rep.top_cocycles;  // rank delta_D <= upper
  Reducer red(P, static_cast<std::size_t>(cn));
  const long cols = bar.size(D + 1);
  rep.top_columns_total = cols;
  Column col;
  long c = 0;
  for (; c < cols && static_cast<long>(red.rank()) < upper; ++c) {
    bar.boundary_column(c, D, col, raw);
    red.add(std::move(col), {}, nullptr);
    col = {};
  }
  rep.top_columns_scanned = c;
  rep.top_rank = static_cast<long>(red.rank());
  rep.top_bounds_met = rep.top_rank == upper;
  rep.betti.push_back(static_cast<int>(below - rep.top_rank));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<int> bar_betti(const FiniteGroup& g, int max_degree) { return bar_oracle(g, max_degree).betti; }

}  // namespace cohomcheck
