#include "cohomcheck/linalg.hpp"

#include <algorithm>

namespace cohomcheck {

namespace {

template <int P>
void axpy_fixed(std::uint8_t* __restrict v, const std::uint8_t* __restrict r, int c,
                std::size_t begin, std::size_t end) {
  const std::uint8_t cc = static_cast<std::uint8_t>(c);
  if constexpr (P == 3) {
    if (cc == 1) {
      for (std::size_t i = begin; i < end; ++i) {
        std::uint8_t x = static_cast<std::uint8_t>(v[i] + r[i]);
        v[i] = x >= 3 ? static_cast<std::uint8_t>(x - 3) : x;
      }
    } else {
      for (std::size_t i = begin; i < end; ++i) {
        std::uint8_t x = static_cast<std::uint8_t>(v[i] + 3 - r[i]);
        v[i] = x >= 3 ? static_cast<std::uint8_t>(x - 3) : x;
      }
    }
  } else {
    for (std::size_t i = begin; i < end; ++i)
      v[i] = static_cast<std::uint8_t>(static_cast<std::uint16_t>(v[i] + cc * r[i]) % P);
  }
}

}  // namespace

void axpy(std::uint8_t* v, const std::uint8_t* r, int c, int p, std::size_t begin,
          std::size_t end) {
  c %= p;
  if (c == 0) return;
  switch (p) {
    case 2:
      for (std::size_t i = begin; i < end; ++i) v[i] ^= r[i];
      return;
    case 3: return axpy_fixed<3>(v, r, c, begin, end);
    case 5: return axpy_fixed<5>(v, r, c, begin, end);
    case 7: return axpy_fixed<7>(v, r, c, begin, end);
    case 11: return axpy_fixed<11>(v, r, c, begin, end);
    case 13: return axpy_fixed<13>(v, r, c, begin, end);
    default:
      for (std::size_t i = begin; i < end; ++i)
        v[i] = static_cast<std::uint8_t>((v[i] + c * r[i]) % p);
  }
}

void scale(std::uint8_t* v, int c, int p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>((v[i] * c) % p);
}

// ---------------------------------------------------------------------------

Echelon::Echelon(int p, std::size_t width, std::size_t tag_width)
    : p_(p), width_(width), tag_width_(tag_width), pivot_row_(width, -1) {
  if (p < 2 || p > 15) throw LinalgError("Echelon supports 2 <= p <= 15");
}

bool Echelon::reduce(std::uint8_t* v) const {
  const std::size_t s = stride();
  for (std::size_t k : order_) {
    std::size_t c = pivots_[k];
    if (v[c]) axpy(v, rows_.data() + k * s, p_ - v[c], p_, c, s);
  }
  for (std::size_t i = 0; i < width_; ++i)
    if (v[i]) return false;
  return true;
}

std::optional<std::size_t> Echelon::insert(FpVec v) {
  if (v.size() != stride()) throw LinalgError("Echelon::insert: length mismatch");
  if (reduce(v.data())) return std::nullopt;
  std::size_t c = 0;
  while (v[c] == 0) ++c;
  if (v[c] != 1) scale(v.data() + c, mod_inverse(v[c], p_), p_, stride() - c);
  std::size_t k = pivots_.size();
  rows_.insert(rows_.end(), v.begin(), v.end());
  pivots_.push_back(c);
  pivot_row_[c] = static_cast<long>(k);
  auto pos = std::lower_bound(order_.begin(), order_.end(), c,
                              [this](std::size_t a, std::size_t col) { return pivots_[a] < col; });
  order_.insert(pos, k);
  return c;
}

bool Echelon::in_span(FpVec v) const { return reduce(v.data()); }

// ---------------------------------------------------------------------------

FpVec FpMatrix::apply(std::span<const std::uint8_t> x) const {
  FpVec out(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc += static_cast<unsigned>(at(i, j)) * x[j];
    out[i] = static_cast<std::uint8_t>(acc % static_cast<unsigned>(p));
  }
  return out;
}

RankKernelImage rank_kernel_image(const FpMatrix& m) {
  RankKernelImage out;
  Echelon ech(m.p, m.rows, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    FpVec v(m.rows + m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    v[m.rows + j] = 1;
    FpVec col(v.begin(), v.begin() + static_cast<long>(m.rows));
    FpVec w = v;
    if (ech.reduce(w)) {
      out.kernel.emplace_back(w.begin() + static_cast<long>(m.rows), w.end());
    } else {
      ech.insert(std::move(v));
      out.image.push_back(std::move(col));
    }
  }
  out.rank = ech.rank();
  return out;
}

std::size_t rank(const FpMatrix& m) {
  Echelon ech(m.p, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) ech.insert(m.row(i));
  return ech.rank();
}

std::optional<FpVec> solve(const FpMatrix& m, std::span<const std::uint8_t> b) {
  Echelon ech(m.p, m.rows, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    FpVec v(m.rows + m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    v[m.rows + j] = 1;
    ech.insert(std::move(v));
  }
  FpVec w(m.rows + m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i) w[i] = static_cast<std::uint8_t>(b[i] % m.p);
  if (!ech.reduce(w)) return std::nullopt;
  FpVec x(w.begin() + static_cast<long>(m.rows), w.end());
  for (auto& e : x) e = static_cast<std::uint8_t>((m.p - e) % m.p);
  return x;
}

// ---------------------------------------------------------------------------

LocalSolveResult solve_local(const Zp2Matrix& m, std::span<const std::uint16_t> b) {
  const int p = m.p, q = p * p;
  const std::size_t R = m.rows, C = m.cols;
  // Augmented rows [M | b | T] with T tracking row operations.
  const std::size_t W = C + 1 + R;
  std::vector<std::vector<int>> a(R, std::vector<int>(W, 0));
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j) % q;
    a[i][C] = b[i] % q;
    a[i][C + 1 + i] = 1;
  }
  auto md = [q](long x) { return static_cast<int>(((x % q) + q) % q); };

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t s = r;
    while (s < R && a[s][c] % p == 0) ++s;
    if (s == R) continue;
    std::swap(a[r], a[s]);
    int inv = mod_inverse(a[r][c], q);
    for (auto& x : a[r]) x = md(static_cast<long>(x) * inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a[i][c] == 0) continue;
      int f = a[i][c];
      for (std::size_t j = 0; j < W; ++j) a[i][j] = md(a[i][j] - static_cast<long>(f) * a[r][j]);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  LocalSolveResult out;
  auto tracked = [&](std::size_t row, int mult) {
    std::vector<std::uint16_t> y(R);
    for (std::size_t i = 0; i < R; ++i)
      y[i] = static_cast<std::uint16_t>(md(static_cast<long>(a[row][C + 1 + i]) * mult));
    return y;
  };
  for (std::size_t i = r; i < R; ++i)
    if (a[i][C] % p != 0) {
      out.certificate = tracked(i, p);
      return out;
    }

  std::vector<char> is_pivot(C, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // Remaining rows read p * m x = b' with b' divisible by p: solve m x = b'/p mod p.
  FpMatrix red(p, R - r, free_cols.size());
  FpVec rhs(R - r);
  for (std::size_t i = r; i < R; ++i) {
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      red.at(i - r, k) = static_cast<std::uint8_t>(a[i][free_cols[k]] / p);
    rhs[i - r] = static_cast<std::uint8_t>(a[i][C] / p);
  }
  std::vector<int> xfree(free_cols.size(), 0);
  if (R > r) {
    auto sol = solve(red, rhs);
    if (!sol) {
      // Find z with z red = 0, z rhs != 0 via the left kernel.
      FpMatrix tk(p, free_cols.size(), R - r);
      for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < R - r; ++i) tk.at(k, i) = red.at(i, k);
      for (const auto& z : rank_kernel_image(tk).kernel) {
        unsigned dot = 0;
        for (std::size_t i = 0; i < R - r; ++i) dot += static_cast<unsigned>(z[i]) * rhs[i];
        if (dot % static_cast<unsigned>(p) == 0) continue;
        std::vector<std::uint16_t> y(R, 0);
        for (std::size_t i = 0; i < R - r; ++i) {
          auto ti = tracked(r + i, z[i]);
          for (std::size_t k = 0; k < R; ++k) y[k] = static_cast<std::uint16_t>((y[k] + ti[k]) % q);
        }
        out.certificate = y;
        return out;
      }
      throw LinalgError("solve_local: internal inconsistency");
    }
    for (std::size_t k = 0; k < free_cols.size(); ++k) xfree[k] = (*sol)[k];
  }
  std::vector<std::uint16_t> x(C, 0);
  for (std::size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = static_cast<std::uint16_t>(xfree[k]);
  for (std::size_t i = 0; i < r; ++i) {
    long v = a[i][C];
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      v -= static_cast<long>(a[i][free_cols[k]]) * xfree[k];
    x[pivot_cols[i]] = static_cast<std::uint16_t>(md(v));
  }
  out.solution = std::move(x);
  return out;
}

// ---------------------------------------------------------------------------

SparseColumnReducer::SparseColumnReducer(int p, std::size_t rows) : p_(p), pivot_owner_(rows, -1) {}

std::optional<std::uint32_t> SparseColumnReducer::add_column(Column c) {
  Column tmp;
  while (!c.empty()) {
    std::uint32_t low = c.back().row;
    std::int64_t owner = pivot_owner_[low];
    if (owner < 0) {
      int inv = mod_inverse(c.back().val, p_);
      for (auto& e : c) e.val = static_cast<std::uint8_t>((e.val * inv) % p_);
      pivot_owner_[low] = static_cast<std::int64_t>(stored_.size());
      stored_.push_back(std::move(c));
      ++rank_;
      return low;
    }
    const Column& o = stored_[static_cast<std::size_t>(owner)];
    int f = p_ - c.back().val;  // o has pivot value 1
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
  return std::nullopt;
}

}  // namespace cohomcheck
