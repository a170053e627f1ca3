// Dense linear algebra over F_p (p < 16) and Z/p^2, plus a sparse column
// reducer for very large, very sparse coboundary matrices.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cohomcheck {

using FpVec = std::vector<std::uint8_t>;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int mod_inverse(int a, int m) {
  a %= m;
  if (a < 0) a += m;
  for (int x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  throw LinalgError("element not invertible");
}

/// v[i] = (v[i] + c * r[i]) mod p over [begin, end).
void axpy(std::uint8_t* v, const std::uint8_t* r, int c, int p, std::size_t begin, std::size_t end);
void scale(std::uint8_t* v, int c, int p, std::size_t n);

/// Incremental semi-echelon basis over F_p. Each stored row has a 1 in its
/// pivot column and zeros to the left of it. Optionally carries a tag block
/// (extra columns that are transformed alongside but never pivoted on), used
/// for tracking how rows were formed from inputs.
class Echelon {
 public:
  Echelon(int p, std::size_t width, std::size_t tag_width = 0);

  int p() const { return p_; }
  std::size_t width() const { return width_; }
  std::size_t tag_width() const { return tag_width_; }
  std::size_t stride() const { return width_ + tag_width_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduces v (length stride()) in place. Returns true if the main part is zero.
  bool reduce(std::uint8_t* v) const;
  bool reduce(FpVec& v) const { return reduce(v.data()); }
  /// Reduces v and stores it if the main part is nonzero. Returns the pivot.
  std::optional<std::size_t> insert(FpVec v);
  bool in_span(FpVec v) const;

  const std::uint8_t* row(std::size_t i) const { return rows_.data() + i * stride(); }
  std::size_t pivot(std::size_t i) const { return pivots_[i]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Row index with the given pivot column, or -1.
  long pivot_row(std::size_t col) const { return pivot_row_[col]; }

  void reserve(std::size_t rows) { rows_.reserve(rows * stride()); }

 private:
  int p_;
  std::size_t width_, tag_width_;
  std::vector<std::uint8_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
  // Row order sorted by pivot column, for left-to-right reduction.
  std::vector<std::size_t> order_;
};

/// Dense matrix over F_p, row-major.
struct FpMatrix {
  int p = 2;
  std::size_t rows = 0, cols = 0;
  FpVec data;

  FpMatrix() = default;
  FpMatrix(int p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), data(r * c, 0) {}
  std::uint8_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  FpVec row(std::size_t i) const {
    return FpVec(data.begin() + static_cast<long>(i * cols), data.begin() + static_cast<long>((i + 1) * cols));
  }
  FpVec apply(std::span<const std::uint8_t> x) const;  // M x
};

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<FpVec> kernel;  // basis of {x : M x = 0}
  std::vector<FpVec> image;   // basis of the column space
};

RankKernelImage rank_kernel_image(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
/// Some x with M x = b, or nullopt.
std::optional<FpVec> solve(const FpMatrix& m, std::span<const std::uint8_t> b);

/// Matrix over Z/p^2 with entries in [0, p^2).
struct Zp2Matrix {
  int p = 2;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint16_t> data;

  Zp2Matrix() = default;
  Zp2Matrix(int p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), data(r * c, 0) {}
  std::uint16_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint16_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct LocalSolveResult {
  std::optional<std::vector<std::uint16_t>> solution;
  /// When unsolvable: y with y M = 0 and y b != 0 (mod p^2).
  std::optional<std::vector<std::uint16_t>> certificate;
};

/// Solves M x = b over Z/p^2, pivoting only on units.
LocalSolveResult solve_local(const Zp2Matrix& m, std::span<const std::uint16_t> b);

/// Column reduction of a sparse matrix over F_p: columns are reduced left to
/// right with pivot = largest nonzero row index. Columns listed in `skip`
/// are known to reduce to zero and are not processed.
class SparseColumnReducer {
 public:
  struct Entry {
    std::uint32_t row;
    std::uint8_t val;
  };
  using Column = std::vector<Entry>;  // sorted by row, nonzero values

  SparseColumnReducer(int p, std::size_t rows);
  /// Reduces the column; returns its pivot row if nonzero.
  std::optional<std::uint32_t> add_column(Column c);
  std::size_t rank() const { return rank_; }

 private:
  int p_;
  std::vector<std::int64_t> pivot_owner_;  // row -> stored column index or -1
  std::vector<Column> stored_;
  std::size_t rank_ = 0;
};

}  // namespace cohomcheck
