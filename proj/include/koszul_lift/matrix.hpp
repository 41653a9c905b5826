#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul_lift/ring.hpp"

namespace koszul_lift {

/// Dense matrix of ring elements, row-major. A map F_src -> F_tgt is stored
/// with one row per target generator and one column per source generator.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(const GradedRing& ring, std::size_t n);
  static PolyMatrix scalar_multiple(const Poly& p, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  /// Writes `block` with its top-left corner at (row, col), adding `sign` times it.
  void add_block(std::size_t row, std::size_t col, const PolyMatrix& block, const Scalar& sign);
  PolyMatrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  PolyMatrix permuted(const std::vector<std::size_t>& row_order,
                      const std::vector<std::size_t>& col_order) const;

  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  PolyMatrix& operator*=(const Scalar& c);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const Scalar& c, PolyMatrix a) { return a *= c; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// a * b computed in Q (products reduced modulo J).
PolyMatrix multiply(const GradedRing& ring, const PolyMatrix& a, const PolyMatrix& b);
/// Entrywise p * m in Q.
PolyMatrix multiply(const GradedRing& ring, const Poly& p, const PolyMatrix& m);

/// Row strings in the JSON layout: [["x","y"],...].
std::vector<std::vector<std::string>> to_strings(const GradedRing& ring, const PolyMatrix& m);
/// One-line rendering, e.g. "[x y; 0 -1]".
std::string to_inline_string(const GradedRing& ring, const PolyMatrix& m);

}  // namespace koszul_lift
