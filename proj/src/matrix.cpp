#include "koszul_lift/matrix.hpp"

#include <stdexcept>

namespace koszul_lift {

PolyMatrix PolyMatrix::identity(const GradedRing& ring, std::size_t n) {
  return scalar_multiple(ring.constant(1), n);
}

PolyMatrix PolyMatrix::scalar_multiple(const Poly& p, std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

void PolyMatrix::add_block(std::size_t row, std::size_t col, const PolyMatrix& block,
                           const Scalar& sign) {
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_)
    throw std::out_of_range("block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j)
      if (!block.at(i, j).is_zero()) at(row + i, col + j) += block.at(i, j) * sign;
}

PolyMatrix PolyMatrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                             std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) throw std::out_of_range("block out of range");
  PolyMatrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out.at(i, j) = at(row + i, col + j);
  return out;
}

PolyMatrix PolyMatrix::permuted(const std::vector<std::size_t>& row_order,
                                const std::vector<std::size_t>& col_order) const {
  if (row_order.size() != rows_ || col_order.size() != cols_)
    throw std::invalid_argument("permutation size mismatch");
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(row_order[i], col_order[j]);
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Scalar& c) {
  for (auto& p : data_) p *= c;
  return *this;
}

PolyMatrix multiply(const GradedRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Poly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += ring.multiply(aik, b.at(k, j));
    }
  return out;
}

PolyMatrix multiply(const GradedRing& ring, const Poly& p, const PolyMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = ring.multiply(p, m.at(i, j));
  return out;
}

std::vector<std::vector<std::string>> to_strings(const GradedRing& ring, const PolyMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(ring.format(m.at(i, j)));
  return rows;
}

std::string to_inline_string(const GradedRing& ring, const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += ring.format(m.at(i, j));
    }
  }
  return out + "]";
}

}  // namespace koszul_lift
