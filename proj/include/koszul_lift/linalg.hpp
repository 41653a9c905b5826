#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "koszul_lift/ring.hpp"

namespace koszul_lift {

/// Sparse vector: (column, value) pairs, sorted by column, no zero values.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Returns a + factor * b.
SparseVec axpy(const SparseVec& a, const Scalar& factor, const SparseVec& b);

/// Incrementally maintained reduced row echelon form. Pivots are leading
/// (smallest) columns; every pivot column is zero in all other rows, so the
/// stored rows are the unique RREF basis of the inserted span.
class Echelon {
 public:
  explicit Echelon(Field field) : field_(field) {}

  /// Remainder of v modulo the span; canonical (only non-pivot columns survive).
  SparseVec reduce(const SparseVec& v) const;
  /// Adds v to the span. Returns false if v was already in it.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  /// Rows keyed by pivot column.
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

  /// If the inserted vectors are the rows of A (ncols columns), a basis of
  /// {x : A x = 0}, one vector per non-pivot column in increasing order.
  std::vector<SparseVec> kernel_basis(std::size_t ncols) const;

 private:
  Field field_;
  std::map<std::size_t, SparseVec> rows_;
};

/// One unknown-coefficient term c * w_k of a graded linear constraint.
struct LinearTerm {
  Poly coefficient;
  std::size_t unknown = 0;
};

/// sum_k c_k * w_k = rhs in Q.
struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Poly rhs;
};

/// Unknown ring elements w_k, each homogeneous of a forced degree, subject to
/// k-linear constraints. Each unknown's coordinates are the standard
/// monomials of its degree (empty for negative degree).
struct GradedSystem {
  std::vector<int> unknown_degrees;
  std::vector<LinearConstraint> constraints;
};

/// Solves the system exactly. Columns are ordered by unknown index and then
/// by monomial (largest first); free variables are set to zero in the reduced
/// row echelon form. Returns nullopt when the system is inconsistent.
std::optional<std::vector<Poly>> solve_graded_linear(const GradedRing& ring,
                                                     const GradedSystem& system);

}  // namespace koszul_lift
