#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "koszul_lift/linalg.hpp"
#include "koszul_lift/matrix.hpp"

namespace koszul_lift {

/// Coordinates on the degree-d piece of the free Q-module with the given
/// generator twists: basis pairs (generator, standard monomial of degree
/// d - twist), generators in order, monomials largest first.
class FreeModuleSlice {
 public:
  FreeModuleSlice(const GradedRing& ring, std::vector<int> twists, int degree);

  int degree() const { return degree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<int>& twists() const { return twists_; }
  const std::vector<std::pair<std::size_t, Monomial>>& basis() const { return basis_; }

  /// Coordinates of a module element given as one polynomial per generator.
  /// Terms outside this slice are rejected.
  SparseVec coordinates(const std::vector<Poly>& element) const;
  std::vector<Poly> element(const SparseVec& coords) const;

  /// Coordinates of A * (basis element k) in `target`, A mapping this module
  /// (columns) to the target module (rows).
  SparseVec image(const GradedRing& ring, const PolyMatrix& a, std::size_t k,
                  const FreeModuleSlice& target) const;

  /// Spanning set of (f_1..f_c) * F in this slice.
  std::vector<SparseVec> ideal_part(const GradedRing& ring) const;

 private:
  Field field_;
  int degree_;
  std::vector<int> twists_;
  std::vector<std::pair<std::size_t, Monomial>> basis_;
  std::vector<std::map<Monomial, std::size_t>> index_;
};

/// Decides membership in (f_1..f_c) for homogeneous elements of Q, one
/// degree at a time. Owns its per-degree caches; not for sharing across threads.
class SequenceIdeal {
 public:
  explicit SequenceIdeal(const GradedRing& ring) : ring_(ring) {}

  bool contains(const Poly& p);

 private:
  const GradedRing& ring_;
  std::map<int, std::pair<FreeModuleSlice, Echelon>> slices_;
};

}  // namespace koszul_lift
