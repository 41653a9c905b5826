#pragma once

#include <memory>
#include <vector>

#include "koszul_lift/complexes.hpp"

namespace koszul_lift {

/// M = coker(relations : G -> F) over R, F with the given generator twists.
/// Columns of `relations` are relations; each must be homogeneous.
struct Presentation {
  std::vector<int> twists;
  PolyMatrix relations;
};

struct Resolution {
  FreeComplex complex;
  /// Syzygies were searched in internal degrees <= this bound only.
  int exact_up_to_degree = 0;
};

/// Minimal graded free resolution F_N -> ... -> F_0 of M over R, computed
/// degree by degree with exact linear algebra on R_d = Q_d / (f)_d.
/// Throws Errc::degree_bound_too_low when new generators are still needed
/// at the degree bound, and Errc::invalid_input for a non-minimal presentation.
Resolution resolve_over_R(std::shared_ptr<const GradedRing> ring, const Presentation& m,
                          int length, int degree_bound);

}  // namespace koszul_lift
