#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "koszul_lift/matrix.hpp"

namespace koszul_lift {

enum class Base { Q, R };

/// Outcome of a structural check; `where` locates the first failure.
struct Verdict {
  bool pass = true;
  std::string where;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string where) { return {false, std::move(where)}; }
};

/// Graded free complex on the homological window [lo, hi]; modules outside
/// the window are zero. d_n : F_n -> F_{n-1} is stored for n in (lo, hi] as
/// a rank(F_{n-1}) x rank(F_n) matrix whose (i, j) entry is homogeneous of
/// degree twist_j - twist_i. Entries are kept J-reduced.
///
/// Over R the entries are Q-representatives; a Q-complex flagged as a lift
/// only promises d^2 = 0 modulo (f_1..f_c).
class FreeComplex {
 public:
  FreeComplex(std::shared_ptr<const GradedRing> ring, Base over, bool lift, int lo, int hi,
              std::map<int, std::vector<int>> twists, std::map<int, PolyMatrix> diffs);

  const GradedRing& ring() const { return *ring_; }
  const std::shared_ptr<const GradedRing>& ring_ptr() const { return ring_; }
  Base over() const { return over_; }
  bool is_lift() const { return lift_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool in_window(int n) const { return n >= lo_ && n <= hi_; }

  std::size_t rank(int n) const { return twists(n).size(); }
  const std::vector<int>& twists(int n) const;
  /// d_n, a zero matrix of the right shape when n is not in (lo, hi].
  PolyMatrix differential(int n) const;

  FreeComplex with_differential(int n, PolyMatrix d) const;
  FreeComplex relabeled(Base over, bool lift) const;

 private:
  std::shared_ptr<const GradedRing> ring_;
  Base over_;
  bool lift_;
  int lo_;
  int hi_;
  std::vector<std::vector<int>> twists_;
  std::vector<PolyMatrix> diffs_;
};

/// dim_k H_n in internal degree d, keyed by (n, d). Missing keys mean zero.
using GradedDims = std::map<std::pair<int, int>, long>;

bool same_dims(const GradedDims& a, const GradedDims& b);

/// Homogeneity of every entry, then d_{n-1} d_n = 0 modulo J (Q-complexes)
/// or modulo J + (f) (R-complexes and lifts).
Verdict check_complex(const FreeComplex& c);

/// Same twists and representatives, regarded over Q.
FreeComplex lift_to_Q(const FreeComplex& over_r);
/// F (x)_Q R with the stored representatives kept verbatim.
FreeComplex base_change_to_R(const FreeComplex& over_q);

/// dim H_n(C)_d over the complex's base ring for n in [n_first, n_last] and
/// min twist <= d <= degree_bound. Every n must be interior (lo < n < hi).
GradedDims homology_dims(const FreeComplex& c, int n_first, int n_last, int degree_bound);
/// Single entry, any n; modules outside the window count as zero.
long homology_dim(const FreeComplex& c, int n, int d);

/// No differential entry has a nonzero constant term.
bool is_minimal(const FreeComplex& c);

}  // namespace koszul_lift
