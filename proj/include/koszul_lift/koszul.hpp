#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul_lift/complexes.hpp"

namespace koszul_lift {

inline constexpr std::size_t kMaxCodim = 16;

/// Element of the exterior basis together with 0: a strictly increasing
/// subset of {1..c} (the empty subset is 1), or the distinguished zero.
class KoszulIndex {
 public:
  KoszulIndex() = default;
  static KoszulIndex zero();
  static KoszulIndex generator(int i);
  static KoszulIndex from_list(const std::vector<int>& elements);
  static KoszulIndex from_mask(std::uint32_t mask) { return KoszulIndex(mask, false); }

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && mask_ == 0; }
  /// |alpha|; -1 for zero.
  int degree() const;
  std::uint32_t mask() const { return mask_; }
  std::vector<int> elements() const;
  bool contains(int i) const { return !zero_ && (mask_ >> (i - 1)) & 1u; }
  bool disjoint(const KoszulIndex& other) const { return (mask_ & other.mask_) == 0; }
  KoszulIndex with(int i) const { return from_mask(mask_ | (1u << (i - 1))); }
  KoszulIndex without(int i) const { return from_mask(mask_ & ~(1u << (i - 1))); }

  /// "[1,3]", "[]" for 1, "null" for 0.
  std::string to_string() const;
  static KoszulIndex parse(const std::string& text);

  friend bool operator==(const KoszulIndex&, const KoszulIndex&) = default;
  /// Zero first, then by degree, then lexicographically on the sorted subset.
  friend std::strong_ordering operator<=>(const KoszulIndex& a, const KoszulIndex& b);

 private:
  KoszulIndex(std::uint32_t mask, bool zero) : mask_(mask), zero_(zero) {}

  std::uint32_t mask_ = 0;
  bool zero_ = false;
};

struct SignedIndex {
  KoszulIndex index;
  int sign = 0;  // +1, -1, or 0 exactly when index is zero

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// (alpha beta): #{(a, b) : a in alpha, b in beta, a > b}.
int inversion_count(const KoszulIndex& alpha, const KoszulIndex& beta);
/// (e_i gamma): #{j in gamma : j < i}.
int insertion_count(int i, const KoszulIndex& gamma);
/// alpha ^ beta = sign * (sorted union), or (0, 0) if they overlap.
SignedIndex wedge(const KoszulIndex& alpha, const KoszulIndex& beta);

/// All subsets of {1..c} of the given size, lexicographic.
std::vector<KoszulIndex> koszul_basis(std::size_t c, int degree);
/// All nonzero basis elements, by degree then lexicographic.
std::vector<KoszulIndex> koszul_basis(std::size_t c);

struct KoszulTerm {
  Poly coefficient;
  KoszulIndex index;
};

/// d(e_{i_1} ^ ... ^ e_{i_j}) = sum_l (-1)^(l+1) f_{i_l} * (alpha without i_l).
std::vector<KoszulTerm> koszul_differential(const KoszulIndex& alpha, const GradedRing& ring);

/// The Koszul complex on f_1..f_c as a graded free complex over Q on [0, c].
FreeComplex koszul_complex(std::shared_ptr<const GradedRing> ring);

struct RegularityReport {
  bool pass = true;
  int degree_bound = 0;
  /// First (i, d), in order of increasing i then d, with H_i(K)_d != 0.
  std::optional<std::pair<int, int>> first_failure;
  GradedDims dims;
};

/// Koszul homology H_i(K)_d for 1 <= i <= c, d <= degree_bound.
RegularityReport check_regular_up_to(std::shared_ptr<const GradedRing> ring, int degree_bound);

}  // namespace koszul_lift
