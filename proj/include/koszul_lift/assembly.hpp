#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "koszul_lift/homotopy.hpp"

namespace koszul_lift {

/// One block F_p (x) K_j of (F (x) K)_n, p = n - j, spanned by F_p (x) alpha.
struct Summand {
  int koszul_degree = 0;
  KoszulIndex alpha;
  int position = 0;
  std::size_t rank = 0;
  std::size_t offset = 0;  // first generator of the block within (F (x) K)_n
};

/// Which operator filled the block (target <- source) of d_n.
struct BlockSource {
  int n = 0;
  std::size_t target = 0;
  std::size_t source = 0;
  std::string label;  // "t^[1]", "t^[]" (= d^F), or "f_2" for the Koszul part
};

/// (F (x)_Q K, d) with d = sum_alpha t^alpha (x) s_alpha. Generators of
/// degree n are ordered by Koszul degree, then alpha lexicographically, then
/// the generator order of F. The window is [lo, hi + c] of the input;
/// [complete_lo, complete_hi] is where every block F_{n-j}, 0 <= j <= c, lies
/// inside the input window.
struct ProductComplex {
  FreeComplex complex;
  std::size_t codim = 0;
  int complete_lo = 0;
  int complete_hi = 0;
  std::map<int, std::vector<Summand>> summands;
  std::vector<BlockSource> provenance;
};

/// Requires family.level() == c (Errc::level_too_low otherwise).
ProductComplex assemble(const HomotopyFamily& family);

/// Direct c = 1 construction from the two-by-two block formula
///   [ d_m   (-1)^(m+1) t^e ]
///   [ (-1)^m f    d_{m+1}  ]  : F_m (+) F_{m+1} -> F_{m-1} (+) F_m,
/// returned in the canonical generator order. Errc::wrong_codim if c != 1.
ProductComplex assemble_codim1(const HomotopyFamily& family);

/// Generator order listing Koszul degree descending (for c = 1 this is the
/// (K_1 | K_0) layout used in hand-written examples).
std::vector<std::size_t> descending_koszul_order(const ProductComplex& p, int n);
/// d_n of p with rows and columns in descending_koszul_order.
PolyMatrix displayed_differential(const ProductComplex& p, int n);

struct EpsilonMap {
  std::map<int, PolyMatrix> maps;  // n -> (P (x) R)_n -> C_n
  Verdict chain_map;
};

/// Projection of (P (x) R) onto the copy F (x) K_0 of C, with the exact
/// check d^C eps = eps d^P over R.
EpsilonMap epsilon_C(const ProductComplex& p, const FreeComplex& cbar);

struct VandermondeCheck {
  int c = 0, d = 0, n = 0;
  mpz_class lhs;  // sum_i C(c,i) C(d-c, n-i)
  mpz_class rhs;  // C(d, n)
  bool holds() const { return lhs == rhs; }
};

VandermondeCheck vandermonde(int c, int d, int n);
mpz_class binomial(int n, int k);

struct RankRow {
  int n = 0;
  long rank = 0;
  long predicted = 0;  // sum_i C(c,i) rank C_{n-i}
  /// With dim Q = d: whether rank C_{n-i} >= C(d-c, n-i) for all i, and
  /// whether rank P_n >= C(d, n).
  std::optional<bool> binomial_premise;
  std::optional<bool> binomial_conclusion;
};

struct TransferCheck {
  int dim_q = 0;
  bool premise = false;     // sum rank C < 2^(d-c)
  bool conclusion = false;  // sum rank P < 2^d
  bool holds() const { return !premise || conclusion; }
};

struct RankReport {
  std::vector<RankRow> rows;
  bool per_degree_ok = true;
  long total_product = 0;
  long total_input = 0;
  bool total_ok = true;  // total_product == 2^c * total_input
  std::vector<VandermondeCheck> vandermonde_checks;
  std::optional<TransferCheck> transfer;

  bool pass() const;
};

RankReport rank_report(const ProductComplex& p, const FreeComplex& cbar,
                       std::optional<int> dim_q = std::nullopt);

struct MinimalityReport {
  bool minimal = false;
  bool lifts = false;  // every t^{e_i} is zero
  bool periodic = false;
  bool matrix_factorization = false;
};

/// For c = 1 and a 2-periodic input, matrix_factorization means
/// d_{n-1} d_n = f * Id over Q at every position.
MinimalityReport minimality_and_lifting_report(const ProductComplex& p,
                                               const HomotopyFamily& family);

}  // namespace koszul_lift
