#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszul_lift/complexes.hpp"
#include "koszul_lift/koszul.hpp"

namespace koszul_lift {

/// The maps t^alpha : F_n -> F_{n-|alpha|-1} on a lift F, for every subset
/// alpha of {1..c} with |alpha| <= level. t^1 is the differential of F; t^0
/// (the identity) is implicit.
class HomotopyFamily {
 public:
  using PositionMaps = std::map<int, PolyMatrix>;

  HomotopyFamily(FreeComplex base, int level, std::map<KoszulIndex, PositionMaps> maps);

  const FreeComplex& base() const { return base_; }
  const GradedRing& ring() const { return base_.ring(); }
  int level() const { return level_; }
  const std::map<KoszulIndex, PositionMaps>& maps() const { return maps_; }

  /// t^alpha_n, or a zero matrix of the right shape when nothing is stored.
  PolyMatrix map(const KoszulIndex& alpha, int n) const;
  HomotopyFamily with_map(const KoszulIndex& alpha, int n, PolyMatrix m) const;

 private:
  FreeComplex base_;
  int level_;
  std::map<KoszulIndex, PositionMaps> maps_;
};

/// Sign (-1)^(|beta| + (alpha beta)) of the term t^beta t^alpha in the
/// defining relation of the family.
int relation_sign(const KoszulIndex& alpha, const KoszulIndex& beta);

/// sum over ordered splits gamma = alpha |_| beta of sign * t^beta t^alpha at F_n.
PolyMatrix relation_products(const HomotopyFamily& h, const KoszulIndex& gamma, int n);

/// Solves level by level for t^mu, |mu| = 1..level, such that for every
/// gamma with |gamma| < level
///   sum_{alpha ^ beta = +-gamma} (-1)^(|beta|+(alpha beta)) t^beta t^alpha
///     + sum_{i not in gamma} (-1)^(|gamma|+(e_i gamma)) f_i t^[e_i gamma] = 0.
/// All level-(d+1) unknowns are coupled; one exact system is solved per
/// position and matrix entry, with free variables set to zero.
/// Throws Errc::invalid_input if some system is inconsistent.
HomotopyFamily solve_homotopies(const FreeComplex& lift, int level);

/// Evaluates the relation at gamma on every position. Requires
/// |gamma| < level, or |gamma| == level == c.
Verdict verify_relation(const HomotopyFamily& h, const KoszulIndex& gamma);

struct NamedVerdict {
  std::string name;
  Verdict verdict;
};

struct EisenbudReport {
  /// t^{e_i} (x) R commutes with the differential of F-bar.
  std::vector<NamedVerdict> chain_maps;
  /// For i < j: [t^{e_i}, t^{e_j}] (x) R = sign * (d h + h d), h = t^{e_i ^ e_j} (x) R.
  std::vector<NamedVerdict> commutators;
  /// The sign used for each commutator, read off the relation at e_i ^ e_j.
  std::vector<int> commutator_signs;

  bool pass() const;
};

EisenbudReport eisenbud_operator_checks(const HomotopyFamily& h);

}  // namespace koszul_lift
