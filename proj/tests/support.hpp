#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "koszul_lift/assembly.hpp"
#include "koszul_lift/error.hpp"
#include "koszul_lift/resolve.hpp"

namespace support {

namespace kl = koszul_lift;

inline std::shared_ptr<const kl::GradedRing> ring(kl::Field field, std::vector<std::string> vars,
                                                  std::vector<std::string> rel,
                                                  std::vector<std::string> seq) {
  return std::make_shared<const kl::GradedRing>(
      kl::GradedRing::from_strings(field, std::move(vars), rel, seq));
}

inline kl::PolyMatrix mat(const kl::GradedRing& r, std::vector<std::vector<std::string>> rows,
                          std::size_t cols = 0) {
  kl::PolyMatrix m(rows.size(), rows.empty() ? cols : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = r.parse(rows[i][j]);
  return m;
}

/// Q = k[x,y]/(x^2), f = y^2 and the window of the complete resolution
/// written out by hand in the worked example.
inline kl::FreeComplex worked_example_complex() {
  auto r = ring(kl::Field::rationals(), {"x", "y"}, {"x^2"}, {"y^2"});
  std::map<int, std::vector<int>> twists = {
      {2, {2, 2, 2}}, {1, {1, 1}}, {0, {0}}, {-1, {-2}}, {-2, {-3, -3}}};
  std::map<int, kl::PolyMatrix> d;
  d.emplace(2, mat(*r, {{"x", "0", "-y"}, {"0", "y", "x"}}));
  d.emplace(1, mat(*r, {{"x", "y"}}));
  d.emplace(0, mat(*r, {{"x*y"}}));
  d.emplace(-1, mat(*r, {{"x"}, {"y"}}));
  return kl::FreeComplex(r, kl::Base::R, false, -2, 2, twists, d);
}

inline kl::Poly random_form(const kl::GradedRing& r, int degree, std::mt19937_64& rng,
                            double density = 0.6) {
  kl::Poly p;
  if (degree < 0) return p;
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (const auto& m : r.standard_monomials(degree))
    if (coin(rng) < density) p.add_term(m, r.scalar(coeff(rng)));
  return p;
}

/// Random homogeneous matrix F_src -> F_tgt of the given extra degree shift.
inline kl::PolyMatrix random_map(const kl::GradedRing& r, const std::vector<int>& tgt,
                                 const std::vector<int>& src, int shift, std::mt19937_64& rng) {
  kl::PolyMatrix m(tgt.size(), src.size());
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      m.at(i, j) = random_form(r, src[j] - tgt[i] - shift, rng, 0.5);
  return m;
}

/// Ring over F_32003 with at most three variables and a homogeneous
/// sequence of length c that is regular through degree 8.
inline std::shared_ptr<const kl::GradedRing> random_ring(std::size_t c, std::mt19937_64& rng) {
  const kl::Field f = kl::Field::prime(32003);
  const std::vector<std::string> names = {"x", "y", "z"};
  for (;;) {
    const std::size_t nvars = std::max<std::size_t>(c, 2 + rng() % 2);
    std::vector<std::string> vars(names.begin(), names.begin() + nvars);
    std::vector<std::string> rel;
    if (rng() % 3 == 0) rel.push_back(vars.back() + "^3");
    auto bare = ring(f, vars, rel, {});
    std::vector<kl::Poly> seq;
    for (std::size_t i = 0; i < c; ++i) {
      kl::Poly p = random_form(*bare, rng() % 4 == 0 ? 1 : 2, rng, 0.7);
      if (p.is_zero()) p = bare->variable(i);
      seq.push_back(bare->normal_form(p));
    }
    std::shared_ptr<const kl::GradedRing> r;
    try {
      r = std::make_shared<const kl::GradedRing>(bare->with_sequence(seq));
    } catch (const kl::Error&) {
      continue;
    }
    if (kl::check_regular_up_to(r, 8).pass) return r;
  }
}

/// Minimal resolution of a random cyclic or two-generated module over R,
/// positions 0..length.
inline kl::FreeComplex random_resolution(std::shared_ptr<const kl::GradedRing> r, int length,
                                         std::mt19937_64& rng) {
  for (int attempt = 0;; ++attempt) {
    kl::Presentation m;
    m.twists = rng() % 3 == 0 ? std::vector<int>{0, 1} : std::vector<int>{0};
    std::vector<int> rel_twists;
    const std::size_t nrel = 1 + rng() % 3;
    for (std::size_t k = 0; k < nrel; ++k) rel_twists.push_back(2 + static_cast<int>(rng() % 2));
    m.relations = random_map(*r, m.twists, rel_twists, 0, rng);
    try {
      auto res = kl::resolve_over_R(r, m, length, 7);
      bool small = true;
      for (int n = 0; n <= length; ++n) small = small && res.complex.rank(n) <= 6;
      // Prefer windows that reach the top, but regular rings of small
      // global dimension may never get there.
      if (small && (res.complex.rank(length) > 0 || attempt > 20)) return res.complex;
    } catch (const kl::Error&) {
    }
  }
}

/// Adds sum_i f_i * (random matrix) to every differential of a lift.
inline kl::FreeComplex perturb(const kl::FreeComplex& lift, std::mt19937_64& rng) {
  const kl::GradedRing& r = lift.ring();
  kl::FreeComplex out = lift;
  for (int n = lift.lo() + 1; n <= lift.hi(); ++n) {
    kl::PolyMatrix d = lift.differential(n);
    for (std::size_t i = 1; i <= r.codim(); ++i) {
      auto noise = random_map(r, lift.twists(n - 1), lift.twists(n), r.sequence_degree(i), rng);
      d += kl::multiply(r, r.sequence_element(i), noise);
    }
    out = out.with_differential(n, d);
  }
  return out;
}

/// The sub-window [a, b] of c, moved so that position a becomes a + shift.
inline kl::FreeComplex window(const kl::FreeComplex& c, int a, int b, int shift) {
  std::map<int, std::vector<int>> twists;
  std::map<int, kl::PolyMatrix> diffs;
  for (int n = a; n <= b; ++n) {
    twists[n + shift] = c.twists(n);
    if (n > a) diffs.emplace(n + shift, c.differential(n));
  }
  return kl::FreeComplex(c.ring_ptr(), c.over(), c.is_lift(), a + shift, b + shift, twists, diffs);
}

struct RandomCase {
  std::string label;
  kl::FreeComplex cbar;  // over R
  kl::FreeComplex lift;  // over Q
};

/// A random valid input: a resolution window over a random ring of
/// codimension c, optionally shifted and with a perturbed lift.
inline RandomCase random_case(std::size_t c, std::mt19937_64& rng) {
  auto r = random_ring(c, rng);
  const int length = 2 + static_cast<int>(rng() % 2);
  kl::FreeComplex res = random_resolution(r, length, rng);
  const int a = static_cast<int>(rng() % 2);
  const int shift = static_cast<int>(rng() % 5) - 2;
  kl::FreeComplex cbar = window(res, a, length, shift);
  kl::FreeComplex lift = kl::lift_to_Q(cbar);
  const bool perturbed = rng() % 2 == 0;
  if (perturbed) lift = perturb(lift, rng);
  std::string label = "c=" + std::to_string(c) + " vars=" + std::to_string(r->nvars()) +
                      " window=[" + std::to_string(cbar.lo()) + "," + std::to_string(cbar.hi()) +
                      "]" + (perturbed ? " perturbed" : "");
  return {label, cbar, lift};
}

}  // namespace support
