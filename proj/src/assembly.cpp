#include "koszul_lift/assembly.hpp"

#include <algorithm>
#include <bit>

#include "koszul_lift/error.hpp"
#include "koszul_lift/graded.hpp"

namespace koszul_lift {

namespace {

int parity_sign(long k) { return ((k % 2) + 2) % 2 == 0 ? 1 : -1; }

int sequence_weight(const GradedRing& ring, const KoszulIndex& alpha) {
  int w = 0;
  for (int i : alpha.elements()) w += ring.sequence_degree(static_cast<std::size_t>(i));
  return w;
}

/// Blocks and twists of (F (x) K)_n for every n in [lo, hi + c].
struct Layout {
  std::map<int, std::vector<Summand>> summands;
  std::map<int, std::vector<int>> twists;
};

Layout layout(const FreeComplex& f) {
  const GradedRing& ring = f.ring();
  const int c = static_cast<int>(ring.codim());
  Layout out;
  for (int n = f.lo(); n <= f.hi() + c; ++n) {
    auto& blocks = out.summands[n];
    auto& twists = out.twists[n];
    for (int j = 0; j <= c; ++j) {
      const int p = n - j;
      if (!f.in_window(p)) continue;
      for (const auto& alpha : koszul_basis(ring.codim(), j)) {
        blocks.push_back({j, alpha, p, f.rank(p), twists.size()});
        for (int t : f.twists(p)) twists.push_back(t + sequence_weight(ring, alpha));
      }
    }
  }
  return out;
}

std::size_t find_block(const std::vector<Summand>& blocks, const KoszulIndex& alpha, int p) {
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].alpha == alpha && blocks[k].position == p) return k;
  throw std::logic_error("missing block in product complex");
}

std::size_t total_rank(const std::vector<Summand>& blocks) {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.rank;
  return r;
}

ProductComplex finish(const FreeComplex& f, Layout lay, std::map<int, PolyMatrix> diffs,
                      std::vector<BlockSource> provenance) {
  const int c = static_cast<int>(f.ring().codim());
  FreeComplex complex(f.ring_ptr(), Base::Q, false, f.lo(), f.hi() + c, std::move(lay.twists),
                      std::move(diffs));
  return ProductComplex{std::move(complex),
                        static_cast<std::size_t>(c),
                        f.lo() + c,
                        f.hi(),
                        std::move(lay.summands),
                        std::move(provenance)};
}

}  // namespace

ProductComplex assemble(const HomotopyFamily& family) {
  const FreeComplex& f = family.base();
  const GradedRing& ring = f.ring();
  const std::size_t c = ring.codim();
  if (family.level() < static_cast<int>(c))
    throw Error(Errc::level_too_low, "assembly needs homotopies up to level c = " +
                                         std::to_string(c) + ", have " +
                                         std::to_string(family.level()));
  Layout lay = layout(f);
  std::map<int, PolyMatrix> diffs;
  std::vector<BlockSource> provenance;
  const std::uint32_t full = (1u << c) - 1;

  for (int n = f.lo() + 1; n <= f.hi() + static_cast<int>(c); ++n) {
    const auto& src_blocks = lay.summands[n];
    const auto& tgt_blocks = lay.summands[n - 1];
    PolyMatrix d(total_rank(tgt_blocks), total_rank(src_blocks));
    for (std::size_t s = 0; s < src_blocks.size(); ++s) {
      const Summand& src = src_blocks[s];
      const int p = src.position;
      // t^beta (x) (beta ^ -) for beta disjoint from alpha, beta = 1 giving d^F.
      const std::uint32_t free_mask = full & ~src.alpha.mask();
      for (std::uint32_t bm = free_mask;; bm = (bm - 1) & free_mask) {
        const KoszulIndex beta = KoszulIndex::from_mask(bm);
        const int target_p = p - beta.degree() - 1;
        if (f.in_window(target_p) && f.rank(p) > 0 && f.rank(target_p) > 0) {
          const SignedIndex w = wedge(beta, src.alpha);
          const std::size_t t = find_block(tgt_blocks, w.index, target_p);
          const int sign = parity_sign(static_cast<long>(p) * beta.degree()) * w.sign;
          d.add_block(tgt_blocks[t].offset, src.offset, family.map(beta, p), ring.scalar(sign));
          provenance.push_back({n, t, s, "t^" + beta.to_string()});
        }
        if (bm == 0) break;
      }
      // (-1)^p Id (x) d^K.
      if (f.rank(p) > 0)
        for (auto& term : koszul_differential(src.alpha, ring)) {
          const std::size_t t = find_block(tgt_blocks, term.index, p);
          PolyMatrix block = PolyMatrix::scalar_multiple(term.coefficient, f.rank(p));
          d.add_block(tgt_blocks[t].offset, src.offset, block, ring.scalar(parity_sign(p)));
          const int i = std::countr_zero(src.alpha.mask() & ~term.index.mask()) + 1;
          provenance.push_back({n, t, s, "f_" + std::to_string(i)});
        }
    }
    diffs.emplace(n, std::move(d));
  }
  return finish(f, std::move(lay), std::move(diffs), std::move(provenance));
}

ProductComplex assemble_codim1(const HomotopyFamily& family) {
  const FreeComplex& f = family.base();
  const GradedRing& ring = f.ring();
  if (ring.codim() != 1)
    throw Error(Errc::wrong_codim, "codimension-one assembly needs c = 1, have c = " +
                                       std::to_string(ring.codim()));
  if (family.level() < 1) throw Error(Errc::level_too_low, "codimension-one assembly needs t^e");
  const KoszulIndex e = KoszulIndex::generator(1);
  const Poly& fpoly = ring.sequence_element(1);
  Layout lay = layout(f);
  std::map<int, PolyMatrix> diffs;
  std::vector<BlockSource> provenance;

  for (int n = f.lo() + 1; n <= f.hi() + 1; ++n) {
    // Hand layout: source F_m (+) F_{m+1}, target F_{m-1} (+) F_m, m = n - 1.
    const int m = n - 1;
    const std::size_t r_m1 = f.rank(m - 1), r_m = f.rank(m), r_m2 = f.rank(m + 1);
    PolyMatrix hand(r_m1 + r_m, r_m + r_m2);
    hand.add_block(0, 0, f.differential(m), ring.scalar(1));
    hand.add_block(0, r_m, family.map(e, m + 1), ring.scalar(parity_sign(m + 1)));
    hand.add_block(r_m1, 0, PolyMatrix::scalar_multiple(fpoly, r_m), ring.scalar(parity_sign(m)));
    hand.add_block(r_m1, r_m, f.differential(m + 1), ring.scalar(1));

    // Canonical order puts F_n (x) K_0 first: rows (F_m | F_{m-1}), cols (F_{m+1} | F_m).
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < r_m; ++i) rows.push_back(r_m1 + i);
    for (std::size_t i = 0; i < r_m1; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < r_m2; ++j) cols.push_back(r_m + j);
    for (std::size_t j = 0; j < r_m; ++j) cols.push_back(j);
    diffs.emplace(n, hand.permuted(rows, cols));
    provenance.push_back({n, 0, 0, "codim-1 block formula"});
  }
  return finish(f, std::move(lay), std::move(diffs), std::move(provenance));
}

std::vector<std::size_t> descending_koszul_order(const ProductComplex& p, int n) {
  std::vector<std::size_t> order;
  auto it = p.summands.find(n);
  if (it == p.summands.end()) return order;
  std::vector<Summand> blocks = it->second;
  std::stable_sort(blocks.begin(), blocks.end(), [](const Summand& a, const Summand& b) {
    return a.koszul_degree > b.koszul_degree;
  });
  for (const auto& b : blocks)
    for (std::size_t k = 0; k < b.rank; ++k) order.push_back(b.offset + k);
  return order;
}

PolyMatrix displayed_differential(const ProductComplex& p, int n) {
  return p.complex.differential(n).permuted(descending_koszul_order(p, n - 1),
                                            descending_koszul_order(p, n));
}

EpsilonMap epsilon_C(const ProductComplex& p, const FreeComplex& cbar) {
  const GradedRing& ring = cbar.ring();
  const FreeComplex& pc = p.complex;
  EpsilonMap out;
  for (int n = pc.lo(); n <= pc.hi(); ++n) {
    PolyMatrix e(cbar.rank(n), pc.rank(n));
    for (const auto& b : p.summands.at(n))
      if (b.koszul_degree == 0) e.add_block(0, b.offset, PolyMatrix::identity(ring, b.rank), ring.scalar(1));
    out.maps.emplace(n, std::move(e));
  }
  SequenceIdeal ideal(ring);
  for (int n = pc.lo() + 1; n <= pc.hi() && out.chain_map.pass; ++n) {
    PolyMatrix lhs = multiply(ring, cbar.differential(n), out.maps.at(n));
    lhs -= multiply(ring, out.maps.at(n - 1), pc.differential(n));
    for (std::size_t i = 0; i < lhs.rows() && out.chain_map.pass; ++i)
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        if (!ideal.contains(lhs.at(i, j))) {
          out.chain_map = Verdict::fail("n=" + std::to_string(n) + " row=" + std::to_string(i) +
                                        " col=" + std::to_string(j) + ": " +
                                        ring.format(lhs.at(i, j)));
          break;
        }
  }
  return out;
}

mpz_class binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

VandermondeCheck vandermonde(int c, int d, int n) {
  VandermondeCheck v{c, d, n, 0, binomial(d, n)};
  for (int i = 0; i <= c; ++i) v.lhs += binomial(c, i) * binomial(d - c, n - i);
  return v;
}

bool RankReport::pass() const {
  bool ok = per_degree_ok && total_ok;
  for (const auto& v : vandermonde_checks) ok = ok && v.holds();
  if (transfer) ok = ok && transfer->holds();
  for (const auto& r : rows)
    if (r.binomial_premise && *r.binomial_premise) ok = ok && r.binomial_conclusion.value_or(false);
  return ok;
}

RankReport rank_report(const ProductComplex& p, const FreeComplex& cbar, std::optional<int> dim_q) {
  const int c = static_cast<int>(p.codim);
  RankReport report;
  const FreeComplex& pc = p.complex;
  for (int n = pc.lo(); n <= pc.hi(); ++n) {
    RankRow row;
    row.n = n;
    row.rank = static_cast<long>(pc.rank(n));
    for (int i = 0; i <= c; ++i)
      row.predicted += binomial(c, i).get_si() * static_cast<long>(cbar.rank(n - i));
    if (dim_q) {
      bool premise = true;
      for (int i = 0; i <= c; ++i)
        premise = premise && mpz_class(static_cast<long>(cbar.rank(n - i))) >=
                                 binomial(*dim_q - c, n - i);
      row.binomial_premise = premise;
      row.binomial_conclusion = mpz_class(row.rank) >= binomial(*dim_q, n);
      report.vandermonde_checks.push_back(vandermonde(c, *dim_q, n));
    }
    report.per_degree_ok = report.per_degree_ok && row.rank == row.predicted;
    report.total_product += row.rank;
    report.rows.push_back(row);
  }
  for (int n = cbar.lo(); n <= cbar.hi(); ++n) report.total_input += static_cast<long>(cbar.rank(n));
  report.total_ok = report.total_product == (1L << c) * report.total_input;
  if (dim_q) {
    TransferCheck t;
    t.dim_q = *dim_q;
    const int exp_in = *dim_q - c;
    t.premise = exp_in >= 0 && mpz_class(report.total_input) <
                                   (mpz_class(1) << static_cast<unsigned long>(exp_in));
    t.conclusion = *dim_q >= 0 && mpz_class(report.total_product) <
                                      (mpz_class(1) << static_cast<unsigned long>(*dim_q));
    report.transfer = t;
  }
  return report;
}

MinimalityReport minimality_and_lifting_report(const ProductComplex& p,
                                               const HomotopyFamily& family) {
  const FreeComplex& f = family.base();
  const GradedRing& ring = f.ring();
  MinimalityReport r;
  r.minimal = is_minimal(p.complex);
  r.lifts = true;
  for (std::size_t i = 1; i <= ring.codim(); ++i)
    for (int n = f.lo(); n <= f.hi(); ++n)
      r.lifts = r.lifts && family.map(KoszulIndex::generator(static_cast<int>(i)), n).is_zero();

  // Two-periodic: at least three differentials and d_n == d_{n+2} throughout.
  if (f.hi() - f.lo() >= 3) {
    r.periodic = true;
    for (int n = f.lo() + 1; n + 2 <= f.hi(); ++n)
      r.periodic = r.periodic && f.differential(n) == f.differential(n + 2);
  }
  if (ring.codim() == 1 && r.periodic) {
    r.matrix_factorization = true;
    for (int n = f.lo() + 2; n <= f.hi(); ++n) {
      const PolyMatrix sq = multiply(ring, f.differential(n - 1), f.differential(n));
      r.matrix_factorization =
          r.matrix_factorization && sq.rows() == sq.cols() &&
          sq == PolyMatrix::scalar_multiple(ring.sequence_element(1), sq.rows());
    }
  }
  return r;
}

}  // namespace koszul_lift
