#include "koszul_lift/homotopy.hpp"

#include <algorithm>

#include "koszul_lift/error.hpp"
#include "koszul_lift/graded.hpp"
#include "koszul_lift/linalg.hpp"
#include "koszul_lift/parallel.hpp"

namespace koszul_lift {

namespace {

int sign_of_parity(long k) { return k % 2 == 0 ? 1 : -1; }

int sequence_weight(const GradedRing& ring, const KoszulIndex& alpha) {
  int w = 0;
  for (int i : alpha.elements()) w += ring.sequence_degree(static_cast<std::size_t>(i));
  return w;
}

std::vector<KoszulIndex> submasks(const KoszulIndex& gamma) {
  std::vector<KoszulIndex> out;
  const std::uint32_t g = gamma.mask();
  for (std::uint32_t s = g;; s = (s - 1) & g) {
    out.push_back(KoszulIndex::from_mask(s));
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string locate(int n, std::size_t row, std::size_t col) {
  return "n=" + std::to_string(n) + " row=" + std::to_string(row) + " col=" +
         std::to_string(col);
}

Verdict first_outside_ideal(const GradedRing& ring, SequenceIdeal& ideal, const PolyMatrix& m,
                            int n) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ideal.contains(m.at(i, j)))
        return Verdict::fail(locate(n, i, j) + ": " + ring.format(m.at(i, j)) +
                             " is nonzero over R");
  return Verdict::ok();
}

}  // namespace

HomotopyFamily::HomotopyFamily(FreeComplex base, int level,
                               std::map<KoszulIndex, PositionMaps> maps)
    : base_(std::move(base)), level_(level), maps_(std::move(maps)) {
  if (level < 0 || level > static_cast<int>(base_.ring().codim()))
    throw Error(Errc::precondition, "homotopy level outside [0, c]");
}

PolyMatrix HomotopyFamily::map(const KoszulIndex& alpha, int n) const {
  const int target = n - alpha.degree() - 1;
  auto it = maps_.find(alpha);
  if (it != maps_.end()) {
    auto jt = it->second.find(n);
    if (jt != it->second.end()) return jt->second;
  }
  return PolyMatrix(base_.rank(target), base_.rank(n));
}

HomotopyFamily HomotopyFamily::with_map(const KoszulIndex& alpha, int n, PolyMatrix m) const {
  HomotopyFamily out = *this;
  out.maps_[alpha][n] = std::move(m);
  return out;
}

int relation_sign(const KoszulIndex& alpha, const KoszulIndex& beta) {
  return sign_of_parity(beta.degree() + inversion_count(alpha, beta));
}

PolyMatrix relation_products(const HomotopyFamily& h, const KoszulIndex& gamma, int n) {
  const FreeComplex& f = h.base();
  PolyMatrix sum(f.rank(n - gamma.degree() - 2), f.rank(n));
  for (const auto& alpha : submasks(gamma)) {
    const KoszulIndex beta = KoszulIndex::from_mask(gamma.mask() & ~alpha.mask());
    const int mid = n - alpha.degree() - 1;
    if (f.rank(mid) == 0 || sum.rows() == 0 || sum.cols() == 0) continue;
    PolyMatrix term = multiply(h.ring(), h.map(beta, mid), h.map(alpha, n));
    sum.add_block(0, 0, term, h.ring().scalar(relation_sign(alpha, beta)));
  }
  return sum;
}

HomotopyFamily solve_homotopies(const FreeComplex& lift, int level) {
  if (lift.over() != Base::Q)
    throw Error(Errc::precondition, "homotopies are solved on a Q-lift");
  const GradedRing& ring = lift.ring();
  const std::size_t c = ring.codim();
  if (level < 0 || level > static_cast<int>(c))
    throw Error(Errc::precondition, "level must lie in [0, c]");

  std::map<KoszulIndex, HomotopyFamily::PositionMaps> maps;
  for (int n = lift.lo() + 1; n <= lift.hi(); ++n) maps[KoszulIndex()][n] = lift.differential(n);
  HomotopyFamily family(lift, level, maps);

  for (int d = 0; d < level; ++d) {
    const auto gammas = koszul_basis(c, d);
    const auto mus = koszul_basis(c, d + 1);
    std::vector<int> positions;
    for (int n = lift.lo(); n <= lift.hi(); ++n)
      if (lift.rank(n) > 0 && lift.rank(n - d - 2) > 0) positions.push_back(n);

    // Pre-size every unknown map so the workers only write entries.
    for (const auto& mu : mus)
      for (int n : positions) maps[mu][n] = PolyMatrix(lift.rank(n - d - 2), lift.rank(n));

    parallel_for(positions.size(), [&](std::size_t k) {
      const int n = positions[k];
      const auto& src = lift.twists(n);
      const auto& tgt = lift.twists(n - d - 2);
      std::vector<PolyMatrix> residuals;
      for (const auto& gamma : gammas) residuals.push_back(relation_products(family, gamma, n));

      for (std::size_t i = 0; i < tgt.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
          GradedSystem system;
          for (const auto& mu : mus)
            system.unknown_degrees.push_back(src[j] - tgt[i] - sequence_weight(ring, mu));
          for (std::size_t g = 0; g < gammas.size(); ++g) {
            LinearConstraint con;
            con.rhs = -residuals[g].at(i, j);
            for (int e = 1; e <= static_cast<int>(c); ++e) {
              if (gammas[g].contains(e)) continue;
              const KoszulIndex mu = gammas[g].with(e);
              const auto u = static_cast<std::size_t>(
                  std::lower_bound(mus.begin(), mus.end(), mu) - mus.begin());
              Poly coeff = ring.sequence_element(static_cast<std::size_t>(e));
              if (sign_of_parity(d + insertion_count(e, gammas[g])) < 0) coeff = -coeff;
              con.terms.push_back({std::move(coeff), u});
            }
            system.constraints.push_back(std::move(con));
          }
          auto solution = solve_graded_linear(ring, system);
          if (!solution)
            throw Error(Errc::invalid_input,
                        "no homotopy of level " + std::to_string(d + 1) + " at " +
                            locate(n, i, j) +
                            ": the complex is not a lift of an R-complex or the sequence "
                            "is not regular");
          for (std::size_t u = 0; u < mus.size(); ++u)
            maps.at(mus[u]).at(n).at(i, j) = std::move((*solution)[u]);
        }
    });
    family = HomotopyFamily(lift, level, maps);
  }
  return family;
}

Verdict verify_relation(const HomotopyFamily& h, const KoszulIndex& gamma) {
  const GradedRing& ring = h.ring();
  const int c = static_cast<int>(ring.codim());
  if (gamma.is_zero()) throw Error(Errc::precondition, "relation at 0");
  const bool top = gamma.degree() == h.level() && h.level() == c;
  if (gamma.degree() >= h.level() && !top)
    throw Error(Errc::precondition, "relation needs maps above the solved level");
  const FreeComplex& f = h.base();
  for (int n = f.lo(); n <= f.hi(); ++n) {
    PolyMatrix lhs = relation_products(h, gamma, n);
    if (lhs.rows() == 0 || lhs.cols() == 0) continue;
    for (int e = 1; e <= c; ++e) {
      if (gamma.contains(e)) continue;
      PolyMatrix term = multiply(ring, ring.sequence_element(static_cast<std::size_t>(e)),
                                 h.map(gamma.with(e), n));
      lhs.add_block(0, 0, term,
                    ring.scalar(sign_of_parity(gamma.degree() + insertion_count(e, gamma))));
    }
    for (std::size_t i = 0; i < lhs.rows(); ++i)
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        if (!lhs.at(i, j).is_zero())
          return Verdict::fail(locate(n, i, j) + ": " + ring.format(lhs.at(i, j)));
  }
  return Verdict::ok();
}

bool EisenbudReport::pass() const {
  auto ok = [](const NamedVerdict& v) { return v.verdict.pass; };
  return std::all_of(chain_maps.begin(), chain_maps.end(), ok) &&
         std::all_of(commutators.begin(), commutators.end(), ok);
}

EisenbudReport eisenbud_operator_checks(const HomotopyFamily& h) {
  const GradedRing& ring = h.ring();
  const FreeComplex& f = h.base();
  const int c = static_cast<int>(ring.codim());
  EisenbudReport report;
  SequenceIdeal ideal(ring);
  if (h.level() < 1) return report;

  for (int i = 1; i <= c; ++i) {
    const KoszulIndex ei = KoszulIndex::generator(i);
    Verdict v;
    for (int n = f.lo(); n <= f.hi() && v.pass; ++n) {
      PolyMatrix lhs = multiply(ring, h.map(ei, n - 1), f.differential(n));
      lhs -= multiply(ring, f.differential(n - 2), h.map(ei, n));
      v = first_outside_ideal(ring, ideal, lhs, n);
    }
    report.chain_maps.push_back({"t^" + ei.to_string() + " chain map", v});
  }
  if (h.level() < 2) return report;

  for (int i = 1; i <= c; ++i)
    for (int j = i + 1; j <= c; ++j) {
      const KoszulIndex ei = KoszulIndex::generator(i);
      const KoszulIndex ej = KoszulIndex::generator(j);
      const KoszulIndex gamma = ei.with(j);
      // Relation at gamma modulo (f):
      //   s_h (t^gamma t^1 + t^1 t^gamma) + s_ij t^{e_i} t^{e_j} + s_ji t^{e_j} t^{e_i} = 0,
      // with s_ji = -s_ij, so [t^{e_i}, t^{e_j}] = -(s_h / s_ij) (d h + h d).
      const int s_h = relation_sign(KoszulIndex(), gamma);
      const int s_ij = relation_sign(ej, ei);
      const int sign = -s_h * s_ij;
      Verdict v;
      for (int n = f.lo(); n <= f.hi() && v.pass; ++n) {
        PolyMatrix lhs = multiply(ring, h.map(ei, n - 2), h.map(ej, n));
        lhs -= multiply(ring, h.map(ej, n - 2), h.map(ei, n));
        PolyMatrix boundary = multiply(ring, f.differential(n - 3), h.map(gamma, n));
        boundary += multiply(ring, h.map(gamma, n - 1), f.differential(n));
        lhs.add_block(0, 0, boundary, ring.scalar(-sign));
        v = first_outside_ideal(ring, ideal, lhs, n);
      }
      report.commutators.push_back(
          {"[t^" + ei.to_string() + ", t^" + ej.to_string() + "] homotopic via t^" +
               gamma.to_string(),
           v});
      report.commutator_signs.push_back(sign);
    }
  return report;
}

}  // namespace koszul_lift
