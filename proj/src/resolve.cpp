#include "koszul_lift/resolve.hpp"

#include <algorithm>

#include "koszul_lift/error.hpp"
#include "koszul_lift/graded.hpp"

namespace koszul_lift {

namespace {

struct Generator {
  int twist = 0;
  std::vector<Poly> column;  // image in the previous module
};

/// Adds r * g for every generator of lower twist and every monomial r of the
/// complementary degree, plus the (f)-multiples, to `span`.
void add_submodule(const GradedRing& ring, const FreeModuleSlice& slice,
                   const std::vector<Generator>& gens, Echelon& span) {
  for (const auto& w : slice.ideal_part(ring)) span.insert(w);
  for (const auto& g : gens) {
    if (g.twist >= slice.degree()) continue;
    for (const auto& m : ring.standard_monomials(slice.degree() - g.twist)) {
      const Poly mono = Poly::term(m, Scalar::one(ring.field()));
      std::vector<Poly> e;
      for (const auto& entry : g.column) e.push_back(ring.multiply(entry, mono));
      span.insert(slice.coordinates(e));
    }
  }
}

PolyMatrix to_matrix(std::size_t rows, const std::vector<Generator>& gens) {
  PolyMatrix d(rows, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) d.at(i, j) = gens[j].column[i];
  return d;
}

std::vector<int> twists_of(const std::vector<Generator>& gens) {
  std::vector<int> t;
  for (const auto& g : gens) t.push_back(g.twist);
  return t;
}

[[noreturn]] void bound_hit(int n, int d) {
  throw Error(Errc::degree_bound_too_low,
              "generators of F_" + std::to_string(n) + " still appear at the degree bound " +
                  std::to_string(d) + "; raise --degree-bound");
}

/// Minimal generators, up to the degree bound, of the submodule of F spanned
/// by the given homogeneous columns.
std::vector<Generator> minimal_relations(const GradedRing& ring, const std::vector<int>& twists,
                                         const PolyMatrix& relations, int degree_bound) {
  std::vector<Generator> candidates;
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    Generator g;
    std::optional<int> twist;
    for (std::size_t i = 0; i < relations.rows(); ++i) {
      Poly e = ring.normal_form(relations.at(i, j));
      if (!e.is_zero()) {
        if (!e.is_homogeneous())
          throw Error(Errc::invalid_input, "relation " + std::to_string(j) + " is not homogeneous");
        const int t = *e.degree() + twists[i];
        if (twist && *twist != t)
          throw Error(Errc::invalid_input, "relation " + std::to_string(j) + " is not homogeneous");
        twist = t;
      }
      g.column.push_back(std::move(e));
    }
    if (!twist) continue;
    g.twist = *twist;
    candidates.push_back(std::move(g));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Generator& a, const Generator& b) { return a.twist < b.twist; });

  std::vector<Generator> chosen;
  for (std::size_t k = 0; k < candidates.size();) {
    const int d = candidates[k].twist;
    if (d > degree_bound) bound_hit(1, degree_bound);
    FreeModuleSlice slice(ring, twists, d);
    Echelon span(ring.field());
    add_submodule(ring, slice, chosen, span);
    for (; k < candidates.size() && candidates[k].twist == d; ++k)
      if (span.insert(slice.coordinates(candidates[k].column))) {
        for (const auto& e : candidates[k].column)
          if (e.has_constant_term())
            throw Error(Errc::invalid_input,
                        "presentation is not minimal: a relation has a unit entry");
        chosen.push_back(candidates[k]);
      }
  }
  return chosen;
}

/// Minimal generators of ker(d : G -> F) over R in degrees <= degree_bound.
std::vector<Generator> minimal_syzygies(const GradedRing& ring, const std::vector<int>& source,
                                        const std::vector<int>& target, const PolyMatrix& d,
                                        int n, int degree_bound) {
  std::vector<Generator> found;
  if (source.empty()) return found;
  for (int deg = *std::min_element(source.begin(), source.end()); deg <= degree_bound; ++deg) {
    FreeModuleSlice g_slice(ring, source, deg);
    FreeModuleSlice f_slice(ring, target, deg);
    if (g_slice.dim() == 0) continue;

    // Kernel of [d | W_F] : G_deg (+) k^w -> F_deg, projected onto G_deg.
    std::vector<SparseVec> columns;
    for (std::size_t k = 0; k < g_slice.dim(); ++k) columns.push_back(g_slice.image(ring, d, k, f_slice));
    for (auto& w : f_slice.ideal_part(ring)) columns.push_back(std::move(w));
    std::vector<SparseVec> rows(f_slice.dim());
    for (std::size_t col = 0; col < columns.size(); ++col)
      for (const auto& [r, v] : columns[col]) rows[r].emplace_back(col, v);
    Echelon ech(ring.field());
    for (const auto& r : rows) ech.insert(r);

    Echelon span(ring.field());
    add_submodule(ring, g_slice, found, span);
    std::vector<Generator> fresh;
    for (const auto& kv : ech.kernel_basis(columns.size())) {
      SparseVec v;
      for (const auto& [col, value] : kv)
        if (col < g_slice.dim()) v.push_back({col, value});
      SparseVec rem = span.reduce(v);
      if (rem.empty()) continue;
      span.insert(rem);
      // Leading coordinate 1 keeps the output free of arbitrary signs.
      const Scalar lead = rem.front().second.inverse();
      for (auto& entry : rem) entry.second = entry.second * lead;
      fresh.push_back({deg, g_slice.element(rem)});
    }
    if (!fresh.empty() && deg == degree_bound) bound_hit(n, degree_bound);
    found.insert(found.end(), fresh.begin(), fresh.end());
  }
  return found;
}

}  // namespace

Resolution resolve_over_R(std::shared_ptr<const GradedRing> ring, const Presentation& m,
                          int length, int degree_bound) {
  if (length < 1) throw Error(Errc::precondition, "resolution length must be at least 1");
  if (m.relations.rows() != m.twists.size() && m.relations.cols() != 0)
    throw Error(Errc::invalid_input, "relation matrix rows must match the generators");
  if (!m.twists.empty() && degree_bound < *std::max_element(m.twists.begin(), m.twists.end()) + 1)
    throw Error(Errc::precondition, "degree bound must exceed every generator twist");

  std::map<int, std::vector<int>> twists;
  std::map<int, PolyMatrix> diffs;
  twists[0] = m.twists;
  PolyMatrix relations = m.relations;
  if (relations.rows() != m.twists.size()) relations = PolyMatrix(m.twists.size(), 0);
  auto gens = minimal_relations(*ring, m.twists, relations, degree_bound);
  twists[1] = twists_of(gens);
  diffs.emplace(1, to_matrix(m.twists.size(), gens));
  for (int n = 2; n <= length; ++n) {
    gens = minimal_syzygies(*ring, twists[n - 1], twists[n - 2], diffs.at(n - 1), n, degree_bound);
    twists[n] = twists_of(gens);
    diffs.emplace(n, to_matrix(twists[n - 1].size(), gens));
  }
  FreeComplex complex(ring, Base::R, false, 0, length, std::move(twists), std::move(diffs));
  return Resolution{std::move(complex), degree_bound};
}

}  // namespace koszul_lift
