#include "koszul_lift/linalg.hpp"

#include <algorithm>

namespace koszul_lift {

SparseVec axpy(const SparseVec& a, const Scalar& factor, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      Scalar v = factor * ib->second;
      if (!v.is_zero()) out.emplace_back(ib->first, std::move(v));
      ++ib;
    } else {
      Scalar v = ia->second + factor * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec out = v;
  for (const auto& [col, value] : v) {
    auto it = rows_.find(col);
    if (it != rows_.end()) out = axpy(out, -value, it->second);
  }
  return out;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Scalar inv = r.front().second.inverse();
  for (auto& [col, value] : r) value *= inv;
  const std::size_t pivot = r.front().first;
  for (auto& [pc, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != row.end() && it->first == pivot) {
      Scalar factor = -it->second;
      row = axpy(row, factor, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVec> Echelon::kernel_basis(std::size_t ncols) const {
  // Column -> entries (pivot column, value) of rows touching it.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_col(ncols);
  for (const auto& [pc, row] : rows_)
    for (const auto& [col, value] : row)
      if (col != pc && col < ncols) by_col[col].emplace_back(pc, value);

  std::vector<SparseVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot(free)) continue;
    SparseVec v;
    for (const auto& [pc, value] : by_col[free]) v.emplace_back(pc, -value);
    v.emplace_back(free, Scalar::one(field_));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Poly>> solve_graded_linear(const GradedRing& ring,
                                                     const GradedSystem& system) {
  const Field field = ring.field();
  std::vector<std::vector<Monomial>> coords;
  std::vector<std::size_t> offset;
  std::size_t ncols = 0;
  for (int d : system.unknown_degrees) {
    offset.push_back(ncols);
    coords.push_back(ring.standard_monomials(d));
    ncols += coords.back().size();
  }
  const std::size_t rhs_col = ncols;

  Echelon ech(field);
  for (const auto& constraint : system.constraints) {
    std::map<Monomial, std::map<std::size_t, Scalar>> rows;
    for (const auto& term : constraint.terms) {
      const auto& basis = coords.at(term.unknown);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Poly image = ring.multiply(term.coefficient, Poly::term(basis[k], Scalar::one(field)));
        for (const auto& [m, c] : image.terms()) {
          auto [it, fresh] = rows[m].try_emplace(offset[term.unknown] + k, c);
          if (!fresh) it->second += c;
        }
      }
    }
    const Poly rhs = ring.normal_form(constraint.rhs);
    for (const auto& [m, c] : rhs.terms()) {
      auto [it, fresh] = rows[m].try_emplace(rhs_col, c);
      if (!fresh) it->second += c;
    }
    for (const auto& [m, entries] : rows) {
      SparseVec row;
      for (const auto& [col, value] : entries)
        if (!value.is_zero()) row.emplace_back(col, value);
      ech.insert(row);
    }
  }
  if (ech.is_pivot(rhs_col)) return std::nullopt;

  std::vector<Poly> solution(system.unknown_degrees.size());
  for (const auto& [pivot, row] : ech.rows()) {
    const Scalar value = row.back().first == rhs_col ? row.back().second : Scalar::zero(field);
    if (value.is_zero()) continue;
    auto u = static_cast<std::size_t>(
        std::upper_bound(offset.begin(), offset.end(), pivot) - offset.begin() - 1);
    solution[u].add_term(coords[u][pivot - offset[u]], value);
  }
  return solution;
}

}  // namespace koszul_lift
