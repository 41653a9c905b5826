#include "koszul_lift/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul_lift {

FreeModuleSlice::FreeModuleSlice(const GradedRing& ring, std::vector<int> twists, int degree)
    : field_(ring.field()), degree_(degree), twists_(std::move(twists)), index_(twists_.size()) {
  for (std::size_t g = 0; g < twists_.size(); ++g)
    for (auto& m : ring.standard_monomials(degree - twists_[g])) {
      index_[g].emplace(m, basis_.size());
      basis_.emplace_back(g, std::move(m));
    }
}

SparseVec FreeModuleSlice::coordinates(const std::vector<Poly>& element) const {
  if (element.size() != twists_.size()) throw std::invalid_argument("element rank mismatch");
  SparseVec out;
  for (std::size_t g = 0; g < element.size(); ++g)
    for (const auto& [m, c] : element[g].terms()) {
      auto it = index_[g].find(m);
      if (it == index_[g].end())
        throw std::invalid_argument("term outside the graded slice");
      out.emplace_back(it->second, c);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<Poly> FreeModuleSlice::element(const SparseVec& coords) const {
  std::vector<Poly> out(twists_.size());
  for (const auto& [k, c] : coords) out[basis_.at(k).first].add_term(basis_[k].second, c);
  return out;
}

SparseVec FreeModuleSlice::image(const GradedRing& ring, const PolyMatrix& a, std::size_t k,
                                 const FreeModuleSlice& target) const {
  const auto& [g, m] = basis_.at(k);
  const Poly mono = Poly::term(m, Scalar::one(field_));
  std::vector<Poly> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!a.at(r, g).is_zero()) out[r] = ring.multiply(a.at(r, g), mono);
  return target.coordinates(out);
}

std::vector<SparseVec> FreeModuleSlice::ideal_part(const GradedRing& ring) const {
  std::vector<SparseVec> out;
  for (std::size_t i = 1; i <= ring.codim(); ++i) {
    const Poly& f = ring.sequence_element(i);
    for (std::size_t g = 0; g < twists_.size(); ++g)
      for (const auto& m : ring.standard_monomials(degree_ - twists_[g] - ring.sequence_degree(i))) {
        std::vector<Poly> e(twists_.size());
        e[g] = ring.multiply(f, Poly::term(m, Scalar::one(field_)));
        SparseVec v = coordinates(e);
        if (!v.empty()) out.push_back(std::move(v));
      }
  }
  return out;
}

bool SequenceIdeal::contains(const Poly& p) {
  if (p.is_zero()) return true;
  if (!p.is_homogeneous()) {
    // Homogeneous ideal: decide each graded component.
    std::map<int, Poly> parts;
    for (const auto& [m, c] : p.terms()) parts[m.degree()].add_term(m, c);
    return std::all_of(parts.begin(), parts.end(),
                       [&](const auto& kv) { return contains(kv.second); });
  }
  const int d = *p.degree();
  auto it = slices_.find(d);
  if (it == slices_.end()) {
    FreeModuleSlice slice(ring_, {0}, d);
    Echelon ech(ring_.field());
    for (const auto& v : slice.ideal_part(ring_)) ech.insert(v);
    it = slices_.emplace(d, std::make_pair(std::move(slice), std::move(ech))).first;
  }
  const auto& [slice, ech] = it->second;
  return ech.contains(slice.coordinates({ring_.normal_form(p)}));
}

}  // namespace koszul_lift
