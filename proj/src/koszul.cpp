#include "koszul_lift/koszul.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "koszul_lift/error.hpp"

namespace koszul_lift {

KoszulIndex KoszulIndex::zero() { return KoszulIndex(0, true); }

KoszulIndex KoszulIndex::generator(int i) {
  if (i < 1 || i > static_cast<int>(kMaxCodim))
    throw Error(Errc::invalid_input, "Koszul generator index out of range");
  return from_mask(1u << (i - 1));
}

KoszulIndex KoszulIndex::from_list(const std::vector<int>& elements) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : elements) {
    if (i <= prev || i > static_cast<int>(kMaxCodim))
      throw Error(Errc::invalid_input, "Koszul index must be strictly increasing in 1..16");
    mask |= 1u << (i - 1);
    prev = i;
  }
  return from_mask(mask);
}

int KoszulIndex::degree() const { return zero_ ? -1 : std::popcount(mask_); }

std::vector<int> KoszulIndex::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(kMaxCodim); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string KoszulIndex::to_string() const {
  if (zero_) return "null";
  std::string out = "[";
  for (int i : elements()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(i);
  }
  return out + "]";
}

KoszulIndex KoszulIndex::parse(const std::string& text) {
  if (text == "null") return zero();
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw Error(Errc::parse, "bad Koszul index '" + text + "'");
  std::vector<int> elements;
  std::stringstream in(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      elements.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::parse, "bad Koszul index '" + text + "'");
    }
  }
  return from_list(elements);
}

std::strong_ordering operator<=>(const KoszulIndex& a, const KoszulIndex& b) {
  if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.elements() <=> b.elements();
}

int inversion_count(const KoszulIndex& alpha, const KoszulIndex& beta) {
  int count = 0;
  for (int a : alpha.elements())
    for (int b : beta.elements())
      if (a > b) ++count;
  return count;
}

int insertion_count(int i, const KoszulIndex& gamma) {
  int count = 0;
  for (int j : gamma.elements())
    if (j < i) ++count;
  return count;
}

SignedIndex wedge(const KoszulIndex& alpha, const KoszulIndex& beta) {
  if (alpha.is_zero() || beta.is_zero() || !alpha.disjoint(beta))
    return {KoszulIndex::zero(), 0};
  return {KoszulIndex::from_mask(alpha.mask() | beta.mask()),
          inversion_count(alpha, beta) % 2 == 0 ? 1 : -1};
}

std::vector<KoszulIndex> koszul_basis(std::size_t c, int degree) {
  if (c > kMaxCodim) throw Error(Errc::invalid_input, "codimension above 16");
  std::vector<KoszulIndex> out;
  if (degree < 0 || degree > static_cast<int>(c)) return out;
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask)
    if (std::popcount(mask) == degree) out.push_back(KoszulIndex::from_mask(mask));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KoszulIndex> koszul_basis(std::size_t c) {
  std::vector<KoszulIndex> out;
  for (int j = 0; j <= static_cast<int>(c); ++j) {
    auto level = koszul_basis(c, j);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<KoszulTerm> koszul_differential(const KoszulIndex& alpha, const GradedRing& ring) {
  if (alpha.is_zero()) throw Error(Errc::precondition, "Koszul differential of 0");
  std::vector<KoszulTerm> out;
  const auto elems = alpha.elements();
  for (std::size_t l = 0; l < elems.size(); ++l) {
    if (elems[l] > static_cast<int>(ring.codim()))
      throw Error(Errc::precondition, "Koszul index exceeds the codimension");
    Poly coeff = ring.sequence_element(static_cast<std::size_t>(elems[l]));
    // 0-based l: sign (-1)^((l+1)+1).
    if (l % 2 == 1) coeff = -coeff;
    out.push_back({std::move(coeff), alpha.without(elems[l])});
  }
  return out;
}

FreeComplex koszul_complex(std::shared_ptr<const GradedRing> ring) {
  const std::size_t c = ring->codim();
  std::map<int, std::vector<int>> twists;
  std::map<int, PolyMatrix> diffs;
  auto twist_of = [&](const KoszulIndex& a) {
    int t = 0;
    for (int i : a.elements()) t += ring->sequence_degree(static_cast<std::size_t>(i));
    return t;
  };
  for (int j = 0; j <= static_cast<int>(c); ++j)
    for (const auto& a : koszul_basis(c, j)) twists[j].push_back(twist_of(a));
  for (int j = 1; j <= static_cast<int>(c); ++j) {
    const auto src = koszul_basis(c, j);
    const auto tgt = koszul_basis(c, j - 1);
    PolyMatrix d(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col)
      for (auto& term : koszul_differential(src[col], *ring)) {
        auto row = static_cast<std::size_t>(
            std::lower_bound(tgt.begin(), tgt.end(), term.index) - tgt.begin());
        d.at(row, col) += term.coefficient;
      }
    diffs.emplace(j, std::move(d));
  }
  return FreeComplex(std::move(ring), Base::Q, false, 0, static_cast<int>(c), std::move(twists),
                     std::move(diffs));
}

RegularityReport check_regular_up_to(std::shared_ptr<const GradedRing> ring, int degree_bound) {
  for (std::size_t i = 1; i <= ring->codim(); ++i)
    if (ring->sequence_degree(i) > degree_bound)
      throw Error(Errc::precondition, "degree bound below deg f_" + std::to_string(i));
  const FreeComplex k = koszul_complex(ring);
  RegularityReport report;
  report.degree_bound = degree_bound;
  for (int i = 1; i <= static_cast<int>(ring->codim()); ++i) {
    const auto& t = k.twists(i);
    for (int d = *std::min_element(t.begin(), t.end()); d <= degree_bound; ++d) {
      const long h = homology_dim(k, i, d);
      report.dims[{i, d}] = h;
      if (h != 0 && !report.first_failure) {
        report.pass = false;
        report.first_failure = {i, d};
      }
    }
  }
  return report;
}

}  // namespace koszul_lift
