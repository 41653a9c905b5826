#include "koszul_lift/complexes.hpp"

#include <algorithm>

#include "koszul_lift/error.hpp"
#include "koszul_lift/graded.hpp"
#include "koszul_lift/parallel.hpp"

namespace koszul_lift {

namespace {

const std::vector<int> kNoTwists;

std::string locate(int n, std::size_t row, std::size_t col) {
  return "n=" + std::to_string(n) + " row=" + std::to_string(row) + " col=" +
         std::to_string(col);
}

}  // namespace

FreeComplex::FreeComplex(std::shared_ptr<const GradedRing> ring, Base over, bool lift, int lo,
                         int hi, std::map<int, std::vector<int>> twists,
                         std::map<int, PolyMatrix> diffs)
    : ring_(std::move(ring)), over_(over), lift_(lift), lo_(lo), hi_(hi) {
  if (!ring_) throw Error(Errc::invalid_input, "complex without a ring");
  if (lo > hi) throw Error(Errc::invalid_input, "empty homological window");
  if (lift && over == Base::R) throw Error(Errc::invalid_input, "a lift lives over Q");
  twists_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (auto& [n, t] : twists) {
    if (!in_window(n))
      throw Error(Errc::invalid_input, "twists given for n=" + std::to_string(n) +
                                           " outside the window");
    twists_[static_cast<std::size_t>(n - lo)] = std::move(t);
  }
  diffs_.resize(twists_.size());
  for (int n = lo; n <= hi; ++n) {
    const std::size_t cols = rank(n);
    const std::size_t rows = n > lo ? rank(n - 1) : 0;
    auto it = diffs.find(n);
    if (it == diffs.end()) {
      diffs_[static_cast<std::size_t>(n - lo)] = PolyMatrix(rows, cols);
      continue;
    }
    PolyMatrix& d = it->second;
    if (n == lo && !(d.rows() == 0 || d.is_zero()))
      throw Error(Errc::invalid_input, "differential given at the bottom of the window");
    if (n > lo && (d.rows() != rows || d.cols() != cols))
      throw Error(Errc::invalid_input,
                  "d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) + "x" +
                      std::to_string(d.cols()) + ", expected " + std::to_string(rows) + "x" +
                      std::to_string(cols));
    PolyMatrix reduced(rows, cols);
    if (n > lo)
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced.at(i, j) = ring_->normal_form(d.at(i, j));
    diffs_[static_cast<std::size_t>(n - lo)] = std::move(reduced);
  }
  for (auto& [n, d] : diffs)
    if (!in_window(n) && !d.is_zero())
      throw Error(Errc::invalid_input,
                  "differential given for n=" + std::to_string(n) + " outside the window");
}

const std::vector<int>& FreeComplex::twists(int n) const {
  return in_window(n) ? twists_[static_cast<std::size_t>(n - lo_)] : kNoTwists;
}

PolyMatrix FreeComplex::differential(int n) const {
  if (n > lo_ && n <= hi_) return diffs_[static_cast<std::size_t>(n - lo_)];
  return PolyMatrix(rank(n - 1), rank(n));
}

FreeComplex FreeComplex::with_differential(int n, PolyMatrix d) const {
  if (n <= lo_ || n > hi_) throw Error(Errc::precondition, "no differential at that position");
  if (d.rows() != rank(n - 1) || d.cols() != rank(n))
    throw Error(Errc::precondition, "replacement differential has the wrong shape");
  FreeComplex out = *this;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(i, j) = ring_->normal_form(d.at(i, j));
  out.diffs_[static_cast<std::size_t>(n - lo_)] = std::move(d);
  return out;
}

FreeComplex FreeComplex::relabeled(Base over, bool lift) const {
  if (lift && over == Base::R) throw Error(Errc::invalid_input, "a lift lives over Q");
  FreeComplex out = *this;
  out.over_ = over;
  out.lift_ = lift;
  return out;
}

bool same_dims(const GradedDims& a, const GradedDims& b) {
  auto covers = [](const GradedDims& x, const GradedDims& y) {
    for (const auto& [key, v] : x) {
      auto it = y.find(key);
      if ((it == y.end() ? 0 : it->second) != v) return false;
    }
    return true;
  };
  return covers(a, b) && covers(b, a);
}

Verdict check_complex(const FreeComplex& c) {
  const GradedRing& ring = c.ring();
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    const PolyMatrix d = c.differential(n);
    const auto& src = c.twists(n);
    const auto& tgt = c.twists(n - 1);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) {
        const Poly& e = d.at(i, j);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous() || *e.degree() != src[j] - tgt[i])
          return Verdict::fail(locate(n, i, j) + ": entry " + ring.format(e) +
                               " is not homogeneous of degree " +
                               std::to_string(src[j] - tgt[i]));
      }
  }
  const bool modulo_sequence = c.over() == Base::R || c.is_lift();
  SequenceIdeal ideal(ring);
  for (int n = c.lo() + 2; n <= c.hi(); ++n) {
    const PolyMatrix sq = multiply(ring, c.differential(n - 1), c.differential(n));
    for (std::size_t i = 0; i < sq.rows(); ++i)
      for (std::size_t j = 0; j < sq.cols(); ++j) {
        const Poly& e = sq.at(i, j);
        if (e.is_zero()) continue;
        if (!modulo_sequence || !ideal.contains(e))
          return Verdict::fail(locate(n, i, j) + ": d_" + std::to_string(n - 1) + " d_" +
                               std::to_string(n) + " entry " + ring.format(e) + " != 0");
      }
  }
  return Verdict::ok();
}

FreeComplex lift_to_Q(const FreeComplex& over_r) {
  if (over_r.over() != Base::R) throw Error(Errc::precondition, "lift_to_Q expects an R-complex");
  return over_r.relabeled(Base::Q, true);
}

FreeComplex base_change_to_R(const FreeComplex& over_q) {
  if (over_q.over() != Base::Q)
    throw Error(Errc::precondition, "base change expects a Q-complex");
  return over_q.relabeled(Base::R, false);
}

long homology_dim(const FreeComplex& c, int n, int d) {
  const GradedRing& ring = c.ring();
  const bool over_r = c.over() == Base::R;
  FreeModuleSlice here(ring, c.twists(n), d);
  if (here.dim() == 0) return 0;
  FreeModuleSlice below(ring, c.twists(n - 1), d);
  FreeModuleSlice above(ring, c.twists(n + 1), d);

  // Over R, F-bar_{n,d} = V_n / W_n with W the (f)-multiples, and
  // dim H = dim V_n - rank(dV_n + W_{n-1}) + rank W_{n-1} - rank(dV_{n+1} + W_n).
  Echelon out_span(ring.field());
  long below_ideal_rank = 0;
  if (over_r) {
    for (const auto& w : below.ideal_part(ring)) out_span.insert(w);
    below_ideal_rank = static_cast<long>(out_span.rank());
  }
  const PolyMatrix d_out = c.differential(n);
  for (std::size_t k = 0; k < here.dim(); ++k) out_span.insert(here.image(ring, d_out, k, below));

  Echelon in_span(ring.field());
  if (over_r)
    for (const auto& w : here.ideal_part(ring)) in_span.insert(w);
  const PolyMatrix d_in = c.differential(n + 1);
  for (std::size_t k = 0; k < above.dim(); ++k) in_span.insert(above.image(ring, d_in, k, here));

  return static_cast<long>(here.dim()) - static_cast<long>(out_span.rank()) + below_ideal_rank -
         static_cast<long>(in_span.rank());
}

GradedDims homology_dims(const FreeComplex& c, int n_first, int n_last, int degree_bound) {
  std::vector<std::pair<int, int>> jobs;
  for (int n = n_first; n <= n_last; ++n) {
    if (n <= c.lo() || n >= c.hi())
      throw Error(Errc::precondition, "homology requested at n=" + std::to_string(n) +
                                          ", outside the interior of [" +
                                          std::to_string(c.lo()) + ", " +
                                          std::to_string(c.hi()) + "]");
    const auto& t = c.twists(n);
    if (t.empty()) continue;
    for (int d = *std::min_element(t.begin(), t.end()); d <= degree_bound; ++d)
      jobs.emplace_back(n, d);
  }
  std::vector<long> values(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    values[k] = homology_dim(c, jobs[k].first, jobs[k].second);
  });
  GradedDims dims;
  for (std::size_t k = 0; k < jobs.size(); ++k) dims[jobs[k]] = values[k];
  return dims;
}

bool is_minimal(const FreeComplex& c) {
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    const PolyMatrix d = c.differential(n);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (d.at(i, j).has_constant_term()) return false;
  }
  return true;
}

}  // namespace koszul_lift
