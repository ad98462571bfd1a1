#include "wmesc/analysis.hpp"

#include <cmath>

#include "wmesc/check.hpp"

namespace wmesc {

namespace {

int max_drop(const BranchingVector& bv) {
  int d = 0;
  for (const auto& t : bv.terms) d = std::max(d, t.drop);
  return d;
}

// p(t) = t^D - sum multiplicity * t^(D - drop)
double defining_poly(const BranchingVector& bv, int d_max, double t) {
  double v = 1.0;
  for (int i = 0; i < d_max; ++i) v *= t;  // t^D
  for (const auto& term : bv.terms) {
    double p = 1.0;
    for (int i = 0; i < d_max - term.drop; ++i) p *= t;
    v -= term.multiplicity * p;
  }
  return v;
}

}  // namespace

RootResult characteristic_root(const BranchingVector& bv) {
  WMESC_ASSERT(!bv.terms.empty());
  int mult_sum = 0;
  for (const auto& t : bv.terms) {
    WMESC_ASSERT(t.drop >= 1 && t.multiplicity >= 1);
    mult_sum += t.multiplicity;
  }
  const int d_max = max_drop(bv);
  constexpr double kTol = 1e-12;

  // p(1) = 1 - mult_sum <= 0 and p grows like t^D, so the root sits in
  // [1, 1 + mult_sum]; with one unit term it is exactly 1.
  double lo = 1.0;
  double hi = 1.0 + mult_sum;
  double flo = defining_poly(bv, d_max, lo);
  WMESC_ASSERT(flo <= 0.0);
  if (std::abs(flo) <= kTol) return {lo, std::abs(flo)};
  WMESC_ASSERT(defining_poly(bv, d_max, hi) > 0.0);

  double mid = lo;
  double fmid = flo;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    fmid = defining_poly(bv, d_max, mid);
    if (std::abs(fmid) <= kTol) break;
    if (fmid > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  WMESC_ASSERT(std::abs(fmid) <= kTol);
  return {mid, std::abs(fmid)};
}

std::string vector_to_string(const BranchingVector& bv) {
  std::string out;
  for (std::size_t i = 0; i < bv.terms.size(); ++i) {
    if (i) out += "+";
    if (bv.terms[i].multiplicity > 1)
      out += std::to_string(bv.terms[i].multiplicity);
    out += "T(k-" + std::to_string(bv.terms[i].drop) + ")";
  }
  return out;
}

std::vector<RecurrenceEntry> branching_recurrence_table() {
  auto vec = [](std::vector<BranchingVector::Term> terms) {
    return BranchingVector{std::move(terms)};
  };
  return {
      {1, vec({{3, 2}}), 1.260},
      {2, vec({{2, 1}, {4, 1}}), 1.273},
      {3, vec({{4, 2}}), 1.190},
      {4, vec({{2, 1}, {4, 1}}), 1.273},
      {5, vec({{2, 1}, {4, 1}}), 1.273},
      {6, vec({{5, 2}, {3, 1}}), 1.299},
      {7, vec({{5, 1}, {2, 1}}), 1.237},
      {8, vec({{5, 1}, {2, 1}}), 1.237},
      {9, vec({{6, 1}, {1, 1}}), 1.286},
  };
}

LeafAudit audit_leaf_bound(const SearchStats& stats, int m) {
  WMESC_ASSERT(m >= 0);
  LeafAudit audit;
  audit.leaves = stats.leaves - stats.pruned_leaves;
  audit.bound = std::pow(kAuditBase, m);
  audit.ratio = static_cast<double>(audit.leaves) / std::pow(kClaimedBase, m);
  audit.pass = static_cast<double>(audit.leaves) <= audit.bound;
  return audit;
}

}  // namespace wmesc
