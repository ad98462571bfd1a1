#include "wmesc/solver.hpp"

#include <algorithm>
#include <cmath>

#include "wmesc/check.hpp"

namespace wmesc {

const char* branch_kind_name(BranchKind k) {
  switch (k) {
    case BranchKind::Unary:
      return "unary";
    case BranchKind::Forced:
      return "forced";
    case BranchKind::TwoBranch:
      return "two_branch";
    case BranchKind::Out1Pair:
      return "out1_pair";
    case BranchKind::Out1Full:
      return "out1_full";
    case BranchKind::Generic:
      return "generic";
  }
  return "?";
}

SolveState::SolveState(const Instance& inst) : inst_(&inst), view_(inst) {}

SolveState::Token SolveState::select_set(int s) {
  WMESC_ASSERT(view_.set_active(s));
  Token t{view_.mark(), partial_.size(), partial_weight_};

  // Everything that touches s has to go: the victim sets are all active
  // sets meeting an element of s (s itself included).
  const Bitset& members = inst_->sets[s];
  Bitset victims(inst_->m());
  members.for_each([&](int e) {
    WMESC_ASSERT(view_.element_active(e));
    victims |= view_.neighbor(e);
  });
  victims.for_each([&](int v) { view_.remove_set(v); });
  members.for_each([&](int e) {
    WMESC_ASSERT(view_.degree(e) == 0);
    view_.remove_element(e);
  });

  partial_.push_back(s);
  partial_sorted_.insert(
      std::lower_bound(partial_sorted_.begin(), partial_sorted_.end(), s), s);
  partial_weight_ += inst_->weights[s];
  return t;
}

SolveState::Token SolveState::exclude_sets(std::span<const int> sets) {
  Token t{view_.mark(), partial_.size(), partial_weight_};
  for (int s : sets) {
    WMESC_ASSERT(view_.set_active(s));
    view_.remove_set(s);
  }
  return t;
}

void SolveState::rollback(const Token& t) {
  view_.rollback(t.mark);
  while (partial_.size() > t.partial_size) {
    int s = partial_.back();
    partial_.pop_back();
    auto pos =
        std::lower_bound(partial_sorted_.begin(), partial_sorted_.end(), s);
    WMESC_ASSERT(pos != partial_sorted_.end() && *pos == s);
    partial_sorted_.erase(pos);
  }
  partial_weight_ = t.partial_weight;
}

double SolveState::partial_weight_ascending() const {
  double w = 0.0;
  for (int s : partial_sorted_) w += inst_->weights[s];
  WMESC_ASSERT(std::abs(w - partial_weight_) <=
               1e-12 * std::max(1.0, std::abs(w)));
  return w;
}

namespace {

// Depth-first branch-and-reduce. One instance per solve call; all state is
// owned here, so concurrent solves never share anything mutable.
class Searcher {
 public:
  Searcher(const Instance& inst, const SolveOptions& opt)
      : inst_(inst), opt_(opt), state_(inst) {}

  SolveResult run() {
    descend(1);
    SolveResult r;
    r.stats = stats_;
    r.outcome = have_best_ ? Outcome::cover(std::move(best_), best_weight_)
                           : Outcome::no_solution();
    return r;
  }

 private:
  void note_branch(BranchKind k) {
    ++stats_.branch_histogram[static_cast<int>(k)];
  }

  void descend(std::uint64_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    if (opt_.prune && have_best_ &&
        !(state_.partial_weight_ascending() < best_weight_)) {
      ++stats_.leaves;
      ++stats_.pruned_leaves;
      return;
    }

    const ActiveView& view = state_.view();

    // Nothing left to cover: the partial selection is a complete mutually
    // exclusive cover.
    if (view.active_elements().none()) {
      ++stats_.leaves;
      double w = state_.partial_weight_ascending();
      if (!have_best_ || w < best_weight_) {
        have_best_ = true;
        best_weight_ = w;
        best_ = state_.partial();
        std::sort(best_.begin(), best_.end());
      }
      return;
    }

    const auto [x, d] = view.min_degree_element();

    // An uncoverable element: dead end.
    if (d == 0) {
      ++stats_.leaves;
      return;
    }

    // Only one set can cover x, so it is forced.
    if (d == 1) {
      note_branch(BranchKind::Unary);
      int s = view.neighbor(x).find_first();
      auto t = state_.select_set(s);
      descend(depth + 1);
      state_.rollback(t);
      return;
    }

    // One pass over x's partners classifies the node: does any partner own
    // sets outside neighbor(x), is there one with exactly one such set, and
    // which partner has the most.
    const Bitset partners = view.partner(x);
    int y_out1 = -1;      // lowest partner with exactly one outside set
    int w_prime = -1;     // that partner's unique outside set
    int y_max = -1;       // lowest partner with maximum outside degree
    int max_out = -1;
    partners.for_each([&](int y) {
      ActiveView::InOut io = view.degree_in_out(x, y);
      if (io.degree_out == 1 && y_out1 < 0) {
        y_out1 = y;
        w_prime = io.out_sets.find_first();
      }
      if (io.degree_out > max_out) {
        max_out = io.degree_out;
        y_max = y;
      }
    });

    // Every set touching the partner block stays inside neighbor(x), so the
    // one set that covers x must cover the whole block by itself.
    if (max_out == 0) {
      int pick = -1;
      view.neighbor(x).for_each([&](int s) {
        if (inst_.sets[s] == partners &&
            (pick < 0 || inst_.weights[s] < inst_.weights[pick]))
          pick = s;
      });
      if (pick < 0) {
        ++stats_.leaves;
        return;
      }
      note_branch(BranchKind::Forced);
      auto t = state_.select_set(pick);
      descend(depth + 1);
      state_.rollback(t);
      return;
    }

    // Exactly two candidate sets for x: try each.
    if (d == 2) {
      if constexpr (kChecksEnabled) {
        view.active_elements().for_each(
            [&](int e) { WMESC_ASSERT(view.degree(e) >= 2); });
      }
      note_branch(BranchKind::TwoBranch);
      int s1 = view.neighbor(x).find_first();
      int s2 = view.neighbor(x).find_next(s1 + 1);
      WMESC_ASSERT(s1 >= 0 && s2 > s1);
      auto t1 = state_.select_set(s1);
      descend(depth + 1);
      state_.rollback(t1);
      auto t2 = state_.select_set(s2);
      descend(depth + 1);
      state_.rollback(t2);
      return;
    }

    WMESC_ASSERT(d >= 3);
    WMESC_ASSERT(max_out >= 1);

    if (y_out1 >= 0) {
      // Partner y has a single set W' outside neighbor(x). Covering y by
      // anything other than W' also covers x, so W' pairs up rigidly with
      // the candidates for x.
      const int y = y_out1;
      const Bitset outside = view.neighbor(x).difference(view.neighbor(y));
      const int outside_count = outside.count();
      if (outside_count > 0) {
        // All but one of x's sets contain y; call the exception W. A cover
        // that uses W must pick W' for y, and one that covers x through any
        // other set blocks both W and W'. Taking the pair is feasible only
        // when W and W' are disjoint; when they collide every cover avoids
        // both and the exclusion branch already captures that.
        WMESC_ASSERT(outside_count == 1);
        note_branch(BranchKind::Out1Pair);
        const int w = outside.find_first();
        WMESC_ASSERT(w != w_prime);
        if (!inst_.sets[w].intersects(inst_.sets[w_prime])) {
          auto ta = state_.select_set(w_prime);
          WMESC_ASSERT(state_.view().set_active(w));
          state_.select_set(w);
          descend(depth + 1);
          state_.rollback(ta);
        }
        const std::array<int, 2> pair{w_prime, w};
        auto tb = state_.exclude_sets(pair);
        descend(depth + 1);
        state_.rollback(tb);
        return;
      }

      // Every set covering x also covers y, so a cover that skips W must
      // cover y through x's other sets and can never use W' either.
      note_branch(BranchKind::Out1Full);
      const int w = view.neighbor(x).find_first();
      WMESC_ASSERT(w != w_prime);
      auto ta = state_.select_set(w);
      descend(depth + 1);
      state_.rollback(ta);
      const std::array<int, 2> pair{w_prime, w};
      auto tb = state_.exclude_sets(pair);
      descend(depth + 1);
      state_.rollback(tb);
      return;
    }

    // General two-way branch on the lowest set shared by x and the partner
    // with the most outside sets.
    WMESC_ASSERT(max_out >= 2);
    note_branch(BranchKind::Generic);
    const Bitset shared = view.neighbor(x) & view.neighbor(y_max);
    const int z = shared.find_first();
    WMESC_ASSERT(z >= 0);
    auto ta = state_.select_set(z);
    descend(depth + 1);
    state_.rollback(ta);
    const std::array<int, 1> one{z};
    auto tb = state_.exclude_sets(one);
    descend(depth + 1);
    state_.rollback(tb);
  }

  const Instance& inst_;
  SolveOptions opt_;
  SolveState state_;
  SearchStats stats_;
  bool have_best_ = false;
  double best_weight_ = 0.0;
  std::vector<int> best_;
};

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& options) {
  if constexpr (kChecksEnabled) {
    // The search assumes a normalized family: no empty sets, no duplicates.
    Normalized norm = normalize(inst);
    WMESC_ASSERT(norm.instance == inst);
  }
  Searcher searcher(inst, options);
  return searcher.run();
}

std::string histogram_to_string(const SearchStats& stats) {
  std::string out;
  for (int k = 0; k < kBranchKinds; ++k) {
    if (k) out += ',';
    out += branch_kind_name(static_cast<BranchKind>(k));
    out += ':';
    out += std::to_string(stats.branch_histogram[k]);
  }
  return out;
}

}  // namespace wmesc
