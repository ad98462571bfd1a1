#include "wmesc/incidence.hpp"

namespace wmesc {

ActiveView::ActiveView(const Instance& inst)
    : inst_(&inst),
      active_elements_(inst.n),
      active_sets_(inst.m()),
      element_sets_(inst.n, Bitset(inst.m())),
      degree_(inst.n, 0),
      active_set_count_(inst.m()) {
  active_elements_.set_first(inst.n);
  active_sets_.set_first(inst.m());
  for (int s = 0; s < inst.m(); ++s)
    inst.sets[s].for_each([&](int x) {
      element_sets_[x].set(s);
      ++degree_[x];
    });
}

Bitset ActiveView::partner(int x) const {
  WMESC_ASSERT(element_active(x));
  Bitset p(inst_->n);
  element_sets_[x].for_each([&](int s) { p |= inst_->sets[s]; });
  return p;
}

ActiveView::InOut ActiveView::degree_in_out(int x, int y) const {
  WMESC_ASSERT(element_active(x) && element_active(y));
  const Bitset& nx = element_sets_[x];
  const Bitset& ny = element_sets_[y];
  InOut r{ny.intersection_count(nx), 0, ny.difference(nx)};
  r.degree_out = r.out_sets.count();
  WMESC_ASSERT(r.degree_in + r.degree_out == degree_[y]);
  WMESC_ASSERT(r.degree_in >= 1);  // y in partner(x) shares a set with x
  return r;
}

ActiveView::MinDegree ActiveView::min_degree_element() const {
  MinDegree best{-1, 0};
  active_elements_.for_each([&](int x) {
    if (best.element < 0 || degree_[x] < best.degree) best = {x, degree_[x]};
  });
  WMESC_ASSERT(best.element >= 0);
  return best;
}

void ActiveView::remove_set(int s) {
  WMESC_ASSERT(set_active(s));
  inst_->sets[s].for_each([&](int x) {
    if (!active_elements_.test(x)) return;
    element_sets_[x].reset(s);
    --degree_[x];
    journal_.push_back({EditKind::EdgeDrop, x, s});
  });
  active_sets_.reset(s);
  --active_set_count_;
  journal_.push_back({EditKind::SetDrop, s, 0});
}

void ActiveView::remove_element(int x) {
  WMESC_ASSERT(element_active(x));
  active_elements_.reset(x);
  journal_.push_back({EditKind::ElementDrop, x, 0});
}

void ActiveView::rollback(Mark mark) {
  WMESC_ASSERT(mark <= journal_.size());
  while (journal_.size() > mark) {
    const Edit e = journal_.back();
    journal_.pop_back();
    switch (e.kind) {
      case EditKind::EdgeDrop:
        element_sets_[e.a].set(e.b);
        ++degree_[e.a];
        break;
      case EditKind::SetDrop:
        active_sets_.set(e.a);
        ++active_set_count_;
        break;
      case EditKind::ElementDrop:
        active_elements_.set(e.a);
        break;
    }
  }
}

}  // namespace wmesc
