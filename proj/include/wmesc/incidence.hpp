#pragma once

#include <cstddef>
#include <vector>

#include "wmesc/instance.hpp"

namespace wmesc {

// Live view of the active portion of an instance during search. Maintains,
// per element, the bit collection of active sets containing it, updated
// incrementally on removals and restored exactly through an edit journal.
// Confined to one search thread; distinct views over the same Instance may
// run in parallel.
class ActiveView {
 public:
  explicit ActiveView(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  const Bitset& active_elements() const { return active_elements_; }
  const Bitset& active_sets() const { return active_sets_; }
  bool element_active(int x) const { return active_elements_.test(x); }
  bool set_active(int s) const { return active_sets_.test(s); }
  int active_set_count() const { return active_set_count_; }

  // Active sets containing x. Valid only while x is active.
  const Bitset& neighbor(int x) const {
    WMESC_ASSERT(element_active(x));
    return element_sets_[x];
  }
  int degree(int x) const {
    WMESC_ASSERT(element_active(x));
    return degree_[x];
  }

  // Union of all active sets containing x (contains x whenever degree >= 1).
  Bitset partner(int x) const;

  struct InOut {
    int degree_in;
    int degree_out;
    Bitset out_sets;  // neighbor(y) - neighbor(x)
  };
  // Splits neighbor(y) into the part shared with neighbor(x) and the rest.
  // Requires y in partner(x).
  InOut degree_in_out(int x, int y) const;

  struct MinDegree {
    int element;
    int degree;
  };
  // Active element of minimum degree, lowest id on ties. Requires a
  // nonempty active element collection.
  MinDegree min_degree_element() const;

  // --- mutation, all journaled ---
  using Mark = std::size_t;
  Mark mark() const { return journal_.size(); }

  // Deactivates set s and drops its edges to still-active elements.
  void remove_set(int s);
  // Deactivates element x. Callers remove x's sets first (or accept that
  // x's row is frozen as-is until rollback).
  void remove_element(int x);

  // Reverts every edit made since the mark, bit for bit.
  void rollback(Mark mark);

 private:
  enum class EditKind : unsigned char { EdgeDrop, SetDrop, ElementDrop };
  struct Edit {
    EditKind kind;
    int a;  // element for EdgeDrop/ElementDrop, set for SetDrop
    int b;  // set for EdgeDrop
  };

  const Instance* inst_;
  Bitset active_elements_;
  Bitset active_sets_;
  std::vector<Bitset> element_sets_;  // per element, capacity m
  std::vector<int> degree_;
  int active_set_count_;
  std::vector<Edit> journal_;
};

}  // namespace wmesc
