#ifndef QSET_RELATIONS_HPP
#define QSET_RELATIONS_HPP

#include "qset/core.hpp"

// Quasi-relations between qsets and the quasi-function predicate: a
// relation that is total on its source and maps indistinguishable
// inputs to indistinguishable outputs.

namespace qset {

struct OrderedPair {
  Handle first;
  Handle second;

  friend bool operator==(OrderedPair, OrderedPair) = default;
  friend auto operator<=>(OrderedPair, OrderedPair) = default;
};

struct QRelation {
  Handle source; // qset
  Handle target; // qset
  std::vector<OrderedPair> pairs;
};

// True iff every pair's components are members (by handle) of source and
// target respectively. Throws on dangling handles or non-qset endpoints.
bool is_relation(const Universe& u, const QRelation& w);

// Qsets of first / second components. Registers a new qset in u; throws
// if is_relation fails.
Handle domain(Universe& u, const QRelation& w);
Handle range(Universe& u, const QRelation& w);

// Totality clause alone: every source member occurs as a first component.
bool is_total(const Universe& u, const QRelation& w);

// Congruence clause alone: u ≡ u' forces v ≡ v' across all pair pairs.
bool is_congruent(const Universe& u, const QRelation& w);

// is_relation + totality + congruence. Throws if is_relation fails.
bool is_quasi_function(const Universe& u, const QRelation& f);

// The qset of every value reachable from an input indistinguishable from
// x. Nonempty for x in the source's saturation; members are pairwise
// indistinguishable whenever f is a quasi-function. Throws when x matches
// no first component.
Handle qf_image(Universe& u, const QRelation& f, Handle x);

} // namespace qset

#endif
