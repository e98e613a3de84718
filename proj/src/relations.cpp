#include "qset/relations.hpp"

namespace qset {

bool is_relation(const Universe& u, const QRelation& w) {
  if (!u.is_qset(w.source)) throw Error("relation source must be a qset");
  if (!u.is_qset(w.target)) throw Error("relation target must be a qset");
  for (const OrderedPair& p : w.pairs) {
    if (!u.member_of(p.first, w.source)) return false;
    if (!u.member_of(p.second, w.target)) return false;
  }
  return true;
}

namespace {

void require_relation(const Universe& u, const QRelation& w) {
  if (!is_relation(u, w)) throw Error("not a relation: a pair component escapes source or target");
}

} // namespace

Handle domain(Universe& u, const QRelation& w) {
  require_relation(u, w);
  std::vector<Handle> firsts;
  firsts.reserve(w.pairs.size());
  for (const OrderedPair& p : w.pairs) firsts.push_back(p.first);
  return u.make_qset(firsts);
}

Handle range(Universe& u, const QRelation& w) {
  require_relation(u, w);
  std::vector<Handle> seconds;
  seconds.reserve(w.pairs.size());
  for (const OrderedPair& p : w.pairs) seconds.push_back(p.second);
  return u.make_qset(seconds);
}

bool is_total(const Universe& u, const QRelation& w) {
  for (Handle m : u.members_of(w.source)) {
    bool mapped = false;
    for (const OrderedPair& p : w.pairs) {
      if (p.first == m) {
        mapped = true;
        break;
      }
    }
    if (!mapped) return false;
  }
  return true;
}

bool is_congruent(const Universe& u, const QRelation& w) {
  for (const OrderedPair& p : w.pairs) {
    for (const OrderedPair& q : w.pairs) {
      if (u.indistinguishable(p.first, q.first) && !u.indistinguishable(p.second, q.second)) {
        return false;
      }
    }
  }
  return true;
}

bool is_quasi_function(const Universe& u, const QRelation& f) {
  require_relation(u, f);
  return is_total(u, f) && is_congruent(u, f);
}

Handle qf_image(Universe& u, const QRelation& f, Handle x) {
  require_relation(u, f);
  std::vector<Handle> values;
  for (const OrderedPair& p : f.pairs) {
    if (u.indistinguishable(p.first, x)) values.push_back(p.second);
  }
  if (values.empty()) {
    throw Error("image undefined: " + u.describe(x) +
                " is indistinguishable from no mapped input");
  }
  return u.make_qset(values);
}

} // namespace qset
