#include "qset/core.hpp"

#include <algorithm>

namespace qset {

const char* to_string(Sort s) {
  switch (s) {
    case Sort::Micro: return "MICRO";
    case Sort::Macro: return "MACRO";
    case Sort::Qset: return "QSET";
  }
  return "?";
}

Universe::Universe(std::vector<Species> species) : species_(std::move(species)) {
  for (std::size_t i = 0; i < species_.size(); ++i) {
    for (std::size_t j = i + 1; j < species_.size(); ++j) {
      if (species_[i].id == species_[j].id) {
        throw Error("duplicate species id '" + species_[i].id + "'");
      }
    }
  }
}

Handle Universe::push(Entity e) {
  entities_.push_back(std::move(e));
  return Handle{static_cast<std::uint32_t>(entities_.size() - 1)};
}

const Universe::Entity& Universe::get(Handle h) const {
  if (h.value >= entities_.size()) {
    throw Error("dangling handle #" + std::to_string(h.value));
  }
  return entities_[h.value];
}

bool Universe::contains(Handle h) const { return h.value < entities_.size(); }

Handle Universe::entity_at(std::size_t index) const {
  if (index >= entities_.size()) throw Error("entity index out of range");
  return Handle{static_cast<std::uint32_t>(index)};
}

std::vector<Handle> Universe::entities() const {
  std::vector<Handle> out(entities_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].value = static_cast<std::uint32_t>(i);
  return out;
}

bool Universe::has_species(std::string_view id) const {
  for (const auto& s : species_)
    if (s.id == id) return true;
  return false;
}

Handle Universe::add_micro_atom(std::string_view species_id) {
  for (std::size_t i = 0; i < species_.size(); ++i) {
    if (species_[i].id == species_id) {
      Entity e;
      e.sort = Sort::Micro;
      e.species_index = static_cast<std::uint32_t>(i);
      return push(std::move(e));
    }
  }
  throw Error("unknown species '" + std::string(species_id) + "'");
}

Handle Universe::add_macro_atom(std::string_view label) {
  if (label.empty()) throw Error("macro-atom label must be nonempty");
  Entity e;
  e.sort = Sort::Macro;
  e.label = std::string(label);
  return push(std::move(e));
}

Handle Universe::make_qset(std::span<const Handle> members) {
  Entity e;
  e.sort = Sort::Qset;
  e.members.assign(members.begin(), members.end());
  for (Handle m : e.members) {
    if (!contains(m)) throw Error("qset member is a dangling handle #" + std::to_string(m.value));
  }
  std::sort(e.members.begin(), e.members.end());
  e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
  return push(std::move(e));
}

Handle Universe::make_qset(std::initializer_list<Handle> members) {
  return make_qset(std::span<const Handle>(members.begin(), members.size()));
}

Sort Universe::sort_of(Handle h) const { return get(h).sort; }

std::string_view Universe::species_of(Handle h) const {
  const Entity& e = get(h);
  if (e.sort != Sort::Micro) throw Error("species_of: not a micro-atom");
  return species_[e.species_index].id;
}

std::string_view Universe::label_of(Handle h) const {
  const Entity& e = get(h);
  if (e.sort != Sort::Macro) throw Error("label_of: not a macro-atom");
  return e.label;
}

std::span<const Handle> Universe::members_of(Handle h) const {
  const Entity& e = get(h);
  if (e.sort != Sort::Qset) throw Error("members_of: not a qset");
  return e.members;
}

std::string Universe::describe(Handle h) const {
  const Entity& e = get(h);
  switch (e.sort) {
    case Sort::Micro:
      return "m-atom#" + std::to_string(h.value) + "(" + species_[e.species_index].id + ")";
    case Sort::Macro:
      return "M-atom#" + std::to_string(h.value) + "(" + e.label + ")";
    case Sort::Qset:
      return "qset#" + std::to_string(h.value) + "{" + std::to_string(e.members.size()) + "}";
  }
  return "?";
}

bool Universe::indistinguishable(Handle x, Handle y) const {
  const Entity& ex = get(x);
  const Entity& ey = get(y);
  if (x == y) return true;
  if (ex.sort != ey.sort) return false;
  switch (ex.sort) {
    case Sort::Micro: return ex.species_index == ey.species_index;
    case Sort::Macro: return ex.label == ey.label;
    case Sort::Qset: return ex.members == ey.members;
  }
  return false;
}

bool Universe::extensionally_equal(Handle x, Handle y) const {
  const Entity& ex = get(x);
  const Entity& ey = get(y);
  if (ex.sort == Sort::Micro || ey.sort == Sort::Micro) {
    throw MicroIdentityError("identity undefined for m-atoms");
  }
  if (ex.sort == Sort::Qset && ey.sort == Sort::Qset) return ex.members == ey.members;
  if (ex.sort == Sort::Macro && ey.sort == Sort::Macro) return ex.label == ey.label;
  return false;
}

Cardinal Universe::quasi_cardinality(Handle q) const {
  const Entity& e = get(q);
  if (e.sort != Sort::Qset) throw Error("quasi-cardinality requires a qset argument");
  return Cardinal{e.members.size()};
}

bool Universe::member_of(Handle t, Handle q) const {
  const Entity& e = get(q);
  get(t);
  if (e.sort != Sort::Qset) throw Error("membership requires a qset on the right");
  return std::binary_search(e.members.begin(), e.members.end(), t);
}

Handle Universe::qset_union(Handle a, Handle b) {
  std::span<const Handle> ma = members_of(a);
  std::span<const Handle> mb = members_of(b);
  std::vector<Handle> merged(ma.begin(), ma.end());
  merged.insert(merged.end(), mb.begin(), mb.end());
  return make_qset(merged);
}

Handle Universe::weak_pair(Handle x, Handle y) {
  get(x);
  get(y);
  std::vector<Handle> matching;
  for (std::size_t i = 0; i < entities_.size(); ++i) {
    Handle t{static_cast<std::uint32_t>(i)};
    if (indistinguishable(t, x) || indistinguishable(t, y)) matching.push_back(t);
  }
  return make_qset(matching);
}

} // namespace qset
