#ifndef QSET_CORE_HPP
#define QSET_CORE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Finite universes of three entity sorts: micro-atoms (identity is not
// defined on them, only the indistinguishability relation), macro-atoms
// (classical urelements with labels), and qsets (collections of entity
// handles counted by quasi-cardinality).

namespace qset {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when extensional equality is requested on a micro-atom.
class MicroIdentityError : public Error {
public:
  using Error::Error;
};

enum class Sort { Micro, Macro, Qset };

const char* to_string(Sort s);

// Opaque entity identifier. Handles are plumbing: qset membership and
// registry lookups go by handle, but the theory-level API never exposes
// identity of two micro-atom handles (use Universe::indistinguishable).
struct Handle {
  std::uint32_t value = UINT32_MAX;

  friend bool operator==(Handle, Handle) = default;
  friend auto operator<=>(Handle, Handle) = default;
};

struct Species {
  std::string id;
  std::string description;
};

// Quasi-cardinality. A weak singleton may have quasi-cardinality > 1.
struct Cardinal {
  std::uint64_t value = 0;

  friend bool operator==(Cardinal, Cardinal) = default;
  friend auto operator<=>(Cardinal, Cardinal) = default;
};

// A finite registry of entities over a fixed species table.
//
// Construction (add_*, make_qset, weak_pair, ...) requires exclusive
// access; every query is const and safe to call concurrently once the
// universe is built.
class Universe {
public:
  explicit Universe(std::vector<Species> species);

  // -- registry ------------------------------------------------------

  Handle add_micro_atom(std::string_view species_id);
  Handle add_macro_atom(std::string_view label);
  // Member handles must exist; duplicates collapse.
  Handle make_qset(std::span<const Handle> members);
  Handle make_qset(std::initializer_list<Handle> members);

  bool contains(Handle h) const;
  std::size_t size() const { return entities_.size(); }
  Handle entity_at(std::size_t index) const;
  std::vector<Handle> entities() const;

  const std::vector<Species>& species_table() const { return species_; }
  bool has_species(std::string_view id) const;

  // -- sort predicates m(x), M(x), Q(x) ------------------------------

  Sort sort_of(Handle h) const;
  bool is_micro(Handle h) const { return sort_of(h) == Sort::Micro; }
  bool is_macro(Handle h) const { return sort_of(h) == Sort::Macro; }
  bool is_qset(Handle h) const { return sort_of(h) == Sort::Qset; }

  std::string_view species_of(Handle h) const;       // micro only
  std::string_view label_of(Handle h) const;         // macro only
  std::span<const Handle> members_of(Handle h) const; // qset only, sorted

  // Display name for diagnostics: species/label/qset summary.
  std::string describe(Handle h) const;

  // -- the indistinguishability relation -----------------------------

  // Micro vs micro: same species. Macro vs macro: same label. Qset vs
  // qset: same member handle set. Mixed sorts: false (same handle is
  // always indistinguishable from itself).
  bool indistinguishable(Handle x, Handle y) const;

  // Extensional equality. Undefined on micro-atoms: a micro argument
  // raises MicroIdentityError ("identity undefined for m-atoms").
  bool extensionally_equal(Handle x, Handle y) const;

  // -- qset operations -----------------------------------------------

  Cardinal quasi_cardinality(Handle q) const;
  bool member_of(Handle t, Handle q) const;
  Handle qset_union(Handle a, Handle b);

  // The qset of every registered entity indistinguishable from x or
  // from y (saturation over the current registry).
  Handle weak_pair(Handle x, Handle y);
  Handle weak_singleton(Handle x) { return weak_pair(x, x); }

private:
  struct Entity {
    Sort sort;
    std::uint32_t species_index = 0;  // micro
    std::string label;                // macro
    std::vector<Handle> members;      // qset, sorted unique
  };

  const Entity& get(Handle h) const;
  Handle push(Entity e);

  std::vector<Species> species_;
  std::vector<Entity> entities_;
};

} // namespace qset

template <>
struct std::hash<qset::Handle> {
  std::size_t operator()(qset::Handle h) const noexcept {
    return std::hash<std::uint32_t>{}(h.value);
  }
};

#endif
