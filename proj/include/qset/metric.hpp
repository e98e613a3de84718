#ifndef QSET_METRIC_HPP
#define QSET_METRIC_HPP

#include "qset/core.hpp"

#include <array>
#include <functional>
#include <unordered_map>

// Quasi-metric spaces: a carrier qset with a real-valued distance that is
// zero exactly on indistinguishable pairs, positive on distinguishable
// ones, symmetric, and triangle-bounded. audit_axioms checks all of that
// exhaustively over the finite carrier.

namespace qset {

using DistanceFn = std::function<double(Handle, Handle)>;

class QuasiMetricSpace {
public:
  // Dense form: row-major |X| x |X| matrix over the carrier members in
  // handle order.
  static QuasiMetricSpace dense(const Universe& u, Handle carrier, std::vector<double> matrix);

  // Callable form for parametric distances (the EPRB space uses this).
  static QuasiMetricSpace from_function(const Universe& u, Handle carrier, DistanceFn fn);

  double distance(Handle x, Handle y) const;

  const Universe& universe() const { return *universe_; }
  Handle carrier() const { return carrier_; }
  const std::vector<Handle>& members() const { return members_; }

  // Internal index form used by the audit loops.
  double distance_at(std::size_t i, std::size_t j) const;

private:
  QuasiMetricSpace(const Universe& u, Handle carrier);

  const Universe* universe_ = nullptr;
  Handle carrier_;
  std::vector<Handle> members_;
  std::unordered_map<Handle, std::size_t> index_;
  std::vector<double> matrix_; // empty when fn_ is set
  DistanceFn fn_;
};

// Axiom identifiers as used in violation records.
inline constexpr int kAxiomNonEmpty = 1;
inline constexpr int kAxiomRealValued = 2;
inline constexpr int kAxiomZeroOnIndistinguishable = 3;
inline constexpr int kAxiomPositiveOnDistinguishable = 4;
inline constexpr int kAxiomSymmetry = 5;
inline constexpr int kAxiomTriangle = 6;

struct AuditViolation {
  int axiom = 0;
  std::vector<Handle> witnesses;
  std::vector<double> values;

  friend bool operator==(const AuditViolation&, const AuditViolation&) = default;
};

struct AuditReport {
  bool passed = false;
  std::vector<AuditViolation> violations;
  // Per-argument congruence of the distance (x ≡ x' forces equal rows).
  // A consequence of axioms 3, 5, 6, reported separately as a diagnostic
  // aid; does not affect `passed`.
  std::vector<AuditViolation> congruence_notes;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  double epsilon = 0.0;
};

struct AuditOptions {
  double epsilon = 1e-9;
  bool parallel = true;
};

// Exhaustive audit: |X|^2 pair checks (axioms 2-5) and |X|^3 triangle
// checks (axiom 6). Every violation is recorded, in a deterministic
// order, regardless of the execution policy.
//
// The strict-positivity check (axiom 4) is tolerance-free, so a report
// that passes at some epsilon passes at every larger epsilon.
AuditReport audit_axioms(const QuasiMetricSpace& s, const AuditOptions& options = {});

// Straight-line single-threaded scan kept as the reference the parallel
// kernel is tested and benchmarked against.
AuditReport audit_axioms_reference(const QuasiMetricSpace& s, double epsilon = 1e-9);

std::string format_report(const QuasiMetricSpace& s, const AuditReport& r);

} // namespace qset

#endif
