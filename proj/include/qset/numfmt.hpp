#ifndef QSET_NUMFMT_HPP
#define QSET_NUMFMT_HPP

#include <cstdio>
#include <string>

namespace qset::numfmt {

// Shortest display form, for human-facing report text.
inline std::string g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Round-trip form, for machine-readable output that must be byte-stable.
inline std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace qset::numfmt

#endif
