#pragma once

#include <cstdio>
#include <string>

namespace amesh::detail {

// Decimal text with 17 significant digits; enough to round-trip any double.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace amesh::detail
