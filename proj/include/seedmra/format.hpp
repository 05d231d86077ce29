#pragma once

#include <cstdio>
#include <string>

namespace seedmra {

// Shortest round-trip decimal form, locale-independent ('.' decimal point is
// guaranteed because the process never calls setlocale). All emitted numbers
// go through here so reruns are byte-identical.
inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace seedmra
