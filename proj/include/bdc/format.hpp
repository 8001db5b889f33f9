#ifndef BDC_FORMAT_HPP
#define BDC_FORMAT_HPP

#include <cstdio>
#include <string>

namespace bdc::detail {

// %g at a fixed significant-digit budget; trailing zeros dropped
inline std::string format_sig(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace bdc::detail

#endif
