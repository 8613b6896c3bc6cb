#ifndef MLOCHAN_COMMON_TEXT_HPP
#define MLOCHAN_COMMON_TEXT_HPP

#include <charconv>
#include <cstdio>
#include <string>

namespace mlochan {

/// Shortest decimal form that round-trips to the same double. Used for every
/// number written to output files so that re-runs are byte-identical.
inline std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string fmt_int(long long v) { return std::to_string(v); }

}  // namespace mlochan

#endif
