#ifndef MLOCHAN_COMMON_LOGGING_HPP
#define MLOCHAN_COMMON_LOGGING_HPP

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace mlochan::log {

enum class Level { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

/// Verbosity comes from the MLOCHAN_LOG environment variable
/// (quiet|warn|info|debug); default is warn.
inline Level level() {
  static const Level lvl = [] {
    const char* env = std::getenv("MLOCHAN_LOG");
    if (env == nullptr) return Level::Warn;
    if (std::strcmp(env, "quiet") == 0) return Level::Quiet;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    return Level::Warn;
  }();
  return lvl;
}

inline void warn(const std::string& msg) {
  if (level() >= Level::Warn) std::fprintf(stderr, "[warn] %s\n", msg.c_str());
}

inline void info(const std::string& msg) {
  if (level() >= Level::Info) std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

inline void debug(const std::string& msg) {
  if (level() >= Level::Debug) std::fprintf(stderr, "[debug] %s\n", msg.c_str());
}

}  // namespace mlochan::log

#endif
