#pragma once

// Logging controlled by the GLOCAL_LOG environment variable:
// quiet (default), info, debug.  Messages go to stderr.

#include <sstream>
#include <string>

namespace glocal::log {

enum class Level { quiet = 0, info = 1, debug = 2 };

Level level();
void set_level(Level lvl);
void write(Level lvl, const std::string& msg);

template <typename... Args>
void info(Args&&... args) {
  if (level() < Level::info) return;
  std::ostringstream os;
  (os << ... << args);
  write(Level::info, os.str());
}

template <typename... Args>
void debug(Args&&... args) {
  if (level() < Level::debug) return;
  std::ostringstream os;
  (os << ... << args);
  write(Level::debug, os.str());
}

}  // namespace glocal::log
