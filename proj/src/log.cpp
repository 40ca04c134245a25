#include "log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace glocal::log {

namespace {

Level parse_env() {
  const char* v = std::getenv("GLOCAL_LOG");
  if (!v) return Level::quiet;
  std::string s(v);
  if (s == "debug") return Level::debug;
  if (s == "info") return Level::info;
  return Level::quiet;
}

Level g_level = parse_env();
std::mutex g_mutex;

}  // namespace

Level level() { return g_level; }

void set_level(Level lvl) { g_level = lvl; }

void write(Level lvl, const std::string& msg) {
  std::scoped_lock lock(g_mutex);
  std::cerr << (lvl == Level::debug ? "[glocal:debug] " : "[glocal] ") << msg
            << "\n";
}

}  // namespace glocal::log
