#pragma once

#include <string>

namespace uavsim::log {

enum class Level { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

/// Active level, read once from the SIM_LOG_LEVEL environment variable
/// (error|warn|info|debug, default warn).
Level level();

void write(Level lvl, const std::string& msg);

inline void error(const std::string& msg) { write(Level::kError, msg); }
inline void warn(const std::string& msg) { write(Level::kWarn, msg); }
inline void info(const std::string& msg) { write(Level::kInfo, msg); }
inline void debug(const std::string& msg) { write(Level::kDebug, msg); }

}  // namespace uavsim::log
