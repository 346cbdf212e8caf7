#pragma once

#include <string_view>

namespace topobench {

// Log verbosity is controlled by the QAOA_TOPOBENCH_LOG environment
// variable: "error", "warn", "info" or "debug" (default "warn").
enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

LogLevel log_level();

void log_error(std::string_view msg);
void log_warn(std::string_view msg);
void log_info(std::string_view msg);
void log_debug(std::string_view msg);

}  // namespace topobench
