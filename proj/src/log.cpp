#include "topobench/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace topobench {

namespace {

LogLevel parse_level() {
    const char* env = std::getenv("QAOA_TOPOBENCH_LOG");
    if (env == nullptr) return LogLevel::kWarn;
    std::string v(env);
    if (v == "error" || v == "0") return LogLevel::kError;
    if (v == "warn" || v == "1") return LogLevel::kWarn;
    if (v == "info" || v == "2") return LogLevel::kInfo;
    if (v == "debug" || v == "3") return LogLevel::kDebug;
    return LogLevel::kWarn;
}

void emit(const char* tag, std::string_view msg) {
    std::fprintf(stderr, "[topobench %s] %.*s\n", tag,
                 static_cast<int>(msg.size()), msg.data());
}

}  // namespace

LogLevel log_level() {
    static const LogLevel level = parse_level();
    return level;
}

void log_error(std::string_view msg) {
    if (log_level() >= LogLevel::kError) emit("error", msg);
}

void log_warn(std::string_view msg) {
    if (log_level() >= LogLevel::kWarn) emit("warn", msg);
}

void log_info(std::string_view msg) {
    if (log_level() >= LogLevel::kInfo) emit("info", msg);
}

void log_debug(std::string_view msg) {
    if (log_level() >= LogLevel::kDebug) emit("debug", msg);
}

}  // namespace topobench
