#ifndef PLUSTOUR_COMMON_HPP
#define PLUSTOUR_COMMON_HPP

#include <cstdint>
#include <cstdio>
#include <string>

namespace plustour {

// Time values are real-valued minutes throughout; comparisons use this slack.
constexpr double kTimeEps = 1e-6;

enum class LogLevel : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level();
void set_log_level(LogLevel level);

void log_message(LogLevel level, const std::string& msg);

inline void log_error(const std::string& msg) { log_message(LogLevel::Error, msg); }
inline void log_warn(const std::string& msg) { log_message(LogLevel::Warn, msg); }
inline void log_info(const std::string& msg) { log_message(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_message(LogLevel::Debug, msg); }

// Fixed-precision decimal formatting used by every CSV writer so repeated
// runs produce identical bytes.
std::string format_fixed(double value, int decimals = 6);

} // namespace plustour

#endif
