#include "osg/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

namespace osg {

LogLevel log_threshold() {
    static const LogLevel level = [] {
        const char* env = std::getenv("OSG_LOG");
        if (env == nullptr)
            return LogLevel::warn;
        if (std::strcmp(env, "error") == 0)
            return LogLevel::error;
        if (std::strcmp(env, "info") == 0)
            return LogLevel::info;
        if (std::strcmp(env, "debug") == 0)
            return LogLevel::debug;
        return LogLevel::warn;
    }();
    return level;
}

void log(LogLevel level, const std::string& message) {
    if (level > log_threshold())
        return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << message << "\n";
}

} // namespace osg
