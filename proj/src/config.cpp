#include "blockent/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "blockent/error.hpp"

namespace blockent {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise("io", "cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

KeyValueConfig KeyValueConfig::parse(const std::string& text,
                                     const std::string& origin) {
    KeyValueConfig cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            raise("parse", origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            raise("parse", origin + ":" + std::to_string(lineno) +
                               ": empty key or value");
        cfg.values_[key] = value;
    }
    return cfg;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> KeyValueConfig::get_double(const std::string& key) const {
    const auto raw = get(key);
    if (!raw) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(raw->c_str(), &end);
    if (end == raw->c_str() || *end != '\0')
        raise("parse", origin_ + ": key '" + key + "' is not a number: " + *raw);
    return v;
}

std::optional<long long> KeyValueConfig::get_int(const std::string& key) const {
    const auto raw = get(key);
    if (!raw) return std::nullopt;
    char* end = nullptr;
    const long long v = std::strtoll(raw->c_str(), &end, 10);
    if (end == raw->c_str() || *end != '\0')
        raise("parse", origin_ + ": key '" + key + "' is not an integer: " + *raw);
    return v;
}

FipsThresholds thresholds_from_config(const KeyValueConfig& cfg,
                                      FipsThresholds base) {
    auto interval = [&](const std::string& name, Interval& out) {
        if (const auto lo = cfg.get_double(name + "_lo")) out.lo = *lo;
        if (const auto hi = cfg.get_double(name + "_hi")) out.hi = *hi;
        if (!(out.lo < out.hi))
            raise("config", "threshold interval '" + name + "' has lo >= hi");
    };
    interval("monobit", base.monobit);
    interval("poker", base.poker);
    for (int i = 0; i < 6; ++i)
        interval("run" + std::to_string(i + 1), base.runs[static_cast<std::size_t>(i)]);
    if (const auto limit = cfg.get_int("long_run_limit")) base.long_run_limit = *limit;
    return base;
}

}  // namespace blockent
