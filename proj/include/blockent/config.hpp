#pragma once

#include <map>
#include <optional>
#include <string>

#include "blockent/fips.hpp"

namespace blockent {

/// Flat key = value configuration file ('#' starts a comment, blank lines
/// ignored). Used for threshold presets and the rho/sigma^3 default.
/// Recognized keys: rho_ratio, monobit_lo/hi, poker_lo/hi, run1_lo/hi ..
/// run6_lo/hi (run6 covers lengths >= 6), long_run_limit.
class KeyValueConfig {
public:
    static KeyValueConfig load(const std::string& path);
    static KeyValueConfig parse(const std::string& text, const std::string& origin);

    std::optional<std::string> get(const std::string& key) const;
    std::optional<double> get_double(const std::string& key) const;
    std::optional<long long> get_int(const std::string& key) const;

    bool empty() const { return values_.empty(); }

private:
    std::map<std::string, std::string> values_;
    std::string origin_;
};

/// Overlay any threshold keys present in cfg onto `base`.
FipsThresholds thresholds_from_config(const KeyValueConfig& cfg,
                                      FipsThresholds base);

}  // namespace blockent
