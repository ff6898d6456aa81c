#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockent/entropy.hpp"
#include "blockent/image.hpp"
#include "blockent/sampler.hpp"

namespace blockent {

/// Berry-Esseen constant (best published bound) and the default Monte Carlo
/// estimate of rho/sigma^3 for block entropies; their product 0.76544 drives
/// the worst-case Type-I bound. The ratio can be re-estimated with
/// estimate_rho_ratio() and passed through explicitly.
inline constexpr double kBerryEsseenC = 0.4784;
inline constexpr double kDefaultRhoRatio = 1.6;

struct TestConfig {
    BlockSpec spec;
    int levels = 256;
    int k = 100;
    double alpha = 0.01;
    std::uint64_t seed = 0;
};

enum class Decision { IdeallyEncrypted, NotIdeallyEncrypted };

inline const char* to_string(Decision d) {
    return d == Decision::IdeallyEncrypted ? "IdeallyEncrypted"
                                           : "NotIdeallyEncrypted";
}

/// Outcome of one block entropy test run. block_entropies are listed in
/// ascending anchor order (row-major), the same fixed order used to
/// accumulate h_bar, so reports are bit-stable.
struct TestReport {
    double h_bar = 0.0;
    double z = 0.0;
    double h_c = 0.0;
    Decision decision = Decision::IdeallyEncrypted;
    double gamma_bound = 0.0;
    std::vector<double> block_entropies;
    std::vector<std::pair<int, int>> positions;
    TestConfig config;
    std::string image_id;  // filled by callers that know the source
};

/// One-sided lower critical value: h_bar below this rejects the
/// ideally-encrypted hypothesis at level alpha.
///   H_c = mu - Phi^{-1}(1 - alpha) * sigma.
double critical_value(const SampleMeanMoments& moments, double alpha);

/// Z statistic of an observed sample mean: (h_bar - mu) / sigma.
/// Throws Error("degenerate-moments") when sigma is not positive.
double z_statistic(double h_bar, const SampleMeanMoments& moments);

/// Reject (NotIdeallyEncrypted) iff h_bar < h_c; the boundary tie accepts and
/// arbitrarily large h_bar never rejects.
Decision decide(double h_bar, double h_c);

/// Worst-case Type-I rate when k may be too small for the CLT:
///   gamma = C * rho_ratio / sqrt(k) + alpha
/// with C = kBerryEsseenC. rho_ratio defaults to the Monte Carlo value 1.6.
double type1_upper_bound(std::int64_t k, double alpha,
                         double rho_ratio = kDefaultRhoRatio);

/// Full pipeline: sample k non-overlapping blocks, compute each block's
/// entropy, average in ascending anchor order, and test against the
/// theoretical sample-mean distribution. Throws Error("config") when the
/// image's level count differs from the config.
TestReport run_test(const ImageGrid& image, const TestConfig& config,
                    double rho_ratio = kDefaultRhoRatio);

}  // namespace blockent
