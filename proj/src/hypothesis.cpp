#include "blockent/hypothesis.hpp"

#include <algorithm>
#include <cmath>

#include "blockent/normal.hpp"

namespace blockent {

double critical_value(const SampleMeanMoments& moments, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        raise("domain", "significance level must lie in (0, 1)");
    if (moments.sigma < 0.0) raise("domain", "negative sigma");
    return moments.mu - inv_norm_cdf(1.0 - alpha) * moments.sigma;
}

double z_statistic(double h_bar, const SampleMeanMoments& moments) {
    if (!(moments.sigma > 0.0))
        raise("degenerate-moments", "z statistic undefined for sigma == 0");
    return (h_bar - moments.mu) / moments.sigma;
}

Decision decide(double h_bar, double h_c) {
    return h_bar < h_c ? Decision::NotIdeallyEncrypted
                       : Decision::IdeallyEncrypted;
}

double type1_upper_bound(std::int64_t k, double alpha, double rho_ratio) {
    if (k < 1) raise("domain", "sample count must be >= 1");
    if (!(rho_ratio > 0.0)) raise("domain", "rho ratio must be positive");
    return kBerryEsseenC * rho_ratio / std::sqrt(static_cast<double>(k)) + alpha;
}

TestReport run_test(const ImageGrid& image, const TestConfig& config,
                    double rho_ratio) {
    if (image.levels != config.levels)
        raise("config", "image has " + std::to_string(image.levels) +
                            " levels but the test expects " +
                            std::to_string(config.levels));
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        raise("config", "significance level must lie in (0, 1)");

    BlockSample sample = sample_blocks(image.rows, image.cols, config.spec,
                                       config.k, config.seed);
    std::sort(sample.positions.begin(), sample.positions.end());

    TestReport report;
    report.config = config;
    report.positions = sample.positions;
    report.block_entropies.reserve(sample.positions.size());
    double sum = 0.0, carry = 0.0;  // Kahan, fixed ascending-anchor order
    for (const auto& anchor : sample.positions) {
        const double h = block_entropy(extract_block(image, anchor, config.spec));
        report.block_entropies.push_back(h);
        const double y = h - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    report.h_bar = sum / static_cast<double>(config.k);

    const SampleMeanMoments moments =
        sample_mean_moments(config.spec.pixel_count(), config.levels, config.k);
    report.z = z_statistic(report.h_bar, moments);
    report.h_c = critical_value(moments, config.alpha);
    report.decision = decide(report.h_bar, report.h_c);
    report.gamma_bound = type1_upper_bound(config.k, config.alpha, rho_ratio);
    return report;
}

}  // namespace blockent
