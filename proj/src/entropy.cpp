#include "blockent/entropy.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace blockent {
namespace {

constexpr double kLog2E = 1.4426950408889634;  // log2(e)

/// Kahan-compensated accumulator for long sums of small positive terms.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

/// table[i] = ln(i!) for i in [0, n].
std::vector<double> log_factorials(std::int64_t n) {
    std::vector<double> table(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i)
        table[static_cast<std::size_t>(i)] = std::lgamma(static_cast<double>(i) + 1.0);
    return table;
}

/// w(n) = (n/MN) * log2(MN/n), the entropy contribution of a level holding
/// n of MN pixels; w(0) = w(MN) = 0.
double level_term(std::int64_t n, std::int64_t mn) {
    if (n == 0 || n == mn) return 0.0;
    const double p = static_cast<double>(n) / static_cast<double>(mn);
    return -p * std::log(p) * kLog2E;
}

void check_block_params(std::int64_t block_pixels, std::int64_t levels) {
    if (block_pixels < 1) raise("domain", "block pixel count must be >= 1");
    if (levels < 1) raise("domain", "level count must be >= 1");
}

/// Shared binomial-weighted sum: sum_n f(w(n)) * Pr(count = n) where f is
/// either identity or square.
double binomial_weighted_sum(std::int64_t mn, std::int64_t levels, bool squared) {
    check_block_params(mn, levels);
    if (levels == 1) return 0.0;  // the single level always holds all pixels
    const auto lf = log_factorials(mn);
    const double log_levels = std::log(static_cast<double>(levels));
    const double log_levels_m1 = std::log(static_cast<double>(levels - 1));
    KahanSum acc;
    for (std::int64_t n = 1; n < mn; ++n) {
        const double w = level_term(n, mn);
        const double log_p = lf[static_cast<std::size_t>(mn)] -
                             lf[static_cast<std::size_t>(n)] -
                             lf[static_cast<std::size_t>(mn - n)] +
                             static_cast<double>(mn - n) * log_levels_m1 -
                             static_cast<double>(mn) * log_levels;
        acc.add((squared ? w * w : w) * std::exp(log_p));
    }
    return acc.sum;
}

}  // namespace

Histogram Histogram::from_counts(std::vector<std::int64_t> counts) {
    Histogram h;
    h.total = 0;
    for (std::int64_t c : counts) {
        if (c < 0) raise("domain", "histogram counts must be non-negative");
        h.total += c;
    }
    h.counts = std::move(counts);
    return h;
}

double block_entropy(const Histogram& hist) {
    if (hist.counts.empty()) raise("domain", "histogram must have at least one level");
    std::int64_t sum = 0;
    for (std::int64_t c : hist.counts) {
        if (c < 0) raise("domain", "histogram counts must be non-negative");
        sum += c;
    }
    if (sum != hist.total) raise("domain", "histogram counts do not sum to total");
    if (hist.total == 0) raise("empty-block", "cannot take the entropy of an empty block");

    const double total = static_cast<double>(hist.total);
    KahanSum acc;
    for (std::int64_t c : hist.counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        acc.add(-p * std::log(p));
    }
    return acc.sum * kLog2E;
}

double binomial_log_pmf(std::int64_t n, std::int64_t trials, std::int64_t levels) {
    if (trials < 1) raise("domain", "trials must be >= 1");
    if (levels < 1) raise("domain", "levels must be >= 1");
    if (n < 0 || n > trials) raise("domain", "count outside [0, trials]");
    const auto lf = log_factorials(trials);
    double log_p = lf[static_cast<std::size_t>(trials)] -
                   lf[static_cast<std::size_t>(n)] -
                   lf[static_cast<std::size_t>(trials - n)] -
                   static_cast<double>(trials) * std::log(static_cast<double>(levels));
    if (trials - n > 0) {
        if (levels == 1) return -std::numeric_limits<double>::infinity();
        log_p += static_cast<double>(trials - n) * std::log(static_cast<double>(levels - 1));
    }
    return log_p;
}

double level_entropy_mean(std::int64_t block_pixels, std::int64_t levels) {
    return binomial_weighted_sum(block_pixels, levels, /*squared=*/false);
}

double level_entropy_second_moment(std::int64_t block_pixels, std::int64_t levels) {
    return binomial_weighted_sum(block_pixels, levels, /*squared=*/true);
}

double level_entropy_cross_moment(std::int64_t block_pixels, std::int64_t levels) {
    check_block_params(block_pixels, levels);
    if (levels < 2) raise("domain", "cross moment needs at least 2 levels");
    const std::int64_t mn = block_pixels;
    const auto lf = log_factorials(mn);
    const double log_levels = std::log(static_cast<double>(levels));
    const double log_levels_m2 =
        levels > 2 ? std::log(static_cast<double>(levels - 2)) : 0.0;

    std::vector<double> w(static_cast<std::size_t>(mn) + 1);
    for (std::int64_t n = 0; n <= mn; ++n)
        w[static_cast<std::size_t>(n)] = level_term(n, mn);

    KahanSum acc;
    for (std::int64_t n1 = 1; n1 < mn; ++n1) {
        const double w1 = w[static_cast<std::size_t>(n1)];
        const double base = lf[static_cast<std::size_t>(mn)] -
                            lf[static_cast<std::size_t>(n1)] -
                            static_cast<double>(mn) * log_levels;
        // For levels == 2 only n1 + n2 == MN carries probability.
        const std::int64_t n2_begin = levels == 2 ? mn - n1 : 1;
        for (std::int64_t n2 = n2_begin; n2 <= mn - n1; ++n2) {
            const std::int64_t rem = mn - n1 - n2;
            double log_p = base - lf[static_cast<std::size_t>(n2)] -
                           lf[static_cast<std::size_t>(rem)];
            if (rem > 0) log_p += static_cast<double>(rem) * log_levels_m2;
            acc.add(w1 * w[static_cast<std::size_t>(n2)] * std::exp(log_p));
        }
    }
    return acc.sum;
}

double block_entropy_mean(std::int64_t block_pixels, std::int64_t levels) {
    return static_cast<double>(levels) * level_entropy_mean(block_pixels, levels);
}

double block_entropy_std(std::int64_t block_pixels, std::int64_t levels) {
    check_block_params(block_pixels, levels);
    if (levels == 1) return 0.0;
    const double l = static_cast<double>(levels);
    const double eh = level_entropy_mean(block_pixels, levels);
    const double eh2 = level_entropy_second_moment(block_pixels, levels);
    const double cross = level_entropy_cross_moment(block_pixels, levels);
    const double variance = l * eh2 + l * (l - 1.0) * cross - (l * eh) * (l * eh);
    if (variance < 0.0) {
        if (variance < -1e-12)
            raise("internal", "block entropy variance is significantly negative");
        return 0.0;
    }
    return std::sqrt(variance);
}

EntropyMoments entropy_moments(std::int64_t block_pixels, std::int64_t levels) {
    return EntropyMoments{block_entropy_mean(block_pixels, levels),
                          block_entropy_std(block_pixels, levels), block_pixels,
                          levels};
}

SampleMeanMoments sample_mean_moments(std::int64_t block_pixels,
                                      std::int64_t levels, std::int64_t k) {
    if (k < 1) raise("domain", "sample count must be >= 1");
    const EntropyMoments m = entropy_moments(block_pixels, levels);
    return SampleMeanMoments{m.mu_h, m.sigma_h / std::sqrt(static_cast<double>(k)), k};
}

namespace {

struct Enumerator {
    std::int64_t mn;
    std::int64_t levels;
    const std::vector<double>& lf;
    double log_levels_pow;  // MN * ln(L)
    std::vector<double> w;  // level_term per count
    KahanSum mean, second;

    void walk(std::int64_t level, std::int64_t remaining, double log_denominator,
              double entropy_so_far) {
        if (level == levels - 1) {
            const double log_p = lf[static_cast<std::size_t>(mn)] - log_denominator -
                                 lf[static_cast<std::size_t>(remaining)] -
                                 log_levels_pow;
            const double h =
                entropy_so_far + w[static_cast<std::size_t>(remaining)];
            const double p = std::exp(log_p);
            mean.add(p * h);
            second.add(p * h * h);
            return;
        }
        for (std::int64_t n = 0; n <= remaining; ++n) {
            walk(level + 1, remaining - n,
                 log_denominator + lf[static_cast<std::size_t>(n)],
                 entropy_so_far + w[static_cast<std::size_t>(n)]);
        }
    }
};

}  // namespace

EntropyMoments brute_force_moments(std::int64_t block_pixels, std::int64_t levels) {
    check_block_params(block_pixels, levels);
    // Guard on L^MN, the number of equally likely images.
    const double log10_images = static_cast<double>(block_pixels) *
                                std::log10(static_cast<double>(levels));
    if (log10_images > 7.0)
        raise("size", "enumeration refused: levels^block_pixels exceeds 1e7");

    const auto lf = log_factorials(block_pixels);
    std::vector<double> w(static_cast<std::size_t>(block_pixels) + 1);
    for (std::int64_t n = 0; n <= block_pixels; ++n)
        w[static_cast<std::size_t>(n)] = level_term(n, block_pixels);

    Enumerator e{block_pixels, levels, lf,
                 static_cast<double>(block_pixels) *
                     std::log(static_cast<double>(levels)),
                 std::move(w),
                 {},
                 {}};
    if (levels == 1) {
        // Single level: the only image is constant, H == 0.
        return EntropyMoments{0.0, 0.0, block_pixels, levels};
    }
    e.walk(0, block_pixels, 0.0, 0.0);
    const double mu = e.mean.sum;
    double variance = e.second.sum - mu * mu;
    if (variance < 0.0) variance = 0.0;
    return EntropyMoments{mu, std::sqrt(variance), block_pixels, levels};
}

}  // namespace blockent
