#pragma once

#include <cstdint>
#include <vector>

#include "blockent/error.hpp"

namespace blockent {

/// Per-level pixel counts of one image block. counts[l] is the number of
/// pixels at intensity level l; total is the block pixel count M*N.
/// Invariants: counts.size() >= 1, every count >= 0, sum(counts) == total.
struct Histogram {
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;

    static Histogram from_counts(std::vector<std::int64_t> counts);
};

/// Exact mean/std of the Shannon entropy of one block drawn from an
/// i.i.d.-uniform image, for a given block pixel count and level count.
struct EntropyMoments {
    double mu_h = 0.0;     // E[H], bits
    double sigma_h = 0.0;  // Std[H], bits
    std::int64_t block_pixels = 0;
    std::int64_t levels = 0;
};

/// Moments of the mean of k independent block entropies: mu is unchanged,
/// sigma shrinks by sqrt(k).
struct SampleMeanMoments {
    double mu = 0.0;
    double sigma = 0.0;
    std::int64_t k = 1;
};

/// Shannon entropy of a histogram in bits:
///   H = sum_l (counts[l]/total) * log2(total/counts[l]),
/// with empty levels contributing exactly zero. Result lies in
/// [0, log2(counts.size())]. Throws Error("empty-block") when total == 0 and
/// Error("domain") when the histogram violates its invariants.
double block_entropy(const Histogram& hist);

/// Natural-log probability that a fixed level holds exactly n of `trials`
/// pixels when each pixel is uniform over `levels` values:
///   ln[ C(trials, n) * (levels-1)^(trials-n) / levels^trials ].
/// Assembled from log-gamma so the result is finite and accurate for trials
/// in the thousands. Returns -infinity for zero-probability outcomes
/// (levels == 1, n < trials). Throws Error("domain") for n outside
/// [0, trials] or levels < 1.
double binomial_log_pmf(std::int64_t n, std::int64_t trials, std::int64_t levels);

/// E[h(P_l)] where h(p) = -p*log2(p) and P_l is one level's pixel fraction:
/// the single-level contribution to the expected block entropy. Summed over
/// the binomial law of the level count; the n=0 and n=block_pixels terms
/// vanish.
double level_entropy_mean(std::int64_t block_pixels, std::int64_t levels);

/// E[h(P_l)^2]: second moment of the single-level contribution.
double level_entropy_second_moment(std::int64_t block_pixels, std::int64_t levels);

/// E[h(P_l1) * h(P_l2)] for two distinct levels: trinomial double sum over
/// the joint counts (n1, n2) with n1 + n2 <= block_pixels. Requires
/// levels >= 2 (Error("domain") otherwise).
double level_entropy_cross_moment(std::int64_t block_pixels, std::int64_t levels);

/// E[H] = levels * E[h(P_l)]; value in [0, log2(levels)].
double block_entropy_mean(std::int64_t block_pixels, std::int64_t levels);

/// Std[H] = sqrt(L*E[h^2] + L(L-1)*E[h h] - L^2*E[h]^2). Round-off variance
/// in (-1e-12, 0) clamps to zero; anything more negative throws
/// Error("internal").
double block_entropy_std(std::int64_t block_pixels, std::int64_t levels);

/// Both closed-form moments in one call.
EntropyMoments entropy_moments(std::int64_t block_pixels, std::int64_t levels);

/// Moments of the k-sample mean: mu unchanged, sigma divided by sqrt(k).
SampleMeanMoments sample_mean_moments(std::int64_t block_pixels,
                                      std::int64_t levels, std::int64_t k);

/// Independent oracle for the closed forms: exact E[H] and Std[H] by full
/// enumeration of the multinomial count vectors (n_0, ..., n_{L-1}) with
/// weights MN! / (n_0! ... n_{L-1}!) / L^MN. Refuses with Error("size") when
/// levels^block_pixels exceeds 1e7.
EntropyMoments brute_force_moments(std::int64_t block_pixels, std::int64_t levels);

}  // namespace blockent
