#include "blockent/random_image.hpp"

#include <cmath>
#include <span>
#include <thread>
#include <vector>

#include "blockent/entropy.hpp"
#include "blockent/rng.hpp"

namespace blockent {
namespace {

/// Deterministic pairwise tree sum over a fixed index order. The result does
/// not depend on how the values were produced (serial or parallel).
double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

constexpr double kLog2E = 1.4426950408889634;

/// Entropy of one fresh random block, keyed by (seed, trial index).
double random_block_entropy(std::int64_t block_pixels, std::int64_t levels,
                            std::uint64_t seed, std::int64_t trial,
                            std::vector<std::int64_t>& counts) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(trial)}));
    counts.assign(static_cast<std::size_t>(levels), 0);
    for (std::int64_t i = 0; i < block_pixels; ++i)
        ++counts[rng.below(static_cast<std::uint64_t>(levels))];
    double h = 0.0;
    const double total = static_cast<double>(block_pixels);
    for (std::int64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        h -= p * std::log(p);
    }
    return h * kLog2E;
}

}  // namespace

ImageGrid random_image(int rows, int cols, int levels, std::uint64_t seed) {
    if (rows < 1 || cols < 1) raise("domain", "image dimensions must be positive");
    if (levels < 2) raise("domain", "image must have at least 2 intensity levels");
    ImageGrid img(rows, cols, levels);
    Rng rng(seed);
    for (auto& p : img.pixels)
        p = static_cast<int>(rng.below(static_cast<std::uint64_t>(levels)));
    return img;
}

RhoEstimate estimate_rho_ratio(std::int64_t block_pixels, std::int64_t levels,
                               std::int64_t trials, std::uint64_t seed,
                               int workers) {
    if (trials < 1000) raise("domain", "need at least 1000 trials");
    if (levels < 2) raise("domain", "need at least 2 intensity levels");
    const EntropyMoments m = entropy_moments(block_pixels, levels);
    if (!(m.sigma_h > 0.0))
        raise("degenerate-moments",
              "rho/sigma^3 undefined: block entropy has zero variance");

    // |H_i - mu|^3 per trial; trial i depends only on (seed, i) so any
    // worker partition produces the same vector.
    std::vector<double> cubed(static_cast<std::size_t>(trials));
    auto run_range = [&](std::int64_t begin, std::int64_t end) {
        std::vector<std::int64_t> counts;
        for (std::int64_t i = begin; i < end; ++i) {
            const double h =
                random_block_entropy(block_pixels, levels, seed, i, counts);
            const double d = std::abs(h - m.mu_h);
            cubed[static_cast<std::size_t>(i)] = d * d * d;
        }
    };
    if (workers <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min(trials, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    const double sigma3 = m.sigma_h * m.sigma_h * m.sigma_h;
    RhoEstimate est;
    est.trials = trials;
    est.ratio = pairwise_sum(cubed) / static_cast<double>(trials) / sigma3;

    // Bootstrap SE of the normalized mean, resampling trial indices.
    constexpr int kResamples = 200;
    Rng boot(derive_seed(seed, {0xB007u}));
    std::vector<double> means(kResamples);
    std::vector<double> resample(static_cast<std::size_t>(trials));
    for (int b = 0; b < kResamples; ++b) {
        for (auto& v : resample)
            v = cubed[boot.below(static_cast<std::uint64_t>(trials))];
        means[static_cast<std::size_t>(b)] =
            pairwise_sum(resample) / static_cast<double>(trials) / sigma3;
    }
    const double mean_of_means = pairwise_sum(means) / kResamples;
    double ss = 0.0;
    for (double v : means) ss += (v - mean_of_means) * (v - mean_of_means);
    est.std_error = std::sqrt(ss / (kResamples - 1));
    return est;
}

}  // namespace blockent
