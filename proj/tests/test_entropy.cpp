#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "blockent/entropy.hpp"
#include "blockent/rng.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace blockent;
using testutil::error_code_of;

namespace {

Histogram hist_of(std::vector<std::int64_t> counts) {
    return Histogram::from_counts(std::move(counts));
}

/// Entropy of a two-bin split, used by the grouping-identity oracle.
double two_bin_entropy(double a, double b) {
    const double total = a + b;
    double h = 0.0;
    if (a > 0) h -= a / total * std::log2(a / total);
    if (b > 0) h -= b / total * std::log2(b / total);
    return h;
}

}  // namespace

TEST_CASE("block entropy: constant and uniform blocks hit the bounds") {
    std::vector<std::int64_t> constant(256, 0);
    constant[7] = 256;
    CHECK(block_entropy(hist_of(constant)) == 0.0);

    std::vector<std::int64_t> uniform(256, 1);
    CHECK(block_entropy(hist_of(uniform)) == 8.0);
}

TEST_CASE("block entropy: hand-evaluated 2x2 binary block") {
    // -(1/4)log2(1/4) - (3/4)log2(3/4)
    CHECK(block_entropy(hist_of({1, 3})) == doctest::Approx(0.8112781245).epsilon(1e-9));
}

TEST_CASE("block entropy: error paths") {
    CHECK(error_code_of([] { block_entropy(hist_of({0, 0})); }) == "empty-block");
    CHECK(error_code_of([] {
              Histogram h;
              h.counts = {1, 2};
              h.total = 4;  // does not match
              block_entropy(h);
          }) == "domain");
    CHECK(error_code_of([] { block_entropy(Histogram{}); }) == "domain");
}

TEST_CASE("block entropy: bounds, zero/max conditions over random histograms") {
    Rng rng(2024);
    int uniform_cases = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        const int levels = 2 + static_cast<int>(rng.below(64));
        std::vector<std::int64_t> counts(static_cast<std::size_t>(levels), 0);
        if (iter % 5 == 0) {
            // exactly uniform
            const std::int64_t per = 1 + static_cast<std::int64_t>(rng.below(64));
            for (auto& c : counts) c = per;
            ++uniform_cases;
        } else if (iter % 5 == 1) {
            counts[rng.below(static_cast<std::uint64_t>(levels))] =
                1 + static_cast<std::int64_t>(rng.below(4096));
        } else {
            for (auto& c : counts) c = static_cast<std::int64_t>(rng.below(32));
            if (std::accumulate(counts.begin(), counts.end(), std::int64_t{0}) == 0)
                counts[0] = 1;
        }
        const Histogram h = hist_of(counts);
        const double e = block_entropy(h);
        const double bound = std::log2(static_cast<double>(levels));
        CHECK(e >= 0.0);
        CHECK(e <= bound + 1e-12);

        std::int64_t nonzero = 0;
        for (auto c : counts) nonzero += c > 0;
        if (nonzero == 1) CHECK(e == 0.0);
        bool all_equal = true;
        for (auto c : counts) all_equal = all_equal && c == counts[0];
        if (all_equal)
            CHECK(e == doctest::Approx(bound).epsilon(1e-12));
        else if (nonzero > 1)
            CHECK(e < bound - 1e-12);
    }
    CHECK(uniform_cases > 100);
}

TEST_CASE("block entropy: symmetry under count permutations") {
    Rng rng(77);
    for (int iter = 0; iter < 1000; ++iter) {
        const int levels = 2 + static_cast<int>(rng.below(16));
        std::vector<std::int64_t> counts(static_cast<std::size_t>(levels));
        for (auto& c : counts) c = static_cast<std::int64_t>(rng.below(64));
        if (std::accumulate(counts.begin(), counts.end(), std::int64_t{0}) == 0)
            counts[0] = 3;
        const double before = block_entropy(hist_of(counts));
        // random permutation of the counts
        for (std::size_t i = counts.size() - 1; i > 0; --i)
            std::swap(counts[i], counts[rng.below(i + 1)]);
        const double after = block_entropy(hist_of(counts));
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
}

TEST_CASE("block entropy: grouping identity for three bins") {
    Rng rng(31337);
    for (int iter = 0; iter < 1000; ++iter) {
        const double a = static_cast<double>(rng.below(200));
        const double b = static_cast<double>(rng.below(200));
        const double c = static_cast<double>(1 + rng.below(200));
        if (a + b == 0) continue;
        const double total = a + b + c;
        const double direct = block_entropy(hist_of(
            {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
             static_cast<std::int64_t>(c)}));
        const double grouped =
            two_bin_entropy(a + b, c) + (a + b) / total * two_bin_entropy(a, b);
        CHECK(direct == doctest::Approx(grouped).epsilon(1e-12));
    }
}

TEST_CASE("binomial log pmf: single-trial and all-success values") {
    CHECK(binomial_log_pmf(0, 1, 2) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
    CHECK(binomial_log_pmf(4, 4, 2) ==
          doctest::Approx(std::log(1.0 / 16.0)).epsilon(1e-14));
    CHECK(error_code_of([] { binomial_log_pmf(-1, 4, 2); }) == "domain");
    CHECK(error_code_of([] { binomial_log_pmf(5, 4, 2); }) == "domain");
    CHECK(error_code_of([] { binomial_log_pmf(0, 4, 0); }) == "domain");
}

TEST_CASE("binomial log pmf: normalization at table sizes") {
    for (const std::int64_t mn : {std::int64_t{4}, std::int64_t{256}, std::int64_t{1024}}) {
        for (const std::int64_t levels : {std::int64_t{2}, std::int64_t{256}}) {
            double sum = 0.0;
            for (std::int64_t n = 0; n <= mn; ++n)
                sum += std::exp(binomial_log_pmf(n, mn, levels));
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("binomial log pmf: degenerate single-level system") {
    CHECK(binomial_log_pmf(8, 8, 1) == 0.0);
    CHECK(std::isinf(binomial_log_pmf(3, 8, 1)));
}

TEST_CASE("level entropy mean: single pixel contributes nothing") {
    CHECK(level_entropy_mean(1, 2) == 0.0);
    CHECK(level_entropy_mean(1, 256) == 0.0);
    CHECK(level_entropy_second_moment(1, 7) == 0.0);
}

TEST_CASE("level entropy mean: exhaustive 16-image oracle at MN=4, L=2") {
    // Enumerate every 2x2 binary image directly and average h(P_0).
    double expect = 0.0;
    for (int img = 0; img < 16; ++img) {
        int zeros = 0;
        for (int bit = 0; bit < 4; ++bit) zeros += ((img >> bit) & 1) == 0;
        if (zeros > 0 && zeros < 4) {
            const double p = zeros / 4.0;
            expect += -p * std::log2(p) / 16.0;
        }
    }
    CHECK(level_entropy_mean(4, 2) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(2.0 * level_entropy_mean(4, 2) ==
          doctest::Approx(0.7806390622).epsilon(1e-9));
}

TEST_CASE("level entropy second moment: exhaustive 4-image oracle at MN=2, L=2") {
    double expect = 0.0;
    for (int img = 0; img < 4; ++img) {
        int zeros = 0;
        for (int bit = 0; bit < 2; ++bit) zeros += ((img >> bit) & 1) == 0;
        if (zeros > 0 && zeros < 2) {
            const double p = zeros / 2.0;
            const double h = -p * std::log2(p);
            expect += h * h / 4.0;
        }
    }
    CHECK(level_entropy_second_moment(2, 2) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("level entropy cross moment: exhaustive 27-image oracle at MN=3, L=3") {
    double expect = 0.0;
    for (int img = 0; img < 27; ++img) {
        int counts[3] = {0, 0, 0};
        int v = img;
        for (int pix = 0; pix < 3; ++pix) {
            ++counts[v % 3];
            v /= 3;
        }
        auto h = [](int n) {
            if (n == 0 || n == 3) return 0.0;
            const double p = n / 3.0;
            return -p * std::log2(p);
        };
        expect += h(counts[0]) * h(counts[1]) / 27.0;
    }
    CHECK(level_entropy_cross_moment(3, 3) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("level entropy cross moment: edge cases") {
    CHECK(level_entropy_cross_moment(1, 2) == 0.0);
    CHECK(error_code_of([] { level_entropy_cross_moment(4, 1); }) == "domain");
}

TEST_CASE("closed-form moments match the high-precision reference grid") {
    for (const auto& ref : refvals::kMoments) {
        const EntropyMoments m = entropy_moments(ref.block_pixels, ref.levels);
        CAPTURE(ref.block_pixels);
        CAPTURE(ref.levels);
        CHECK(m.mu_h == doctest::Approx(ref.mu_hp).epsilon(1e-11));
        CHECK(m.sigma_h == doctest::Approx(ref.sigma_hp).epsilon(1e-8));
        CHECK(m.mu_h >= 0.0);
        CHECK(m.mu_h <= std::log2(static_cast<double>(ref.levels)) + 1e-12);
    }
}

TEST_CASE("mean block entropy grows with block size") {
    for (const std::int64_t levels : {std::int64_t{2}, std::int64_t{256}}) {
        double prev = -1.0;
        for (const std::int64_t mn :
             {std::int64_t{4}, std::int64_t{16}, std::int64_t{64}, std::int64_t{256},
              std::int64_t{1024}}) {
            const double mu = block_entropy_mean(mn, levels);
            CHECK(mu > prev);
            prev = mu;
        }
    }
}

TEST_CASE("sample mean moments: scaling in k") {
    const EntropyMoments m = entropy_moments(256, 256);
    const SampleMeanMoments k1 = sample_mean_moments(256, 256, 1);
    CHECK(k1.mu == m.mu_h);
    CHECK(k1.sigma == m.sigma_h);
    const SampleMeanMoments k4 = sample_mean_moments(256, 256, 4);
    CHECK(k4.sigma == doctest::Approx(m.sigma_h / 2.0).epsilon(1e-15));
    const SampleMeanMoments k100 = sample_mean_moments(256, 256, 100);
    CHECK(k100.mu == doctest::Approx(7.1749663525).epsilon(1e-9));
    CHECK(k100.sigma == doctest::Approx(0.00524379986).epsilon(1e-8));
    CHECK(error_code_of([] { sample_mean_moments(256, 256, 0); }) == "domain");
}

TEST_CASE("brute force enumeration: reference values and guard") {
    const EntropyMoments m = brute_force_moments(4, 2);
    CHECK(m.mu_h == doctest::Approx(0.7806390622).epsilon(1e-9));
    CHECK(m.sigma_h == doctest::Approx(0.3077153752).epsilon(1e-9));

    const EntropyMoments single = brute_force_moments(1, 17);
    CHECK(single.mu_h == 0.0);
    CHECK(single.sigma_h == 0.0);

    CHECK(error_code_of([] { brute_force_moments(50, 2); }) == "size");
}

TEST_CASE("closed forms agree with enumeration for every small geometry") {
    for (const std::int64_t levels : {std::int64_t{2}, std::int64_t{3}}) {
        for (std::int64_t mn = 1; mn <= 9; ++mn) {
            const EntropyMoments closed = entropy_moments(mn, levels);
            const EntropyMoments exact = brute_force_moments(mn, levels);
            CAPTURE(mn);
            CAPTURE(levels);
            CHECK(std::abs(closed.mu_h - exact.mu_h) < 1e-10);
            CHECK(std::abs(closed.sigma_h - exact.sigma_h) < 1e-10);
        }
    }
    // A gray-scale spot check away from the binary/ternary family.
    const EntropyMoments closed = entropy_moments(2, 256);
    const EntropyMoments exact = brute_force_moments(2, 256);
    CHECK(std::abs(closed.mu_h - exact.mu_h) < 1e-10);
    CHECK(std::abs(closed.sigma_h - exact.sigma_h) < 1e-10);
}
