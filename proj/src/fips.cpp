#include "blockent/fips.hpp"

#include <algorithm>

#include "blockent/rng.hpp"

namespace blockent {
namespace {

void check_length(const BitSequence& seq) {
    if (seq.bits.size() != kFipsBits)
        raise("size", "the bit tests require exactly 20000 bits, got " +
                          std::to_string(seq.bits.size()));
    for (std::uint8_t b : seq.bits)
        if (b > 1) raise("domain", "bit sequence contains a non-binary value");
}

}  // namespace

MonobitResult monobit(const BitSequence& seq, const FipsThresholds& thr) {
    check_length(seq);
    long long ones = 0;
    for (std::uint8_t b : seq.bits) ones += b;
    return {ones, thr.monobit.contains(static_cast<double>(ones))};
}

PokerResult poker(const BitSequence& seq, const FipsThresholds& thr) {
    check_length(seq);
    std::array<long long, 16> freq{};
    for (std::size_t i = 0; i < kFipsBits; i += 4) {
        const int nibble = (seq.bits[i] << 3) | (seq.bits[i + 1] << 2) |
                           (seq.bits[i + 2] << 1) | seq.bits[i + 3];
        ++freq[static_cast<std::size_t>(nibble)];
    }
    long long sum_sq = 0;
    for (long long f : freq) sum_sq += f * f;
    const double x = 16.0 / 5000.0 * static_cast<double>(sum_sq) - 5000.0;
    return {x, thr.poker.contains(x)};
}

RunsResult runs(const BitSequence& seq, const FipsThresholds& thr) {
    check_length(seq);
    RunsResult result;
    std::size_t i = 0;
    while (i < kFipsBits) {
        const std::uint8_t bit = seq.bits[i];
        std::size_t j = i + 1;
        while (j < kFipsBits && seq.bits[j] == bit) ++j;
        const std::size_t bucket = std::min<std::size_t>(j - i, 6) - 1;
        (bit ? result.one_runs : result.zero_runs)[bucket] += 1;
        i = j;
    }
    result.pass = true;
    for (std::size_t b = 0; b < 6; ++b) {
        if (!thr.runs[b].contains(static_cast<double>(result.zero_runs[b])) ||
            !thr.runs[b].contains(static_cast<double>(result.one_runs[b])))
            result.pass = false;
    }
    return result;
}

LongRunResult long_run(const BitSequence& seq, long long limit) {
    check_length(seq);
    if (limit < 1) raise("domain", "long-run limit must be >= 1");
    long long count = 0;
    std::size_t i = 0;
    while (i < kFipsBits) {
        const std::uint8_t bit = seq.bits[i];
        std::size_t j = i + 1;
        while (j < kFipsBits && seq.bits[j] == bit) ++j;
        if (static_cast<long long>(j - i) >= limit) ++count;
        i = j;
    }
    return {count, count == 0};
}

FipsReport run_fips(const BitSequence& seq, const FipsThresholds& thr) {
    FipsReport report;
    report.monobit = monobit(seq, thr);
    report.poker = poker(seq, thr);
    report.runs = runs(seq, thr);
    report.long_run = long_run(seq, thr.long_run_limit);
    report.all_pass = report.monobit.pass && report.poker.pass &&
                      report.runs.pass && report.long_run.pass;
    return report;
}

BitSequence extract_bits(const ImageGrid& image, int roi_rows, int roi_cols,
                         std::uint64_t seed) {
    if (image.levels != 2)
        raise("level", "bit extraction requires a binary (2-level) image");
    if (roi_rows < 1 || roi_cols < 1 ||
        static_cast<std::int64_t>(roi_rows) * roi_cols !=
            static_cast<std::int64_t>(kFipsBits))
        raise("size", "region of interest must cover exactly 20000 pixels");
    if (roi_rows > image.rows || roi_cols > image.cols)
        raise("bounds", "region of interest does not fit inside the image");

    Rng rng(seed);
    const int r0 = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(image.rows - roi_rows + 1)));
    const int c0 = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(image.cols - roi_cols + 1)));

    BitSequence seq;
    seq.bits.reserve(kFipsBits);
    for (int r = r0; r < r0 + roi_rows; ++r)
        for (int c = c0; c < c0 + roi_cols; ++c)
            seq.bits.push_back(static_cast<std::uint8_t>(image.at(r, c)));
    seq.source = "roi " + std::to_string(roi_rows) + "x" + std::to_string(roi_cols) +
                 " at (" + std::to_string(r0) + "," + std::to_string(c0) + ")";
    return seq;
}

}  // namespace blockent
