#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "blockent/fips.hpp"
#include "blockent/random_image.hpp"
#include "blockent/rng.hpp"
#include "test_util.hpp"

using namespace blockent;
using testutil::error_code_of;

namespace {

BitSequence constant_bits(std::uint8_t value) {
    BitSequence seq;
    seq.bits.assign(kFipsBits, value);
    return seq;
}

BitSequence alternating_bits() {
    BitSequence seq;
    seq.bits.resize(kFipsBits);
    for (std::size_t i = 0; i < kFipsBits; ++i)
        seq.bits[i] = static_cast<std::uint8_t>(i & 1);
    return seq;
}

BitSequence random_bits(std::uint64_t seed) {
    BitSequence seq;
    seq.bits.resize(kFipsBits);
    Rng rng(seed);
    for (auto& b : seq.bits) b = static_cast<std::uint8_t>(rng.below(2));
    return seq;
}

}  // namespace

TEST_CASE("monobit: degenerate and balanced sequences") {
    const FipsThresholds thr = FipsThresholds::paper();
    const MonobitResult zero = monobit(constant_bits(0), thr);
    CHECK(zero.ones == 0);
    CHECK_FALSE(zero.pass);
    const MonobitResult alt = monobit(alternating_bits(), thr);
    CHECK(alt.ones == 10000);
    CHECK(alt.pass);
    // ones count complements the zero count by definition
    const BitSequence r = random_bits(5);
    const MonobitResult m = monobit(r, thr);
    std::int64_t zeros = 0;
    for (const auto b : r.bits) zeros += b == 0;
    CHECK(m.ones == static_cast<long long>(kFipsBits) - zeros);
}

TEST_CASE("monobit: length is enforced") {
    BitSequence seq;
    seq.bits.assign(100, 0);
    const FipsThresholds thr;
    CHECK(error_code_of([&] { monobit(seq, thr); }) == "size");
    CHECK(error_code_of([&] { poker(seq, thr); }) == "size");
    CHECK(error_code_of([&] { runs(seq, thr); }) == "size");
    CHECK(error_code_of([&] { long_run(seq); }) == "size");
}

TEST_CASE("poker: all-zero statistic is exactly 75000") {
    const PokerResult r = poker(constant_bits(0), FipsThresholds::paper());
    CHECK(r.x == 75000.0);
    CHECK_FALSE(r.pass);
}

TEST_CASE("poker: near-uniform nibble mix sits near the minimum") {
    // 5000 nibbles cycling through all 16 patterns: 8 patterns appear 313
    // times, 8 appear 312 times. X = 16/5000 * (8*313^2 + 8*312^2) - 5000.
    BitSequence seq;
    seq.bits.resize(kFipsBits);
    for (std::size_t nib = 0; nib < 5000; ++nib) {
        const int pattern = static_cast<int>(nib % 16);
        for (int b = 0; b < 4; ++b)
            seq.bits[nib * 4 + static_cast<std::size_t>(b)] =
                static_cast<std::uint8_t>((pattern >> (3 - b)) & 1);
    }
    const double expected =
        16.0 / 5000.0 * (8.0 * 313 * 313 + 8.0 * 312 * 312) - 5000.0;
    const PokerResult r = poker(seq, FipsThresholds::paper());
    CHECK(r.x == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.x == doctest::Approx(0.0128).epsilon(1e-9));
    CHECK_FALSE(r.pass);  // below the 2.16 lower bound: too uniform
    CHECK(r.x > 0.0);     // X = 0 needs f_i = 312.5, unreachable
}

TEST_CASE("runs: alternating sequence floods the length-1 bucket") {
    const RunsResult r = runs(alternating_bits(), FipsThresholds::paper());
    CHECK(r.zero_runs[0] == 10000);
    CHECK(r.one_runs[0] == 10000);
    for (int b = 1; b < 6; ++b) {
        CHECK(r.zero_runs[static_cast<std::size_t>(b)] == 0);
        CHECK(r.one_runs[static_cast<std::size_t>(b)] == 0);
    }
    CHECK_FALSE(r.pass);
}

TEST_CASE("runs: all-zero sequence is one giant run") {
    const RunsResult r = runs(constant_bits(0), FipsThresholds::paper());
    for (int b = 0; b < 5; ++b)
        CHECK(r.zero_runs[static_cast<std::size_t>(b)] == 0);
    CHECK(r.zero_runs[5] == 1);
    for (int b = 0; b < 6; ++b)
        CHECK(r.one_runs[static_cast<std::size_t>(b)] == 0);
    CHECK_FALSE(r.pass);
}

TEST_CASE("runs: exact tally of maximal runs reconstructs the bit count") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BitSequence seq = random_bits(seed);
        // independent walk: sum of (length x count) over maximal runs
        std::int64_t reconstructed = 0;
        std::size_t i = 0;
        while (i < kFipsBits) {
            std::size_t j = i + 1;
            while (j < kFipsBits && seq.bits[j] == seq.bits[i]) ++j;
            reconstructed += static_cast<std::int64_t>(j - i);
            i = j;
        }
        CHECK(reconstructed == static_cast<std::int64_t>(kFipsBits));

        // bucketed counts agree with an independent bucketing
        const RunsResult r = runs(seq, FipsThresholds::paper());
        std::array<long long, 6> zero{}, one{};
        i = 0;
        while (i < kFipsBits) {
            std::size_t j = i + 1;
            while (j < kFipsBits && seq.bits[j] == seq.bits[i]) ++j;
            const std::size_t bucket = std::min<std::size_t>(j - i, 6) - 1;
            (seq.bits[i] ? one : zero)[bucket] += 1;
            i = j;
        }
        CHECK(r.zero_runs == zero);
        CHECK(r.one_runs == one);
    }
}

TEST_CASE("long run: degenerate sequences and embedded runs") {
    CHECK(long_run(constant_bits(0)).count == 1);
    CHECK_FALSE(long_run(constant_bits(0)).pass);
    CHECK(long_run(alternating_bits()).count == 0);
    CHECK(long_run(alternating_bits()).pass);

    // a 25-long run stays below the default limit of 26
    BitSequence seq = random_bits(77);
    for (std::size_t i = 4000; i < 4025; ++i) seq.bits[i] = 1;
    seq.bits[3999] = 0;
    seq.bits[4025] = 0;
    CHECK(long_run(seq, 26).pass);
    CHECK_FALSE(long_run(seq, 25).pass);
}

TEST_CASE("presets differ only in the monobit interval") {
    const FipsThresholds paper = FipsThresholds::paper();
    const FipsThresholds official = FipsThresholds::fips140_2();
    CHECK(paper.monobit.hi == 10725);
    CHECK(official.monobit.hi == 10275);
    CHECK(paper.monobit.lo == official.monobit.lo);
    CHECK(paper.poker.lo == official.poker.lo);
    for (int b = 0; b < 6; ++b)
        CHECK(paper.runs[static_cast<std::size_t>(b)].lo ==
              official.runs[static_cast<std::size_t>(b)].lo);
}

TEST_CASE("seeded random sequences pass all four tests almost always") {
    const FipsThresholds thr = FipsThresholds::paper();
    int pass_all = 0, pass_monobit = 0, pass_poker = 0, pass_runs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const FipsReport rep = run_fips(random_bits(seed), thr);
        pass_all += rep.all_pass;
        pass_monobit += rep.monobit.pass;
        pass_poker += rep.poker.pass;
        pass_runs += rep.runs.pass;
    }
    CHECK(pass_monobit >= 99);
    CHECK(pass_poker >= 99);
    CHECK(pass_runs >= 95);
    CHECK(pass_all >= 95);
}

TEST_CASE("extract_bits: shape, determinism and content") {
    const ImageGrid img = random_image(256, 256, 2, 12);
    const BitSequence a = extract_bits(img, 100, 200, 3);
    CHECK(a.bits.size() == kFipsBits);
    const BitSequence b = extract_bits(img, 100, 200, 3);
    CHECK(a.bits == b.bits);

    ImageGrid ones(256, 256, 2);
    for (auto& p : ones.pixels) p = 1;
    const BitSequence c = extract_bits(ones, 100, 200, 9);
    CHECK(std::accumulate(c.bits.begin(), c.bits.end(), 0) ==
          static_cast<int>(kFipsBits));
}

TEST_CASE("extract_bits: error paths") {
    const ImageGrid gray = random_image(256, 256, 256, 1);
    CHECK(error_code_of([&] { extract_bits(gray, 100, 200, 0); }) == "level");
    const ImageGrid small = random_image(64, 64, 2, 1);
    CHECK(error_code_of([&] { extract_bits(small, 100, 200, 0); }) == "bounds");
    const ImageGrid binary = random_image(256, 256, 2, 1);
    CHECK(error_code_of([&] { extract_bits(binary, 100, 100, 0); }) == "size");
}
