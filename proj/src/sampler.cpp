#include "blockent/sampler.hpp"

#include <numeric>
#include <string>

#include "blockent/rng.hpp"

namespace blockent {

BlockSample sample_blocks(int image_rows, int image_cols, BlockSpec spec, int k,
                          std::uint64_t seed) {
    if (spec.rows < 1 || spec.cols < 1)
        raise("domain", "block dimensions must be positive");
    if (k < 1) raise("domain", "sample count must be >= 1");
    const std::int64_t tiles_r = image_rows / spec.rows;
    const std::int64_t tiles_c = image_cols / spec.cols;
    const std::int64_t tiles = tiles_r * tiles_c;
    if (k > tiles)
        raise("insufficient-tiles",
              "requested " + std::to_string(k) + " blocks but the image only has " +
                  std::to_string(tiles) + " aligned " + std::to_string(spec.rows) +
                  "x" + std::to_string(spec.cols) + " tiles");

    // Partial Fisher-Yates over tile indices: first k entries are a uniform
    // draw without replacement.
    std::vector<std::int64_t> tile(static_cast<std::size_t>(tiles));
    std::iota(tile.begin(), tile.end(), std::int64_t{0});
    Rng rng(seed);
    BlockSample sample{{}, spec, seed};
    sample.positions.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const std::int64_t j =
            i + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(tiles - i)));
        std::swap(tile[static_cast<std::size_t>(i)], tile[static_cast<std::size_t>(j)]);
        const std::int64_t t = tile[static_cast<std::size_t>(i)];
        sample.positions.emplace_back(static_cast<int>(t / tiles_c) * spec.rows,
                                      static_cast<int>(t % tiles_c) * spec.cols);
    }
    return sample;
}

Histogram extract_block(const ImageGrid& image, std::pair<int, int> anchor,
                        BlockSpec spec) {
    const auto [r0, c0] = anchor;
    if (r0 < 0 || c0 < 0 || r0 + spec.rows > image.rows || c0 + spec.cols > image.cols)
        raise("bounds", "block at (" + std::to_string(r0) + "," + std::to_string(c0) +
                            ") does not fit inside the image");
    Histogram hist;
    hist.counts.assign(static_cast<std::size_t>(image.levels), 0);
    hist.total = spec.pixel_count();
    for (int r = r0; r < r0 + spec.rows; ++r) {
        const int* row = image.pixels.data() + static_cast<std::size_t>(r) * image.cols;
        for (int c = c0; c < c0 + spec.cols; ++c)
            ++hist.counts[static_cast<std::size_t>(row[c])];
    }
    return hist;
}

}  // namespace blockent
