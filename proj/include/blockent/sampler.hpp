#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blockent/entropy.hpp"
#include "blockent/image.hpp"

namespace blockent {

/// Block dimensions (rows x cols).
struct BlockSpec {
    int rows = 16;
    int cols = 16;

    std::int64_t pixel_count() const {
        return static_cast<std::int64_t>(rows) * cols;
    }
};

/// K non-overlapping block anchors drawn from an image, plus the inputs that
/// produced them. Anchors are top-left (row, col) pairs in draw order.
struct BlockSample {
    std::vector<std::pair<int, int>> positions;
    BlockSpec spec;
    std::uint64_t seed = 0;
};

/// Draw k blocks uniformly without replacement from the aligned tile grid:
/// tile (i, j) is anchored at (i*rows, j*cols) for i < floor(image_rows/rows),
/// j < floor(image_cols/cols). Remainder strips beyond the last full tile are
/// never sampled, so every block is full-size and non-overlap holds by
/// construction. Same (dims, spec, k, seed) always yields the same anchors.
/// Throws Error("insufficient-tiles") when k exceeds the tile count.
BlockSample sample_blocks(int image_rows, int image_cols, BlockSpec spec, int k,
                          std::uint64_t seed);

/// Histogram over the image's level range of the spec-sized block at
/// `anchor`. Throws Error("bounds") if the block does not fit.
Histogram extract_block(const ImageGrid& image, std::pair<int, int> anchor,
                        BlockSpec spec);

}  // namespace blockent
