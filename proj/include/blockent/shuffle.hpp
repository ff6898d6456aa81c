#pragma once

#include <cstdint>

#include "blockent/image.hpp"
#include "blockent/sampler.hpp"

namespace blockent {

enum class ShuffleMode { PixelWise, RowColumnWise };

/// Permutation-cipher key. The image is partitioned into aligned blocks of
/// `block` size and each block is scrambled independently: PixelWise applies
/// one uniform permutation of all block positions, RowColumnWise a row
/// permutation followed by a column permutation. Per-block sub-seeds derive
/// from (seed, mode, block row, block col), so evaluation order is
/// irrelevant.
struct ShuffleKey {
    std::uint64_t seed = 0;
    ShuffleMode mode = ShuffleMode::PixelWise;
    BlockSpec block{16, 16};
};

/// Scramble pixel positions; the multiset of values (global and per-block
/// histogram) is unchanged. Throws Error("shape") unless the block dims
/// divide the image dims.
ImageGrid shuffle(const ImageGrid& image, const ShuffleKey& key);

/// Exact inverse: unshuffle(shuffle(img, key), key) == img.
ImageGrid unshuffle(const ImageGrid& image, const ShuffleKey& key);

}  // namespace blockent
