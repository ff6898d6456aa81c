#pragma once

#include <cstdint>
#include <vector>

#include "blockent/error.hpp"

namespace blockent {

/// Rectangular raster of intensity levels. Every pixel lies in [0, levels-1];
/// storage is row-major. Immutable by convention once built (shuffle and io
/// return fresh grids).
struct ImageGrid {
    int rows = 0;
    int cols = 0;
    int levels = 0;
    std::vector<int> pixels;

    ImageGrid() = default;

    ImageGrid(int rows_, int cols_, int levels_)
        : rows(rows_), cols(cols_), levels(levels_) {
        if (rows < 1 || cols < 1) raise("domain", "image dimensions must be positive");
        if (levels < 2) raise("domain", "image must have at least 2 intensity levels");
        pixels.assign(static_cast<std::size_t>(rows) * cols, 0);
    }

    int at(int r, int c) const {
        return pixels[static_cast<std::size_t>(r) * cols + c];
    }
    int& at(int r, int c) {
        return pixels[static_cast<std::size_t>(r) * cols + c];
    }

    std::size_t pixel_count() const { return pixels.size(); }

    /// Check the type invariants; throws Error("domain") on violation.
    void validate() const {
        if (rows < 1 || cols < 1 || levels < 2)
            raise("domain", "invalid image geometry");
        if (pixels.size() != static_cast<std::size_t>(rows) * cols)
            raise("domain", "pixel buffer does not match image dimensions");
        for (int v : pixels)
            if (v < 0 || v >= levels)
                raise("domain", "pixel value outside [0, levels-1]");
    }
};

}  // namespace blockent
