#pragma once

#include <cstdint>

#include "blockent/image.hpp"

namespace blockent {

/// Image whose pixels are i.i.d. uniform over [0, levels-1], drawn row-major
/// from the seeded deterministic generator. Identical inputs give identical
/// pixels on every platform.
ImageGrid random_image(int rows, int cols, int levels, std::uint64_t seed);

struct RhoEstimate {
    double ratio = 0.0;      // mean(|H - mu_H|^3) / sigma_H^3
    double std_error = 0.0;  // bootstrap standard error of the ratio
    std::int64_t trials = 0;
};

/// Monte Carlo estimate of the normalized third absolute central moment of a
/// random block's entropy, rho/sigma^3, used in the Berry-Esseen Type-I
/// bound. mu_H and sigma_H come from the closed forms, not from the sample.
/// Trial i is keyed by (seed, i), so splitting trials across `workers`
/// threads never changes the estimate; the final mean uses a fixed pairwise
/// reduction over trial index order. Requires trials >= 1000 and a block with
/// sigma_H > 0 (Error("degenerate-moments") for single-pixel blocks).
RhoEstimate estimate_rho_ratio(std::int64_t block_pixels, std::int64_t levels,
                               std::int64_t trials, std::uint64_t seed,
                               int workers = 1);

}  // namespace blockent
