#include "blockent/shuffle.hpp"

#include <numeric>
#include <vector>

#include "blockent/rng.hpp"

namespace blockent {
namespace {

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return perm;
}

void check_divisible(const ImageGrid& image, const BlockSpec& block) {
    if (block.rows < 1 || block.cols < 1)
        raise("domain", "shuffle block dimensions must be positive");
    if (image.rows % block.rows != 0 || image.cols % block.cols != 0)
        raise("shape", "shuffle block " + std::to_string(block.rows) + "x" +
                           std::to_string(block.cols) +
                           " does not divide the image dimensions");
}

ImageGrid apply(const ImageGrid& image, const ShuffleKey& key, bool inverse) {
    check_divisible(image, key.block);
    const int m = key.block.rows;
    const int n = key.block.cols;
    ImageGrid out(image.rows, image.cols, image.levels);

    for (int br = 0; br < image.rows / m; ++br) {
        for (int bc = 0; bc < image.cols / n; ++bc) {
            Rng rng(derive_seed(key.seed,
                                {static_cast<std::uint64_t>(key.mode),
                                 static_cast<std::uint64_t>(br),
                                 static_cast<std::uint64_t>(bc)}));
            const int r0 = br * m;
            const int c0 = bc * n;
            if (key.mode == ShuffleMode::PixelWise) {
                const std::vector<int> perm = random_permutation(m * n, rng);
                for (int pos = 0; pos < m * n; ++pos) {
                    const int src = perm[static_cast<std::size_t>(pos)];
                    const int dr = pos / n, dc = pos % n;
                    const int sr = src / n, sc = src % n;
                    if (!inverse)
                        out.at(r0 + dr, c0 + dc) = image.at(r0 + sr, c0 + sc);
                    else
                        out.at(r0 + sr, c0 + sc) = image.at(r0 + dr, c0 + dc);
                }
            } else {
                // Row permutation drawn first, then column permutation.
                const std::vector<int> pr = random_permutation(m, rng);
                const std::vector<int> pc = random_permutation(n, rng);
                for (int r = 0; r < m; ++r) {
                    for (int c = 0; c < n; ++c) {
                        const int sr = pr[static_cast<std::size_t>(r)];
                        const int sc = pc[static_cast<std::size_t>(c)];
                        if (!inverse)
                            out.at(r0 + r, c0 + c) = image.at(r0 + sr, c0 + sc);
                        else
                            out.at(r0 + sr, c0 + sc) = image.at(r0 + r, c0 + c);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

ImageGrid shuffle(const ImageGrid& image, const ShuffleKey& key) {
    return apply(image, key, /*inverse=*/false);
}

ImageGrid unshuffle(const ImageGrid& image, const ShuffleKey& key) {
    return apply(image, key, /*inverse=*/true);
}

}  // namespace blockent
