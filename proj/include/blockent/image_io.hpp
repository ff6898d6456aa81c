#pragma once

#include <optional>
#include <string>

#include "blockent/image.hpp"

namespace blockent {

enum class ImageFormat { PgmAscii, PgmBinary, Png };

enum class Channel { R, G, B, Luma };

/// Load a PGM (P2/P5, maxval <= 255) or 8-bit PNG image.
///
/// Level mapping: a grayscale file with maxval v decodes to levels = v + 1
/// (so 8-bit gray gives L = 256). levels_override replaces that; the special
/// case override == 2 on a {0, 255}-valued file maps 255 -> 1 so binary
/// images always carry values {0, 1} internally. Color PNGs require an
/// explicit channel selection (Error("usage") otherwise); Luma uses the
/// integer-rounded BT.601 weights (299 r + 587 g + 114 b + 500) / 1000.
///
/// Errors: "format" for unsupported bit depths, "parse" (with byte offset)
/// for corrupt PGM data, "io" for unreadable files.
ImageGrid load_image(const std::string& path,
                     std::optional<int> levels_override = std::nullopt,
                     std::optional<Channel> channel = std::nullopt);

/// Save losslessly. Binary (L = 2) images are written as {0, 255} so they
/// stay viewable; reload them with levels_override = 2. Other level counts
/// write raw values with maxval = L - 1 (PGM only). PNG output supports
/// L = 2 and L = 256. L > 256 is rejected ("format").
void save_image(const ImageGrid& image, const std::string& path,
                ImageFormat format);

/// Pick the format implied by a file extension (.pgm -> binary PGM,
/// .png -> PNG); Error("usage") for anything else.
ImageFormat format_from_extension(const std::string& path);

}  // namespace blockent
