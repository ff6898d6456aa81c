#include "blockent/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace blockent {
namespace {

[[noreturn]] void parse_error(const std::string& path, std::int64_t offset,
                              const std::string& what) {
    raise("parse", path + ": " + what + " (byte offset " +
                       std::to_string(offset) + ")");
}

struct PgmReader {
    std::ifstream in;
    std::string path;

    explicit PgmReader(const std::string& p)
        : in(p, std::ios::binary), path(p) {
        if (!in) raise("io", "cannot open " + p);
    }

    std::int64_t offset() { return static_cast<std::int64_t>(in.tellg()); }

    // Skip whitespace and '#' comment lines between header tokens.
    void skip_separators() {
        for (;;) {
            const int c = in.peek();
            if (c == '#') {
                std::string line;
                std::getline(in, line);
            } else if (c != EOF && std::isspace(c)) {
                in.get();
            } else {
                return;
            }
        }
    }

    int read_header_int(const char* what) {
        skip_separators();
        const std::int64_t at = offset();
        int value = 0;
        if (!(in >> value) || value < 0)
            parse_error(path, at, std::string("expected ") + what);
        return value;
    }
};

ImageGrid load_pgm(const std::string& path) {
    PgmReader r(path);
    char magic[2] = {0, 0};
    r.in.read(magic, 2);
    if (!r.in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5'))
        parse_error(path, 0, "not a P2/P5 PGM file");
    const bool binary = magic[1] == '5';

    const int width = r.read_header_int("width");
    const int height = r.read_header_int("height");
    const int maxval = r.read_header_int("maxval");
    if (width < 1 || height < 1) parse_error(path, r.offset(), "empty image");
    if (maxval < 1 || maxval > 255)
        raise("format", path + ": unsupported maxval " + std::to_string(maxval) +
                            " (only 8-bit images are supported)");

    ImageGrid img(height, width, maxval + 1);
    if (binary) {
        // Exactly one whitespace byte separates the header from raster data.
        r.in.get();
        const std::int64_t data_start = r.offset();
        std::vector<unsigned char> raw(img.pixel_count());
        r.in.read(reinterpret_cast<char*>(raw.data()),
                  static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(r.in.gcount()) != raw.size())
            parse_error(path, data_start + r.in.gcount(), "truncated raster data");
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] > maxval)
                parse_error(path, data_start + static_cast<std::int64_t>(i),
                            "pixel value exceeds declared maxval");
            img.pixels[i] = raw[i];
        }
    } else {
        for (std::size_t i = 0; i < img.pixel_count(); ++i) {
            r.skip_separators();
            const std::int64_t at = r.offset();
            int v = 0;
            if (!(r.in >> v)) parse_error(path, at, "truncated raster data");
            if (v < 0 || v > maxval)
                parse_error(path, at, "pixel value exceeds declared maxval");
            img.pixels[i] = v;
        }
    }
    return img;
}

struct PngCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FileHandle = std::unique_ptr<std::FILE, PngCloser>;

ImageGrid load_png(const std::string& path, std::optional<Channel> channel) {
    FileHandle fp(std::fopen(path.c_str(), "rb"));
    if (!fp) raise("io", "cannot open " + path);

    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        raise("internal", "libpng initialization failed");
    }
    std::vector<png_bytep> row_ptrs;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        raise("parse", path + ": corrupt PNG stream");
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_byte depth = png_get_bit_depth(png, info);
    if (depth == 16)
        raise("format", path + ": 16-bit PNG images are not supported");
    const png_byte color = png_get_color_type(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const png_byte channels = png_get_channels(png, info);

    std::vector<unsigned char> data(static_cast<std::size_t>(width) * height * channels);
    row_ptrs.resize(height);
    for (png_uint_32 r = 0; r < height; ++r)
        row_ptrs[r] = data.data() + static_cast<std::size_t>(r) * width * channels;
    png_read_image(png, row_ptrs.data());
    png_destroy_read_struct(&png, &info, nullptr);

    ImageGrid img(static_cast<int>(height), static_cast<int>(width), 256);
    if (channels == 1) {
        for (std::size_t i = 0; i < img.pixel_count(); ++i) img.pixels[i] = data[i];
    } else if (channels == 3) {
        if (!channel)
            raise("usage",
                  path + ": color image; pick a channel (R, G, B or Luma)");
        for (std::size_t i = 0; i < img.pixel_count(); ++i) {
            const int r = data[3 * i], g = data[3 * i + 1], b = data[3 * i + 2];
            switch (*channel) {
                case Channel::R: img.pixels[i] = r; break;
                case Channel::G: img.pixels[i] = g; break;
                case Channel::B: img.pixels[i] = b; break;
                case Channel::Luma:
                    img.pixels[i] = (299 * r + 587 * g + 114 * b + 500) / 1000;
                    break;
            }
        }
    } else {
        raise("format", path + ": unsupported PNG channel layout");
    }
    return img;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void apply_levels_override(ImageGrid& img, int levels, const std::string& path) {
    if (levels < 2) raise("usage", "levels override must be >= 2");
    int max_pixel = 0;
    for (int v : img.pixels) max_pixel = std::max(max_pixel, v);
    if (levels == 2 && max_pixel > 1) {
        // Binary images on disk are usually {0, 255}; map down to {0, 1}.
        for (int v : img.pixels)
            if (v != 0 && v != 255)
                raise("format", path + ": value " + std::to_string(v) +
                                    " is neither 0 nor 255; cannot map to binary");
        for (int& v : img.pixels) v = v == 0 ? 0 : 1;
    } else if (max_pixel >= levels) {
        raise("format", path + ": pixel value " + std::to_string(max_pixel) +
                            " does not fit in " + std::to_string(levels) + " levels");
    }
    img.levels = levels;
}

}  // namespace

ImageGrid load_image(const std::string& path, std::optional<int> levels_override,
                     std::optional<Channel> channel) {
    ImageGrid img;
    if (has_suffix(path, ".png") || has_suffix(path, ".PNG")) {
        img = load_png(path, channel);
    } else {
        img = load_pgm(path);
    }
    if (levels_override) apply_levels_override(img, *levels_override, path);
    return img;
}

void save_image(const ImageGrid& image, const std::string& path,
                ImageFormat format) {
    image.validate();
    if (image.levels > 256)
        raise("format", "cannot save images with more than 256 levels");

    // Binary images serialize as {0, 255} so viewers show them; everything
    // else writes raw values.
    const bool binary_levels = image.levels == 2;
    auto byte_of = [&](int v) -> unsigned char {
        return binary_levels ? (v ? 255 : 0) : static_cast<unsigned char>(v);
    };
    const int maxval = binary_levels ? 255 : image.levels - 1;

    if (format == ImageFormat::Png) {
        if (!binary_levels && image.levels != 256)
            raise("format", "PNG output supports only 2-level or 256-level images");
        FileHandle fp(std::fopen(path.c_str(), "wb"));
        if (!fp) raise("io", "cannot write " + path);
        png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                                  nullptr, nullptr);
        png_infop info = png ? png_create_info_struct(png) : nullptr;
        if (!png || !info) {
            png_destroy_write_struct(&png, &info);
            raise("internal", "libpng initialization failed");
        }
        std::vector<unsigned char> bytes(image.pixel_count());
        std::vector<png_bytep> row_ptrs(static_cast<std::size_t>(image.rows));
        if (setjmp(png_jmpbuf(png))) {
            png_destroy_write_struct(&png, &info);
            raise("io", "PNG write failed for " + path);
        }
        png_init_io(png, fp.get());
        png_set_IHDR(png, info, static_cast<png_uint_32>(image.cols),
                     static_cast<png_uint_32>(image.rows), 8,
                     PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                     PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
        for (std::size_t i = 0; i < bytes.size(); ++i)
            bytes[i] = byte_of(image.pixels[i]);
        for (int r = 0; r < image.rows; ++r)
            row_ptrs[static_cast<std::size_t>(r)] =
                bytes.data() + static_cast<std::size_t>(r) * image.cols;
        png_write_info(png, info);
        png_write_image(png, row_ptrs.data());
        png_write_end(png, nullptr);
        png_destroy_write_struct(&png, &info);
        return;
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) raise("io", "cannot write " + path);
    if (format == ImageFormat::PgmAscii) {
        out << "P2\n" << image.cols << ' ' << image.rows << '\n' << maxval << '\n';
        for (int r = 0; r < image.rows; ++r) {
            for (int c = 0; c < image.cols; ++c)
                out << static_cast<int>(byte_of(image.at(r, c)))
                    << (c + 1 == image.cols ? '\n' : ' ');
        }
    } else {
        out << "P5\n" << image.cols << ' ' << image.rows << '\n' << maxval << '\n';
        std::vector<unsigned char> bytes(image.pixel_count());
        for (std::size_t i = 0; i < bytes.size(); ++i)
            bytes[i] = byte_of(image.pixels[i]);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    }
    if (!out) raise("io", "short write to " + path);
}

ImageFormat format_from_extension(const std::string& path) {
    if (has_suffix(path, ".png") || has_suffix(path, ".PNG"))
        return ImageFormat::Png;
    if (has_suffix(path, ".pgm") || has_suffix(path, ".PGM"))
        return ImageFormat::PgmBinary;
    raise("usage", "cannot infer image format from '" + path +
                       "' (expected .pgm or .png)");
}

}  // namespace blockent
