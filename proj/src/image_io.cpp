#include "entrex/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

namespace entrex {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw IoError(path + ": " + reason);
}

// ---- PPM (binary P6, 8-bit) ----

int ppm_token(std::istream& in) {
    // Skips whitespace and '#' comments, returns a non-negative integer.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) return -1;
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 30) return -1;
        c = in.get();
    }
    if (c != EOF) in.unget();
    return value;
}

ImageRgb8 load_ppm(std::istream& in, const std::string& path) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '6') fail(path, "not a binary PPM (P6) file");

    const int width = ppm_token(in);
    const int height = ppm_token(in);
    const int maxval = ppm_token(in);
    if (width < 1 || height < 1 || maxval < 1) fail(path, "malformed PPM header");
    if (maxval > 255) fail(path, "unsupported depth (maxval > 255)");
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) fail(path, "malformed PPM header");

    ImageRgb8 img(width, height);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.data.size())) {
        fail(path, "truncated PPM pixel data");
    }
    return img;
}

void save_ppm(const ImageRgb8& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
    if (!out) fail(path, "write failed");
}

// ---- PNG via libpng ----

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

ImageRgb8 load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "libpng initialization failed");
    }

    // Everything with a destructor is constructed before setjmp; libpng's
    // longjmp must not skip C++ object initialization.
    std::string error;
    ImageRgb8 img;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, error.empty() ? "corrupt or truncated PNG" : error);
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_byte depth = png_get_bit_depth(png, info);
    if (depth == 16) {
        error = "unsupported depth (16-bit PNG)";
        longjmp(png_jmpbuf(png), 1);
    }

    // Normalize every layout to 8-bit RGB: expand palettes and sub-byte
    // greys, drop alpha, widen greyscale.
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    if (width < 1 || height < 1 || png_get_channels(png, info) != 3 ||
        png_get_bit_depth(png, info) != 8) {
        error = "unsupported PNG layout";
        longjmp(png_jmpbuf(png), 1);
    }

    img = ImageRgb8(static_cast<int>(width), static_cast<int>(height));
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = img.data.data() + static_cast<std::size_t>(y) * width * 3;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void save_png(const ImageRgb8& image, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        fail(path, "libpng initialization failed");
    }
    std::vector<png_const_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "PNG write failed");
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
                 static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    rows.resize(image.height);
    for (int y = 0; y < image.height; ++y) {
        rows[y] = image.data.data() + static_cast<std::size_t>(y) * image.width * 3;
    }
    png_write_rows(png, const_cast<png_bytepp>(rows.data()),
                   static_cast<png_uint_32>(rows.size()));
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
}

bool has_suffix(const std::string& s, const char* suffix) {
    const std::size_t n = std::strlen(suffix);
    if (s.size() < n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::tolower(static_cast<unsigned char>(s[s.size() - n + i])) != suffix[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

ImageRgb8 load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    unsigned char magic[8] = {};
    in.read(reinterpret_cast<char*>(magic), sizeof(magic));
    const std::streamsize got = in.gcount();

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        in.close();
        return load_png(path);
    }
    if (got >= 2 && magic[0] == 'P' && magic[1] == '6') {
        in.clear();
        in.seekg(0);
        return load_ppm(in, path);
    }
    fail(path, "unsupported format (expected PNG or binary PPM)");
}

void save_image(const ImageRgb8& image, const std::string& path) {
    if (!image.valid()) {
        throw std::invalid_argument("save_image: image is empty or inconsistent");
    }
    if (has_suffix(path, ".png")) {
        save_png(image, path);
    } else if (has_suffix(path, ".ppm")) {
        save_ppm(image, path);
    } else {
        fail(path, "unsupported output format (use .png or .ppm)");
    }
}

}  // namespace entrex
