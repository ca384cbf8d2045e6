#pragma once

#include <stdexcept>
#include <string>

#include "entrex/image.hpp"

namespace entrex {

/// File decode/encode failure; the message names the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Load an 8-bit PNG or binary PPM (P6). The format is sniffed from the
/// file's magic bytes. Greyscale and palette PNGs are expanded to RGB and
/// alpha is dropped; 16-bit inputs are rejected.
ImageRgb8 load_image(const std::string& path);

/// Save as PNG or PPM depending on the extension (.png / .ppm).
/// Existing files are overwritten. The pixel payload round-trips exactly.
void save_image(const ImageRgb8& image, const std::string& path);

}  // namespace entrex
