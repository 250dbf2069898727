#pragma once

#include "wafusion/image.hpp"

#include <filesystem>

namespace wafusion {

// Binary PGM (P5), maxval 255 or 65535, 16-bit samples big-endian. Pixels
// scale to/from [0,1] by maxval; writes round half away from zero.
ImageBuffer read_pgm(const std::filesystem::path& path);
void write_pgm(const ImageBuffer& img, const std::filesystem::path& path,
               uint32_t maxval = 65535);

}  // namespace wafusion
