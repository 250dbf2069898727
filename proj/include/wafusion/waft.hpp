#pragma once

#include "wafusion/image.hpp"
#include "wafusion/wavelet.hpp"

#include <filesystem>
#include <span>
#include <vector>

namespace wafusion {

// Raw tensor format: magic "WAFT", three 32-bit little-endian unsigned
// integers (H, W, C), then H*W*C 64-bit little-endian floats, row-major.
// A container file is a single count byte followed by that many tensors;
// sub-band files are the count-4 case in LL, LH, HL, HH order.
inline constexpr int kWaftFormatVersion = 1;

void write_tensor(const std::filesystem::path& path, const ImageBuffer& img);
ImageBuffer read_tensor(const std::filesystem::path& path);

void write_container(const std::filesystem::path& path, std::span<const ImageBuffer> tensors);
std::vector<ImageBuffer> read_container(const std::filesystem::path& path);

void write_subbands(const std::filesystem::path& path, const SubBands& bands);
SubBands read_subbands(const std::filesystem::path& path);

}  // namespace wafusion
