#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wafusion {

// Dense H x W x C grid of doubles, row-major with the channel index fastest.
// Pixel values are nominally in [0,1]; quantization happens only at file I/O.
struct ImageBuffer {
    uint32_t height = 0;
    uint32_t width = 0;
    uint32_t channels = 1;
    std::vector<double> data;

    ImageBuffer() = default;
    ImageBuffer(uint32_t h, uint32_t w, uint32_t c = 1, double fill = 0.0);

    double& at(uint32_t y, uint32_t x, uint32_t c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    double at(uint32_t y, uint32_t x, uint32_t c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    size_t size() const { return data.size(); }
    bool same_shape(const ImageBuffer& other) const {
        return height == other.height && width == other.width && channels == other.channels;
    }
};

// Throws ContractError unless the buffer is self-consistent (data length H*W*C).
void validate_image(const ImageBuffer& img, const char* what);

double min_value(const ImageBuffer& img);
double max_value(const ImageBuffer& img);
double mean_abs_diff(const ImageBuffer& a, const ImageBuffer& b);
double max_abs_diff(const ImageBuffer& a, const ImageBuffer& b);
double sum_squares(const ImageBuffer& img);

// Element-wise x -> x * factor.
ImageBuffer scaled(const ImageBuffer& img, double factor);

}  // namespace wafusion
