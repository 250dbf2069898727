#pragma once

#include "wafusion/image.hpp"

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace wafusion {

struct SemanticCode {
    std::vector<double> values;
};

// The x_T tensor produced by DDIM inversion; carries the diffusion
// operating-resolution shape.
struct StochasticCode {
    ImageBuffer tensor;
};

struct LatentPair {
    SemanticCode semantic;
    StochasticCode stochastic;
};

class SemanticEncoder {
public:
    virtual ~SemanticEncoder() = default;
    virtual SemanticCode encode(const ImageBuffer& img) const = 0;
    virtual uint32_t dimension() const = 0;
    virtual uint32_t input_height() const = 0;
    virtual uint32_t input_width() const = 0;
    virtual uint32_t input_channels() const = 0;

    // Trainable encoders expose a flat parameter view; fixed ones report zero.
    virtual size_t parameter_count() const { return 0; }
    virtual std::vector<double> parameters_flat() const { return {}; }
    virtual void set_parameters_flat(std::span<const double>) {}
};

// Fixed average-pool pyramid: block means over 1x1, 2x2, 4x4, ... grids,
// concatenated and truncated to d values. A constant image c therefore maps
// to a code of all-c entries.
class PoolPyramidEncoder final : public SemanticEncoder {
public:
    PoolPyramidEncoder(uint32_t height, uint32_t width, uint32_t channels = 1,
                       uint32_t dimension = 32);
    SemanticCode encode(const ImageBuffer& img) const override;
    uint32_t dimension() const override { return dim_; }
    uint32_t input_height() const override { return height_; }
    uint32_t input_width() const override { return width_; }
    uint32_t input_channels() const override { return channels_; }

private:
    uint32_t height_, width_, channels_, dim_;
};

// Single affine map z = W.flat(img) + b, trained jointly with the denoiser.
class LearnedEncoder final : public SemanticEncoder {
public:
    LearnedEncoder(uint32_t height, uint32_t width, uint32_t channels,
                   uint32_t dimension, uint64_t seed);
    SemanticCode encode(const ImageBuffer& img) const override;
    uint32_t dimension() const override { return dim_; }
    uint32_t input_height() const override { return height_; }
    uint32_t input_width() const override { return width_; }
    uint32_t input_channels() const override { return channels_; }

    size_t parameter_count() const override;
    std::vector<double> parameters_flat() const override;
    void set_parameters_flat(std::span<const double> params) override;

    // Accumulates dL/dparams given dL/dz for one sample; layout matches
    // parameters_flat (W row-major, then b).
    void accumulate_gradient(const ImageBuffer& img, std::span<const double> dz,
                             std::span<double> grad) const;

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& bias() const { return bias_; }

private:
    uint32_t height_, width_, channels_, dim_;
    std::vector<double> weights_;  // dim_ x (H*W*C), row-major
    std::vector<double> bias_;     // dim_
};

// gamma * u + (1 - gamma) * v; gamma weights u.
std::vector<double> lerp(std::span<const double> u, std::span<const double> v, double gamma);

// sin((1-gamma)theta)/sin(theta) * u + sin(gamma theta)/sin(theta) * v with
// theta = arccos(u.v / (|u||v|)), argument clamped to [-1,1]. Degenerate
// angles (sin theta < 1e-7) fall back to lerp with the same orientation
// (gamma = 0 -> u).
std::vector<double> slerp(std::span<const double> u, std::span<const double> v, double gamma);

// Semantic part via lerp, stochastic part flattened/slerped/reshaped. Both
// calls are ordered so that gamma weights `a`.
LatentPair interpolate_pair(const LatentPair& a, const LatentPair& b, double gamma);

SemanticCode encode_semantic(const ImageBuffer& img, const SemanticEncoder& enc);

struct Preprocessed {
    ImageBuffer image;
    bool normalization_skipped = false;  // set for zero-range inputs
};

// Center-crop to square, bilinear resize to (target_h, target_w), per-image
// min-max normalization to [0,1]. Targets must be even.
Preprocessed preprocess_one(const ImageBuffer& img, uint32_t target_h, uint32_t target_w);
std::pair<Preprocessed, Preprocessed> preprocess_xi(const ImageBuffer& a, const ImageBuffer& b,
                                                    uint32_t target_h, uint32_t target_w);

}  // namespace wafusion
