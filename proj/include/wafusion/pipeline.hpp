#pragma once

#include "wafusion/diffusion.hpp"
#include "wafusion/image.hpp"
#include "wafusion/latent.hpp"
#include "wafusion/wavelet.hpp"

#include <memory>
#include <span>
#include <vector>

namespace wafusion {

enum class MorphMode { ll_only, all_subbands };

// Orthonormal Haar LL carries gain 2 relative to pixel intensities, so every
// plane entering the diffusion path is scaled by this factor (and by its
// inverse on exit); the denoiser and semantic encoder operate on [0,1]-range
// half-resolution images.
inline constexpr double kDiffusionPathGain = 0.5;

struct ModelBundle {
    NoiseSchedule schedule;
    std::shared_ptr<const Denoiser> denoiser;
    std::shared_ptr<const SemanticEncoder> encoder;
    uint32_t operating_height = 16;
    uint32_t operating_width = 16;
    uint32_t io_height = 32;
    uint32_t io_width = 32;
    uint32_t ddim_steps = 100;

    void validate() const;  // operating = io/2 exactly, ddim_steps <= T
};

struct MorphRequest {
    ImageBuffer subject_a;
    ImageBuffer subject_b;
    double gamma = 0.5;
    MorphMode mode = MorphMode::ll_only;
};

struct MorphStats {
    uint64_t denoiser_evals = 0;
    uint32_t operating_height = 0;
    uint32_t operating_width = 0;
    uint32_t output_height = 0;
    uint32_t output_width = 0;
};

// preprocess -> DWT -> LL morph through the diffusion autoencoder -> HF
// averaging -> IWT. all_subbands mode runs the encode/interpolate/decode path
// independently on each of the four planes instead of averaging.
ImageBuffer wafusion_morph(const MorphRequest& req, const ModelBundle& m,
                           MorphStats* stats = nullptr);

// Single-subject round trip: encode LL, DDIM invert + decode, fuse with the
// image's own high-frequency planes, IWT.
ImageBuffer reconstruct(const ImageBuffer& img, const ModelBundle& m,
                        MorphStats* stats = nullptr);

// Order-preserving; identical to sequential wafusion_morph calls. A failing
// request aborts with its index in the error message.
std::vector<ImageBuffer> batch_morph(std::span<const MorphRequest> requests,
                                     const ModelBundle& m);

struct LabeledImage {
    ImageBuffer image;
    uint32_t identity = 0;
};

// Deterministic synthetic faces: smooth radial background plus Gaussian blobs
// for two eyes and a mouth, identity-specific placement with small per-sample
// jitter. size must be a power of two >= 8. Identity parameters live in
// relative coordinates, so the same (seed, identity) renders consistently at
// any size.
std::vector<LabeledImage> make_toy_dataset(uint32_t n, uint32_t size, uint32_t identities,
                                           uint64_t seed);

}  // namespace wafusion
