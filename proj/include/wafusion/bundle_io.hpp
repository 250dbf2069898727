#pragma once

#include "wafusion/pipeline.hpp"

#include <filesystem>

namespace wafusion {

// Bundle directory layout: schedule.json, denoiser.waft (+ denoiser.json
// sidecar with layer sizes, seed and schedule parameters), encoder.waft
// (+ encoder.json). Denoiser kinds: "trainable", "zero"; encoder kinds:
// "pool", "learned".
void save_bundle(const ModelBundle& bundle, const std::filesystem::path& dir,
                 uint64_t seed = 0);
ModelBundle load_bundle(const std::filesystem::path& dir);

}  // namespace wafusion
