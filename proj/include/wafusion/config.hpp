#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace wafusion {

// JSON run configuration. Unknown keys are rejected; absent keys take the
// defaults below and are echoed back into run logs.
struct RunConfig {
    uint32_t io_height = 32;
    uint32_t io_width = 32;
    uint32_t ddim_steps = 100;
    uint32_t schedule_T = 100;
    double beta_start = 1e-4;
    double beta_end = 0.02;
    std::string encoder = "pool";  // "pool" | "learned"
    uint32_t semantic_dim = 32;
    uint64_t seed = 0;
    double gamma = 0.5;
    std::string mode = "ll";  // "ll" | "all"
    uint32_t train_epochs = 200;
    uint32_t train_batch_size = 16;
    double train_learning_rate = 1e-3;
    std::string train_optimizer = "adam";  // "adam" | "sgd"

    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_json_file(const std::filesystem::path& path);
    std::string to_json_text() const;  // effective values, stable key order

    void validate() const;
};

}  // namespace wafusion
