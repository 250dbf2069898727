#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wafusion {

// Seeded PRNG with explicitly specified mappings. std::mt19937_64 is fully
// pinned by the standard; the distribution helpers below avoid the
// implementation-defined std::*_distribution classes so that identical seeds
// reproduce identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1): 53 mantissa bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive.
    uint64_t uniform_int(uint64_t lo, uint64_t hi) {
        const uint64_t span = hi - lo + 1;
        return lo + engine_() % span;
    }

    // Standard normal via Box-Muller, one spare cached.
    double gaussian();

    // Fisher-Yates with this stream; std::shuffle's draw order is unspecified.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform_int(0, i - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Derives independent stream seeds from a base seed (splitmix64 over the pair).
uint64_t substream_seed(uint64_t base, uint64_t salt);

}  // namespace wafusion
