#pragma once

#include <cstdint>
#include <vector>

namespace bp {

// splitmix64. All generator randomness flows through this so that corpora are
// reproducible bit-exactly from a 64-bit seed in any implementation.
//
// Test vectors (seed = 42): first three outputs are
//   0xbdd732262feb6e95, 0x28efe333b266f103, 0x47526757130f9f52.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound). Plain modulo, by contract: the bias
    // is irrelevant for instance generation and the rule is trivial to
    // reproduce elsewhere.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace bp
